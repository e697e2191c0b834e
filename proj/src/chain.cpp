#include "gridpath/chain.hpp"

#include <stdexcept>

namespace gridpath {

void validate_chain(const Chain& c, double eps) {
    if (c.vertices.size() < 2) throw std::invalid_argument("chain: need at least 2 vertices");
    const std::size_t k = c.vertices.front().dim();
    if (k == 0) throw std::invalid_argument("chain: zero-dimensional vertex");
    for (const PointK& v : c.vertices) {
        if (v.dim() != k) throw std::invalid_argument("chain: mixed vertex dimensions");
    }
    if (!c.steiner_flags.empty() && c.steiner_flags.size() != c.vertices.size()) {
        throw std::invalid_argument("chain: steiner_flags must match vertex count");
    }
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        if (distance(c.vertices[i], c.vertices[i + 1]) <= eps) {
            throw std::invalid_argument("chain: degenerate edge at vertex " + std::to_string(i));
        }
    }
    if (c.kind == ChainKind::cycle) {
        if (distance(c.vertices.front(), c.vertices.back()) > eps) {
            throw std::invalid_argument("chain: cycle must close (first vertex == last)");
        }
    } else {
        for (std::size_t i = 0; i + 2 < c.vertices.size(); ++i) {
            if (collinear(c.vertices[i], c.vertices[i + 1], c.vertices[i + 2], eps)) {
                throw std::invalid_argument("chain: consecutive edges collinear at vertex " +
                                            std::to_string(i + 1));
            }
        }
    }
}

std::string to_string(ChainKind kind) {
    switch (kind) {
        case ChainKind::path: return "path";
        case ChainKind::trail: return "trail";
        case ChainKind::cycle: return "cycle";
    }
    return "path";
}

ChainKind chain_kind_from_string(const std::string& s) {
    if (s == "path") return ChainKind::path;
    if (s == "trail") return ChainKind::trail;
    if (s == "cycle") return ChainKind::cycle;
    throw std::invalid_argument("unknown chain kind: " + s);
}

} // namespace gridpath
