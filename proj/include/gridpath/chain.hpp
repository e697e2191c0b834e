#pragma once

#include "gridpath/geom.hpp"

#include <string>
#include <vector>

namespace gridpath {

enum class ChainKind { path, trail, cycle };

/// An ordered vertex sequence with a kind tag and provenance metadata.
/// Cycles list the closing vertex explicitly (first == last), so edges are
/// always consecutive vertex pairs.
struct Chain {
    std::vector<PointK> vertices;
    ChainKind kind = ChainKind::path;
    std::string label;
    std::vector<bool> steiner_flags; // per vertex: true = not a point of the grid
    std::vector<int> dims;           // extents of the generating grid

    std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }
    std::size_t edge_count() const { return vertices.size() < 2 ? 0 : vertices.size() - 1; }
    Segment edge(std::size_t i) const { return {vertices[i], vertices[i + 1]}; }
};

/// Throws std::invalid_argument unless: >= 2 vertices of equal dimension,
/// steiner_flags sized per vertex, consecutive vertices farther apart than
/// eps, cycles closed within eps, and (for path/trail) no three consecutive
/// vertices collinear.
void validate_chain(const Chain& c, double eps = geometry_epsilon());

std::string to_string(ChainKind kind);
ChainKind chain_kind_from_string(const std::string& s);

} // namespace gridpath
