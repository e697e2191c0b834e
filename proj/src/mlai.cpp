#include "gridpath/mlai.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridpath {

namespace {

void require_mlai_domain(const GridSpec& g) {
    if (g.rank() < 2) throw std::invalid_argument("generate_mlai: need k >= 2 (see segment_path_1d)");
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g.extent(i) < 2) throw std::invalid_argument("generate_mlai: every extent must be >= 2");
    }
}

std::string dims_label(const GridSpec& g) {
    std::string s;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) s += 'x';
        s += std::to_string(g.extent(i));
    }
    return s;
}

/// Reflected Gray-code Hamiltonian path on {0,1}^k, unit axis-aligned steps.
Chain hypercube_path(const GridSpec& g) {
    const std::size_t k = g.rank();
    Chain c;
    c.kind = ChainKind::path;
    c.label = "mlai:" + dims_label(g);
    c.dims = g.dims();
    const unsigned long long n = 1ULL << k;
    c.vertices.reserve(n);
    for (unsigned long long i = 0; i < n; ++i) {
        const unsigned long long gray = i ^ (i >> 1);
        std::vector<double> coords(k);
        for (std::size_t j = 0; j < k; ++j) coords[k - 1 - j] = (gray >> j) & 1ULL ? 1.0 : 0.0;
        c.vertices.emplace_back(std::move(coords));
    }
    c.steiner_flags.assign(c.vertices.size(), false);
    validate_chain(c);
    return c;
}

/// Serpentine enumeration of prod(extents): consecutive indices differ by
/// +-1 in exactly one coordinate, axis 0 fastest.
std::vector<std::vector<int>> boustrophedon_order(const std::vector<int>& extents) {
    std::vector<std::vector<int>> order;
    long long total = 1;
    for (int e : extents) total *= e;
    order.reserve(static_cast<std::size_t>(total));

    std::vector<int> idx(extents.size(), 0);
    std::vector<int> dir(extents.size(), 1);
    order.push_back(idx);
    for (long long step = 1; step < total; ++step) {
        for (std::size_t axis = 0; axis < extents.size(); ++axis) {
            const int nxt = idx[axis] + dir[axis];
            if (nxt >= 0 && nxt < extents[axis]) {
                idx[axis] = nxt;
                order.push_back(idx);
                break;
            }
            dir[axis] = -dir[axis];
        }
    }
    return order;
}

} // namespace

Chain generate_mlai(const GridSpec& g) {
    require_mlai_domain(g);
    if (g.longest() == 2) return hypercube_path(g);

    const std::size_t k = g.rank();
    const double span = g.longest() - 1;                  // column length, n_k - 1
    const double rise = std::sqrt(span * span - 0.25);    // join height from column bottoms
    const double dip = span - rise;                       // join height from column tops

    std::vector<int> lateral(g.dims().begin(), g.dims().end() - 1);
    const auto columns = boustrophedon_order(lateral);

    Chain c;
    c.kind = ChainKind::path;
    c.label = "mlai:" + dims_label(g);
    c.dims = g.dims();
    c.vertices.reserve(3 * columns.size() - 1);
    c.steiner_flags.reserve(3 * columns.size() - 1);

    auto push = [&](const std::vector<int>& col, double xk, bool steiner) {
        std::vector<double> coords(k);
        for (std::size_t i = 0; i + 1 < k; ++i) coords[i] = col[i];
        coords[k - 1] = xk;
        c.vertices.emplace_back(std::move(coords));
        c.steiner_flags.push_back(steiner);
    };
    auto push_join = [&](const std::vector<int>& from, const std::vector<int>& to, double xk) {
        std::vector<double> coords(k);
        for (std::size_t i = 0; i + 1 < k; ++i) coords[i] = from[i];
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (to[i] != from[i]) coords[i] = 0.5 * (from[i] + to[i]);
        }
        coords[k - 1] = xk;
        c.vertices.emplace_back(std::move(coords));
        c.steiner_flags.push_back(true);
    };

    bool at_top = false;
    push(columns[0], 0.0, false);
    push(columns[0], span, false);
    at_top = true;
    for (std::size_t ci = 1; ci < columns.size(); ++ci) {
        push_join(columns[ci - 1], columns[ci], at_top ? dip : rise);
        push(columns[ci], at_top ? span : 0.0, false);
        push(columns[ci], at_top ? 0.0 : span, false);
        at_top = !at_top;
    }

    validate_chain(c);
    return c;
}

long long mlai_edge_count(const GridSpec& g) {
    require_mlai_domain(g);
    if (g.longest() < 3) throw std::invalid_argument("mlai_edge_count: requires n_k >= 3");
    long long prod = 1;
    for (std::size_t i = 0; i + 1 < g.rank(); ++i) prod *= g.extent(i);
    return 3 * prod - 2;
}

Chain segment_path_1d(int n1) {
    if (n1 < 2) throw std::invalid_argument("segment_path_1d: need n1 >= 2");
    Chain c;
    c.kind = ChainKind::path;
    c.label = "path1d:" + std::to_string(n1);
    c.dims = {n1};
    c.vertices = {PointK{0.0}, PointK{static_cast<double>(n1 - 1)}};
    c.steiner_flags = {false, false};
    validate_chain(c);
    return c;
}

} // namespace gridpath
