#include "gridpath/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridpath {

GridSpec::GridSpec(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("GridSpec: need at least one axis");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 1) throw std::invalid_argument("GridSpec: every extent must be >= 1");
        if (i > 0 && dims_[i - 1] > dims_[i]) {
            throw std::invalid_argument(
                "GridSpec: extents must be ascending (n1 <= n2 <= ... <= nk); "
                "use sorted_dims() to permute explicitly");
        }
    }
}

long long GridSpec::point_count() const {
    long long n = 1;
    for (int d : dims_) n *= d;
    return n;
}

std::vector<int> sorted_dims(std::vector<int> dims) {
    std::sort(dims.begin(), dims.end());
    return dims;
}

std::vector<PointK> enumerate_points(const GridSpec& g) {
    const std::size_t k = g.rank();
    std::vector<PointK> out;
    out.reserve(static_cast<std::size_t>(g.point_count()));
    std::vector<int> idx(k, 0);
    while (true) {
        std::vector<double> coords(k);
        for (std::size_t i = 0; i < k; ++i) coords[i] = idx[i];
        out.emplace_back(std::move(coords));
        // lexicographic order: last axis varies fastest
        std::size_t axis = k;
        while (axis > 0) {
            --axis;
            if (++idx[axis] < g.extent(axis)) break;
            idx[axis] = 0;
            if (axis == 0) return out;
        }
    }
}

Box maabb(const GridSpec& g) {
    std::vector<double> lo(g.rank(), 0.0), hi(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) hi[i] = g.extent(i) - 1;
    return {PointK(lo), PointK(hi)};
}

Box raabb(const GridSpec& g) {
    std::vector<double> lo(g.rank(), 0.0), hi(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) hi[i] = g.extent(i);
    return {PointK(lo), PointK(hi)};
}

CornerSet corner_set(const GridSpec& g) {
    const std::size_t k = g.rank();
    CornerSet v;
    std::vector<std::size_t> choice(k, 0);
    while (true) {
        std::vector<double> coords(k);
        for (std::size_t i = 0; i < k; ++i) coords[i] = choice[i] == 0 ? 0.0 : g.extent(i) - 1;
        v.points.emplace_back(std::move(coords));
        std::size_t axis = 0;
        for (; axis < k; ++axis) {
            // axes with n_i == 1 have a single extreme, no second choice
            if (choice[axis] == 0 && g.extent(axis) >= 2) {
                choice[axis] = 1;
                break;
            }
            choice[axis] = 0;
        }
        if (axis == k) break;
    }
    return v;
}

bool is_grid_point(const GridSpec& g, const PointK& p, double eps) {
    if (p.dim() != g.rank()) return false;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double r = std::round(p[i]);
        if (std::abs(p[i] - r) > eps) return false;
        if (r < -0.5 || r > g.extent(i) - 0.5) return false;
    }
    return true;
}

std::vector<int> grid_coords(const PointK& p) {
    std::vector<int> out(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) out[i] = static_cast<int>(std::llround(p[i]));
    return out;
}

} // namespace gridpath
