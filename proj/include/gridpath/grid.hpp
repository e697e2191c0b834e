#pragma once

#include "gridpath/geom.hpp"

#include <vector>

namespace gridpath {

/// The k-tuple (n_1,...,n_k), n_1 <= n_2 <= ... <= n_k, n_i >= 1, defining
/// the grid {0..n_1-1} x ... x {0..n_k-1}. Unsorted tuples are rejected;
/// use sorted_dims() to permute explicitly.
class GridSpec {
public:
    explicit GridSpec(std::vector<int> dims);

    std::size_t rank() const { return dims_.size(); } // k
    int extent(std::size_t i) const { return dims_[i]; }
    int longest() const { return dims_.back(); } // n_k
    const std::vector<int>& dims() const { return dims_; }
    long long point_count() const;

    bool operator==(const GridSpec&) const = default;

private:
    std::vector<int> dims_;
};

/// Explicit permutation helper: ascending copy of dims (GridSpec itself
/// refuses unsorted input).
std::vector<int> sorted_dims(std::vector<int> dims);

/// All prod(n_i) grid points in lexicographic order.
std::vector<PointK> enumerate_points(const GridSpec& g);

Box maabb(const GridSpec& g); // prod [0, n_i - 1]
Box raabb(const GridSpec& g); // prod [0, n_i]

/// The corner set V: points with every coordinate at an axis extreme
/// {0, n_i - 1}; |V| = 2^(#axes with n_i >= 2).
struct CornerSet {
    std::vector<PointK> points;
};
CornerSet corner_set(const GridSpec& g);

bool is_grid_point(const GridSpec& g, const PointK& p, double eps = geometry_epsilon());

/// Nearest integer lattice coordinates of p (valid when is_grid_point holds).
std::vector<int> grid_coords(const PointK& p);

} // namespace gridpath
