#pragma once

#include "gridpath/chain.hpp"
#include "gridpath/grid.hpp"

namespace gridpath {

/// Builds the uncrossing covering path for any grid with k >= 2 and all
/// n_i >= 2, inside the MAABB.
///
/// For n_k >= 3 the path sweeps one full column of the longest axis per
/// lattice position of the remaining axes, joining consecutive columns
/// through Steiner points at half-integer lateral positions: a V-join at
/// height n_k-1-sqrt((n_k-1)^2-1/4) between two column tops, a wedge-join
/// at height sqrt((n_k-1)^2-1/4) between two column bottoms. Columns are
/// ordered boustrophedon over the lateral index space, so layer bridges are
/// the same two-edge joins along the axis that changes. This yields
/// 3*prod(n_1..n_{k-1}) - 2 edges, all of Euclidean length n_k - 1, ending
/// on a grid corner.
///
/// For n_k == 2 (hence all n_i == 2) it returns the Hamiltonian unit-step
/// path over the hypercube in reflected Gray-code order: 2^k - 1 unit edges,
/// consecutive edges perpendicular.
Chain generate_mlai(const GridSpec& g);

/// 3 * prod(n_1..n_{k-1}) - 2, the edge count of generate_mlai for n_k >= 3.
long long mlai_edge_count(const GridSpec& g);

/// The trivial one-dimensional covering path (0)-(n1 - 1) inside its MAABB.
Chain segment_path_1d(int n1);

} // namespace gridpath
