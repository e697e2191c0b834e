#pragma once

#include "gridpath/chain.hpp"

#include <utility>

namespace gridpath {

/// Steiner-point solution on the intersection circle of the two radius-2
/// spheres centered at (0,2,2) and (4-sqrt(3),1,1). The principal branch
/// takes y on the +discriminant root (y >= z); when that lands on the
/// forbidden plane y = 2, the y/z symmetry of the sphere pair supplies the
/// swapped solution instead.
enum class S5Branch { principal, boundary_swap };

struct S5Solution {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    S5Branch branch = S5Branch::principal;
};

/// Closed-form admissible x-range for s5_solve, approximately
/// [0.346647, 0.918696]: the discriminant vanishes at the lower endpoint
/// and y reaches its cap 4-sqrt(3) at the upper one.
std::pair<double, double> s5_interval();

S5Solution s5_solve(double x);

/// Radius at which the x=(2-sqrt(3))*(2-y), y=z diagonal line meets the
/// sphere pair: sqrt(94725 - 21288*sqrt(3))/122 < 2, so the bridge edge
/// stays clear of the middle layer for every admissible Steiner choice.
double collision_radius();
PointK collision_circle_center();  // ((4-sqrt(3))/2, 3/2, 3/2)
double collision_circle_radius();  // sqrt(8*sqrt(3)-5)/2
/// y value that a 13th/15th-link collision would require; it lies below 1,
/// outside the allowed y >= z arc.
double collision_forbidden_y();

double golden_ratio(); // (1+sqrt(5))/2

/// Self-intersecting covering paths over the 3x...x3 grid with 3^k - 1
/// edges, every edge of length sqrt(5). k in {2, 3}.
Chain m_path(int k);

/// Uncrossing covering paths of length-class 2 inside the loosened box:
/// 5 edges for k=2, 18 edges for k=3 (the 3D bridge passes through the
/// Steiner point s5_solve(s5_x)).
Chain check_path(int k, double s5_x = 0.7);

enum class CircuitVariant { F, F_prime };

/// The two six-link covering circuits for the 2x2x2 grid; both are smart
/// cycles (the start vertex is a Steiner point) and both leave the RAABB.
/// Single length classes: F -> sqrt(2)*(4+sqrt(13))/3, F_prime -> 4-sqrt(2).
Chain circuit_f222(CircuitVariant variant);

/// The parametric self-intersecting family over the 2x2x2 grid with
/// y_S2 = (1-2x)/(2(1-x)). Requires x > 0 and x != 1.
Chain pbar_path(double x_s1);

/// Root of x^3 - 2x^2 + x = 1/8 with x > 1, found by bracketed bisection:
/// the pbar parameter minimizing the tight-AABB volume, (3+sqrt(5))/4.
double minimize_aabb_volume();

struct EpsilonPathParams {
    double epsilon = 1e-3; // 0 < epsilon < (golden_ratio()-1)/2
};

/// Uncrossing perturbation of pbar_path((1+phi)/2); its tight AABB volume
/// tends to phi^5/2 ~ 5.54508 as epsilon -> 0.
Chain pbarbar_path(const EpsilonPathParams& p);

/// Six self-intersecting links of length 1+sqrt(2) covering the 2x2x2 grid
/// inside a box of volume (1+sqrt(2))^3/2.
Chain conclusion_path_222();

} // namespace gridpath
