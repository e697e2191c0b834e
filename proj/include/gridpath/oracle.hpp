#pragma once

#include "gridpath/geom.hpp"

#include <functional>
#include <utility>

namespace gridpath::oracle {

/// Bracketed bisection: requires f(lo)*f(hi) < 0, returns the bracket
/// midpoint once the bracket width is <= tol.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Signed residuals of the two radius-2 spheres centered at (0,2,2) and
/// (4-sqrt(3),1,1) evaluated at a 3D point.
std::pair<double, double> sphere_residuals(const PointK& p);

/// Min distance over a samples x samples parametric lattice of the two
/// closed segments. Upper-bounds the true min distance; converges to it
/// within ~2*maxlen/samples. Intentionally slow and independent of the
/// closed-form closest-point path it cross-checks.
double dense_min_distance(const Segment& s1, const Segment& s2, int samples);

/// Same idea for point-to-segment distance.
double dense_point_segment_distance(const PointK& p, const Segment& s, int samples);

} // namespace gridpath::oracle
