#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gridpath {

/// Global absolute tolerance for geometric predicates, in grid units.
/// Every predicate below also accepts an explicit epsilon; these are the
/// process-wide defaults (CLI: --eps / GRIDPATH_EPS).
double geometry_epsilon();
void set_geometry_epsilon(double eps);

/// A point in R^k, k >= 1 decided at runtime.
class PointK {
public:
    PointK() = default;
    PointK(std::initializer_list<double> xs) : coords_(xs) {}
    explicit PointK(std::vector<double> xs) : coords_(std::move(xs)) {}

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const PointK&) const = default;

private:
    std::vector<double> coords_;
};

struct Segment {
    PointK a;
    PointK b;
};

/// Axis-aligned box given by per-axis closed intervals [lo[i], hi[i]].
struct Box {
    PointK lo;
    PointK hi;
};

enum class IntersectKind { disjoint, touch, overlap };

struct IntersectionResult {
    IntersectKind kind = IntersectKind::disjoint;
    PointK point;               // touch point / overlap midpoint / closest-pair midpoint
    double min_distance = 0.0;  // closed-form min distance between the closed segments
    double overlap_length = 0.0;
};

double distance(const PointK& a, const PointK& b);
double sq_distance(const PointK& a, const PointK& b);

/// Distance from p to the closed segment s (parameter clamped to [0,1]).
double point_segment_distance(const PointK& p, const Segment& s);

bool point_on_segment(const PointK& p, const Segment& s, double eps = geometry_epsilon());

/// Closest-pair parameters (s, t) in [0,1]^2 between two segments in R^k,
/// solved via the normal equations of the two-parameter least-deviation
/// problem with explicit parallel branches (no projection to 2D).
std::pair<double, double> closest_segment_params(const Segment& s1, const Segment& s2);

/// Classifies two closed segments: disjoint if the min distance exceeds eps,
/// overlap if collinear with a shared sub-segment longer than eps,
/// touch at the single closest point otherwise.
IntersectionResult segments_intersect(const Segment& s1, const Segment& s2,
                                      double eps = geometry_epsilon());

/// True iff the triangle a,b,c has every altitude <= eps
/// (rank-1 displacement within tolerance).
bool collinear(const PointK& a, const PointK& b, const PointK& c,
               double eps = geometry_epsilon());

/// Per-axis min/max of a non-empty point list.
Box tight_aabb(const std::vector<PointK>& points);

double box_volume(const Box& b);

bool box_contains_point(const Box& b, const PointK& p, double eps = geometry_epsilon());

/// Both endpoints inside b expanded by eps on every axis (suffices by convexity).
bool contained_in(const Segment& s, const Box& b, double eps = geometry_epsilon());

std::string to_string(const PointK& p);

} // namespace gridpath
