#include "gridpath/geom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridpath {

namespace {

std::atomic<double> g_epsilon{1e-9};

void require_same_dim(const PointK& a, const PointK& b, const char* where) {
    if (a.dim() != b.dim() || a.dim() == 0) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

PointK lerp(const Segment& s, double t) {
    PointK p = s.a;
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] += t * (s.b[i] - s.a[i]);
    return p;
}

PointK midpoint(const PointK& a, const PointK& b) {
    PointK p = a;
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] = 0.5 * (a[i] + b[i]);
    return p;
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

} // namespace

double geometry_epsilon() { return g_epsilon.load(); }

void set_geometry_epsilon(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("geometry epsilon must be positive");
    g_epsilon.store(eps);
}

double sq_distance(const PointK& a, const PointK& b) {
    require_same_dim(a, b, "sq_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(const PointK& a, const PointK& b) { return std::sqrt(sq_distance(a, b)); }

double point_segment_distance(const PointK& p, const Segment& s) {
    require_same_dim(p, s.a, "point_segment_distance");
    require_same_dim(s.a, s.b, "point_segment_distance");
    double dd = 0.0, dp = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = s.b[i] - s.a[i];
        dd += d * d;
        dp += d * (p[i] - s.a[i]);
    }
    const double t = dd > 0.0 ? clamp01(dp / dd) : 0.0;
    return distance(p, lerp(s, t));
}

bool point_on_segment(const PointK& p, const Segment& s, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("point_on_segment: eps must be positive");
    return point_segment_distance(p, s) <= eps;
}

std::pair<double, double> closest_segment_params(const Segment& s1, const Segment& s2) {
    require_same_dim(s1.a, s1.b, "closest_segment_params");
    require_same_dim(s2.a, s2.b, "closest_segment_params");
    require_same_dim(s1.a, s2.a, "closest_segment_params");

    double A = 0.0, B = 0.0, C = 0.0, E = 0.0, F = 0.0;
    for (std::size_t i = 0; i < s1.a.dim(); ++i) {
        const double d1 = s1.b[i] - s1.a[i];
        const double d2 = s2.b[i] - s2.a[i];
        const double r = s1.a[i] - s2.a[i];
        A += d1 * d1;
        B += d1 * d2;
        C += d1 * r;
        E += d2 * d2;
        F += d2 * r;
    }

    if (A <= 0.0 && E <= 0.0) return {0.0, 0.0};
    if (A <= 0.0) return {0.0, clamp01(F / E)};
    if (E <= 0.0) return {clamp01(-C / A), 0.0};

    const double denom = A * E - B * B;
    // Parallel lines make denom collapse; start from s=0 and let the
    // t/s re-clamp walk the boundary of [0,1]^2 (convex objective).
    double s = denom > 1e-14 * A * E ? clamp01((B * F - C * E) / denom) : 0.0;
    double t = (B * s + F) / E;
    if (t < 0.0) {
        t = 0.0;
        s = clamp01(-C / A);
    } else if (t > 1.0) {
        t = 1.0;
        s = clamp01((B - C) / A);
    }
    return {s, t};
}

bool collinear(const PointK& a, const PointK& b, const PointK& c, double eps) {
    require_same_dim(a, b, "collinear");
    require_same_dim(b, c, "collinear");
    const double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
    const double min_side = std::min({ab, bc, ca});
    if (min_side <= eps) return true; // two points coincide: trivially rank <= 1
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double u = b[i] - a[i];
        const double v = c[i] - a[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    const double four_area_sq = std::max(uu * vv - uv * uv, 0.0);
    // max altitude = 2*Area / shortest side
    return std::sqrt(four_area_sq) <= eps * min_side;
}

IntersectionResult segments_intersect(const Segment& s1, const Segment& s2, double eps) {
    const auto [s, t] = closest_segment_params(s1, s2);
    const PointK p1 = lerp(s1, s);
    const PointK p2 = lerp(s2, t);

    IntersectionResult res;
    res.min_distance = distance(p1, p2);
    res.point = midpoint(p1, p2);
    if (res.min_distance > eps) {
        res.kind = IntersectKind::disjoint;
        return res;
    }

    const bool lines_collinear =
        collinear(s1.a, s1.b, s2.a, eps) && collinear(s1.a, s1.b, s2.b, eps);
    if (lines_collinear) {
        const double len1 = distance(s1.a, s1.b);
        if (len1 > 0.0) {
            double ta = 0.0, tb = 0.0;
            for (std::size_t i = 0; i < s1.a.dim(); ++i) {
                const double u = (s1.b[i] - s1.a[i]) / len1;
                ta += u * (s2.a[i] - s1.a[i]);
                tb += u * (s2.b[i] - s1.a[i]);
            }
            const double lo = std::max(0.0, std::min(ta, tb));
            const double hi = std::min(len1, std::max(ta, tb));
            if (hi - lo > eps) {
                res.kind = IntersectKind::overlap;
                res.overlap_length = hi - lo;
                const double mid = 0.5 * (lo + hi) / len1;
                res.point = lerp(s1, mid);
                return res;
            }
        }
    }

    res.kind = IntersectKind::touch;
    return res;
}

Box tight_aabb(const std::vector<PointK>& points) {
    if (points.empty()) throw std::invalid_argument("tight_aabb: empty point list");
    Box b{points.front(), points.front()};
    for (const PointK& p : points) {
        require_same_dim(p, b.lo, "tight_aabb");
        for (std::size_t i = 0; i < p.dim(); ++i) {
            b.lo[i] = std::min(b.lo[i], p[i]);
            b.hi[i] = std::max(b.hi[i], p[i]);
        }
    }
    return b;
}

double box_volume(const Box& b) {
    require_same_dim(b.lo, b.hi, "box_volume");
    double v = 1.0;
    for (std::size_t i = 0; i < b.lo.dim(); ++i) v *= b.hi[i] - b.lo[i];
    return v;
}

bool box_contains_point(const Box& b, const PointK& p, double eps) {
    require_same_dim(b.lo, p, "box_contains_point");
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] < b.lo[i] - eps || p[i] > b.hi[i] + eps) return false;
    }
    return true;
}

bool contained_in(const Segment& s, const Box& b, double eps) {
    return box_contains_point(b, s.a, eps) && box_contains_point(b, s.b, eps);
}

std::string to_string(const PointK& p) {
    std::string out = "(";
    char buf[40];
    for (std::size_t i = 0; i < p.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", p[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += ")";
    return out;
}

} // namespace gridpath
