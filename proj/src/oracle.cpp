#include "gridpath/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gridpath::oracle {

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bisect_root: tol must be positive");
    if (!(lo < hi)) throw std::invalid_argument("bisect_root: need lo < hi");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("bisect_root: no sign change on bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket exhausted at double precision
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> sphere_residuals(const PointK& p) {
    if (p.dim() != 3) throw std::invalid_argument("sphere_residuals: point must be 3-dimensional");
    const double s3 = std::sqrt(3.0);
    const double r1 = p[0] * p[0] + (p[1] - 2) * (p[1] - 2) + (p[2] - 2) * (p[2] - 2) - 4.0;
    const double x2 = p[0] - 4 + s3;
    const double r2 = x2 * x2 + (p[1] - 1) * (p[1] - 1) + (p[2] - 1) * (p[2] - 1) - 4.0;
    return {r1, r2};
}

double dense_min_distance(const Segment& s1, const Segment& s2, int samples) {
    if (samples < 2) throw std::invalid_argument("dense_min_distance: samples must be >= 2");
    const std::size_t k = s1.a.dim();
    if (s1.b.dim() != k || s2.a.dim() != k || s2.b.dim() != k) {
        throw std::invalid_argument("dense_min_distance: dimension mismatch");
    }
    const double step = 1.0 / (samples - 1);
    std::vector<double> q(static_cast<std::size_t>(samples) * k);
    for (int j = 0; j < samples; ++j) {
        const double t = j * step;
        for (std::size_t i = 0; i < k; ++i) q[j * k + i] = s2.a[i] + t * (s2.b[i] - s2.a[i]);
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> p(k);
    for (int a = 0; a < samples; ++a) {
        const double t = a * step;
        for (std::size_t i = 0; i < k; ++i) p[i] = s1.a[i] + t * (s1.b[i] - s1.a[i]);
        for (int j = 0; j < samples; ++j) {
            double d = 0.0;
            const double* qj = &q[j * k];
            for (std::size_t i = 0; i < k; ++i) {
                const double di = p[i] - qj[i];
                d += di * di;
            }
            if (d < best) best = d;
        }
    }
    return std::sqrt(best);
}

double dense_point_segment_distance(const PointK& p, const Segment& s, int samples) {
    if (samples < 2) throw std::invalid_argument("dense_point_segment_distance: samples must be >= 2");
    const std::size_t k = p.dim();
    const double step = 1.0 / (samples - 1);
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < samples; ++a) {
        const double t = a * step;
        double d = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double di = p[i] - (s.a[i] + t * (s.b[i] - s.a[i]));
            d += di * di;
        }
        if (d < best) best = d;
    }
    return std::sqrt(best);
}

} // namespace gridpath::oracle
