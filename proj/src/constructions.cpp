#include "gridpath/constructions.hpp"

#include "gridpath/grid.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridpath {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt10 = std::sqrt(10.0);
const double kSqrt13 = std::sqrt(13.0);
const double kPhi = (1.0 + kSqrt5) / 2.0;

// M-path tail constants: the diagonal Steiner point sqrt(5/2)*(1,1) and the
// 3D exit vertex whose last edge threads the body-center (1,1,1).
const double kMDiag = std::sqrt(5.0 / 2.0);
const double kMExitXY = kSqrt10 / 12.0 * (6.0 - std::sqrt(24.0 - 3.0 * kSqrt10));
const double kMExitZ = 0.5 * std::sqrt(5.0 / 3.0 * (4.0 + kSqrt10));

// check-path constants
const double kYLow = 2.0 - kSqrt3;  // 0.2679
const double kYHigh = 4.0 - kSqrt3; // 2.2679

double s5_discriminant(double x) {
    return (32.0 * kSqrt3 - 84.0) * x * x + (432.0 - 212.0 * kSqrt3) * x + 336.0 * kSqrt3 - 601.0;
}

void finish(Chain& c, std::vector<int> dims, ChainKind kind, std::string label) {
    c.kind = kind;
    c.label = std::move(label);
    c.dims = std::move(dims);
    const GridSpec g{c.dims};
    c.steiner_flags.resize(c.vertices.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        c.steiner_flags[i] = !is_grid_point(g, c.vertices[i]);
    }
    validate_chain(c);
}

std::string real_suffix(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::pair<double, double> s5_interval() {
    const double lower = 2.0 - kSqrt3 / 2.0 - std::sqrt((87.0 + 128.0 * kSqrt3) / 498.0);
    const double upper =
        (65.0 * (2.0 - kSqrt3) - std::sqrt(916.0 * kSqrt3 - 1549.0)) / (8.0 * (5.0 - 2.0 * kSqrt3));
    return {lower, upper};
}

S5Solution s5_solve(double x) {
    const auto [lo, hi] = s5_interval();
    const double slack = 1e-12;
    if (!(x >= lo - slack && x <= hi + slack)) {
        throw std::domain_error("s5_solve: x outside the admissible interval");
    }
    double disc = s5_discriminant(x);
    if (disc < 0.0) {
        if (disc < -1e-9) throw std::domain_error("s5_solve: negative discriminant");
        disc = 0.0; // interval endpoint, zero within roundoff
    }
    const double root = std::sqrt(disc);
    const double base = (8.0 - 2.0 * kSqrt3) * x + 8.0 * kSqrt3 - 13.0;
    double y = (root + base) / 4.0;
    double z = (-root + base) / 4.0;
    S5Branch branch = S5Branch::principal;
    if (std::abs(y - 2.0) <= geometry_epsilon()) {
        std::swap(y, z); // the sphere pair is symmetric under y <-> z
        branch = S5Branch::boundary_swap;
    }
    const double y_min = 1.5 - std::sqrt((466.0 * kSqrt3 - 333.0) / 249.0);
    if (y < y_min - 1e-9 || y > kYHigh + 1e-9 || z > 2.0 + 1e-9) {
        throw std::domain_error("s5_solve: solution violates the Steiner constraints");
    }
    return {x, y, z, branch};
}

double collision_radius() { return std::sqrt(94725.0 - 21288.0 * kSqrt3) / 122.0; }

PointK collision_circle_center() { return PointK{(4.0 - kSqrt3) / 2.0, 1.5, 1.5}; }

double collision_circle_radius() { return std::sqrt(8.0 * kSqrt3 - 5.0) / 2.0; }

double collision_forbidden_y() {
    return (161.0 + 2.0 * kSqrt3 - std::sqrt(20092.0 * kSqrt3 - 17383.0)) / 104.0;
}

double golden_ratio() { return kPhi; }

Chain m_path(int k) {
    Chain c;
    if (k == 2) {
        c.vertices = {{1, 2}, {2, 0}, {0, 1}, {2, 2}, {1, 0},
                      {0, 2}, {2, 1}, {0, 0}, {kMDiag, kMDiag}};
        finish(c, {3, 3}, ChainKind::path, "m33");
    } else if (k == 3) {
        c.vertices = {{2, 0, 0}, {0, 1, 0}, {2, 2, 0}, {1, 0, 0}, {0, 2, 0}, {1, 2, 2},
                      {0, 0, 2}, {2, 1, 2}, {0, 2, 2}, {1, 0, 2}, {2, 2, 2}, {0, 1, 2},
                      {2, 0, 2}, {2, 2, 1}, {0, 1, 1}, {2, 0, 1}, {1, 2, 1}, {0, 0, 1},
                      {2, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 0}, {1, 1, 2}, {2, 1, 0},
                      {0, 0, 0}, {kMDiag, kMDiag, 0}, {kMExitXY, kMExitXY, kMExitZ}};
        finish(c, {3, 3, 3}, ChainKind::path, "m333");
    } else {
        throw std::invalid_argument("m_path: only k = 2 and k = 3 are defined");
    }
    return c;
}

Chain check_path(int k, double s5_x) {
    Chain c;
    if (k == 2) {
        c.vertices = {{0, 2}, {0, 0}, {2, 0}, {2, 2}, {1, kYLow}, {1, kYHigh}};
        finish(c, {3, 3}, ChainKind::path, "check33");
    } else if (k == 3) {
        const S5Solution s5 = s5_solve(s5_x);
        c.vertices = {{0, 2, 0},
                      {0, 0, 0},
                      {2, 0, 0},
                      {2, 2, 0},
                      {1, kYLow, 0},
                      {1, kYHigh, 0},
                      {1, kYHigh, 2},
                      {1, kYLow, 2},
                      {2, 2, 2},
                      {2, 0, 2},
                      {0, 0, 2},
                      {0, 2, 2},
                      {s5.x, s5.y, s5.z},
                      {kYHigh, 1, 1},
                      {kYLow, 1, 1},
                      {2, 0, 1},
                      {0, 0, 1},
                      {0, 2, 1},
                      {2, 2, 1}};
        finish(c, {3, 3, 3}, ChainKind::path, "check333:x=" + real_suffix(s5_x));
    } else {
        throw std::invalid_argument("check_path: only k = 2 and k = 3 are defined");
    }
    return c;
}

Chain circuit_f222(CircuitVariant variant) {
    Chain c;
    if (variant == CircuitVariant::F) {
        const double lo6 = -(1.0 + kSqrt13) / 6.0;
        const double hi6 = (7.0 + kSqrt13) / 6.0;
        const double lo4 = -(1.0 + kSqrt13) / 4.0;
        const double hi4 = (5.0 + kSqrt13) / 4.0;
        const double top = (3.0 + kSqrt13) / 4.0;
        c.vertices = {{lo6, lo6, 0}, {hi6, hi6, 0},  {lo4, 0.5, top}, {hi6, lo6, 0},
                      {lo6, hi6, 0}, {hi4, 0.5, top}, {lo6, lo6, 0}};
        finish(c, {2, 2, 2}, ChainKind::cycle, "f222");
    } else {
        const double lo = 1.0 - kSqrt2;
        const double hi = kSqrt2;
        const double apex = 2.0 * kSqrt3 - std::sqrt(1.5);
        c.vertices = {{lo, lo, 0}, {hi, hi, 0},        {0.5, 0.5, apex}, {hi, lo, 0},
                      {lo, hi, 0}, {0.5, 0.5, apex},   {lo, lo, 0}};
        finish(c, {2, 2, 2}, ChainKind::cycle, "fprime222");
    }
    return c;
}

Chain pbar_path(double x_s1) {
    if (!(x_s1 > 0.0)) throw std::invalid_argument("pbar_path: requires x_s1 > 0");
    if (std::abs(1.0 - x_s1) < 1e-12) throw std::invalid_argument("pbar_path: x_s1 = 1 is singular");
    const double y_s2 = (1.0 - 2.0 * x_s1) / (2.0 * (1.0 - x_s1));
    Chain c;
    c.vertices = {{0, 1, 0},           {0, 0, 0}, {x_s1, 0, x_s1}, {0.5, y_s2, 0.5},
                  {1.0 - x_s1, 0, x_s1}, {1, 0, 0}, {1, 1, 0}};
    finish(c, {2, 2, 2}, ChainKind::path, "pbar222:x=" + real_suffix(x_s1));
    return c;
}

double minimize_aabb_volume() {
    const auto cubic = [](double x) { return ((x - 2.0) * x + 1.0) * x - 0.125; };
    double lo = 1.0, hi = 2.0;
    double flo = cubic(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = cubic(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

Chain pbarbar_path(const EpsilonPathParams& p) {
    const double eps = p.epsilon;
    if (!(eps > 0.0 && eps < (kPhi - 1.0) / 2.0)) {
        throw std::invalid_argument("pbarbar_path: requires 0 < epsilon < (phi-1)/2");
    }
    const double half_up = (1.0 + kPhi) / 2.0;
    const double half_dn = (1.0 - kPhi) / 2.0;
    Chain c;
    c.vertices = {{0, 1, 0},
                  {0, 0, 0},
                  {half_up, 0, half_up},
                  {0.5, 1.0 + kPhi, 0.5},
                  {half_dn + eps, 2.0 * kPhi * eps, half_up - eps},
                  {1, 4.0 * kPhi * eps / (1.0 - kPhi + 2.0 * eps), 0},
                  {1, 1, 0}};
    finish(c, {2, 2, 2}, ChainKind::path, "pbarbar222:eps=" + real_suffix(eps));
    return c;
}

Chain conclusion_path_222() {
    const double r = 1.0 / kSqrt2;
    Chain c;
    c.vertices = {{-r, 0, 1 + r}, {1, 0, 0},   {-r, 1 + r, 0},    {0.5, 0.5, 1 + r},
                  {1 + r, 1 + r, 0}, {0, 0, 0}, {1 + r, 0, 1 + r}};
    finish(c, {2, 2, 2}, ChainKind::path, "conclusion222");
    return c;
}

} // namespace gridpath
