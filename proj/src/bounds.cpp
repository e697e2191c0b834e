#include "gridpath/bounds.hpp"

#include "gridpath/mlai.hpp"

#include <numeric>
#include <stdexcept>

namespace gridpath {

namespace {

long long ceil_div(long long a, long long b) {
    // b > 0, a >= 0 in every use below
    return (a + b - 1) / b;
}

long long pow3(int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

long long lower_bound(const GridSpec& g, BoundParse parse) {
    const int k = static_cast<int>(g.rank());
    if (k < 3) throw std::invalid_argument("lower_bound: requires k >= 3");
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g.extent(i) < 3) throw std::invalid_argument("lower_bound: requires every n_i >= 3");
    }
    long long prod = 1, sum = 0;
    for (int i = 0; i < k; ++i) prod *= g.extent(i);
    for (int i = 0; i < k - 2; ++i) sum += g.extent(i);
    const long long denom = 2LL * g.extent(k - 1) + g.extent(k - 2) - 3;
    const long long numer =
        parse == BoundParse::literal ? 3 * (prod * sum + k - 3) : 3 * (prod + sum + k - 3);
    return ceil_div(numer, denom) + k - 2;
}

Rational efficiency_ratio(const GridSpec& g) {
    const long long h = mlai_edge_count(g); // validates k >= 2, n_k >= 3
    return Rational(h, g.point_count());
}

long long check_path_count(int k) {
    if (k < 2) throw std::invalid_argument("check_path_count: requires k >= 2");
    if (k == 2) return ceil_div(20, 3) - 2; // 5
    return 20 * pow3(k - 3) - 2;
}

long long trail_count(int k) {
    if (k < 3) throw std::invalid_argument("trail_count: requires k >= 3");
    return (13 * pow3(k - 2) - 3) / 2;
}

BoundReport bound_report(const GridSpec& g) {
    BoundReport r;
    if (g.rank() >= 2 && g.longest() >= 3) {
        r.mlai_count = mlai_edge_count(g);
        r.ratio = efficiency_ratio(g);
    }
    const bool lb_domain = [&] {
        if (g.rank() < 3) return false;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            if (g.extent(i) < 3) return false;
        }
        return true;
    }();
    if (lb_domain) {
        r.literal_parse = lower_bound(g, BoundParse::literal);
        r.alt_parse = lower_bound(g, BoundParse::alt);
        if (r.mlai_count) {
            r.literal_consistent = *r.literal_parse <= *r.mlai_count;
            r.consistent = *r.alt_parse <= *r.mlai_count;
        }
    }
    return r;
}

std::string format_report(const BoundReport& r, const GridSpec& g) {
    std::string out = "dims=";
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.extent(i));
    }
    out += '\n';
    auto line = [&](const char* key, const std::optional<long long>& v) {
        out += key;
        out += '=';
        out += v ? std::to_string(*v) : "n/a";
        out += '\n';
    };
    line("literal_parse", r.literal_parse);
    line("alt_parse", r.alt_parse);
    line("mlai_count", r.mlai_count);
    out += "ratio=";
    out += r.ratio ? r.ratio->str() : "n/a";
    out += '\n';
    out += std::string("literal_consistent=") + (r.literal_consistent ? "true" : "false") + "\n";
    out += std::string("consistent=") + (r.consistent ? "true" : "false") + "\n";
    return out;
}

} // namespace gridpath
