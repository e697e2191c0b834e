#pragma once

#include "gridpath/grid.hpp"

#include <optional>
#include <string>

namespace gridpath {

/// Exact rational with normalized sign and gcd-reduced terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational&) const = default;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// The published lower-bound formula admits two groupings of its numerator;
/// both are exposed, neither is silently chosen.
enum class BoundParse { literal, alt };

/// ceil(3 * (prod(n) "combined with" sum(n_1..n_{k-2}) + k - 3) / (2*n_k + n_{k-1} - 3)) + k - 2,
/// where literal multiplies prod by the sum as typeset and alt adds them.
/// Domain: k >= 3 and every n_i >= 3. Exact integer arithmetic.
long long lower_bound(const GridSpec& g, BoundParse parse);

/// (3*prod(n_1..n_{k-1}) - 2) / prod(n), exactly; algebraically equals
/// 3/n_k - 2/prod(n). Domain: k >= 2, n_k >= 3.
Rational efficiency_ratio(const GridSpec& g);

/// ceil(20 * 3^(k-3)) - 2 for k >= 2.
long long check_path_count(int k);

/// (13 * 3^(k-2) - 3) / 2 for k >= 3.
long long trail_count(int k);

struct BoundReport {
    std::optional<long long> literal_parse; // present iff k >= 3 and all n_i >= 3
    std::optional<long long> alt_parse;
    std::optional<long long> mlai_count; // present iff k >= 2 and n_k >= 3
    std::optional<Rational> ratio;
    bool literal_consistent = true; // literal_parse <= mlai_count when both present
    bool consistent = true;         // alt_parse <= mlai_count when both present
};

BoundReport bound_report(const GridSpec& g);

std::string format_report(const BoundReport& r, const GridSpec& g);

} // namespace gridpath
