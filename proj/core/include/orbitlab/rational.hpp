#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitlab {

/// Exact rational scalar. Every quantity in this library (weight entries,
/// reduction points z_k, GK dimensions) is an exact rational; no floating
/// point appears anywhere on an input or output path.
using Rat = boost::rational<long long>;

/// A weight written in coordinates, e.g. lambda = (t_1, ..., t_n).
using WeightSeq = std::vector<Rat>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

/// True iff x lies in 1/2 + Z.
inline bool is_half_odd(const Rat& x) { return x.denominator() == 2; }

/// True iff x lies in (1/2)Z, i.e. is integral or half-integral.
inline bool in_half_lattice(const Rat& x) { return x.denominator() <= 2; }

inline bool integral_difference(const Rat& a, const Rat& b) {
    return is_integer(a - b);
}

/// The relation grouping entries of a type-B/C/D weight: integral difference
/// or integral sum.
inline bool integral_difference_or_sum(const Rat& a, const Rat& b) {
    return is_integer(a - b) || is_integer(a + b);
}

inline long long floor_rat(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rat frac(const Rat& x) { return x - Rat(floor_rat(x)); }

/// Parses "a/b" or "a" with optional sign; no floating point literals.
Rat parse_rational(std::string_view text);

/// Canonical form: "a" when integral, otherwise "a/b" with b > 0 reduced.
std::string to_string(const Rat& x);

/// Comma-separated rational literals, e.g. "3/2,1,-1/2".
WeightSeq parse_weight_seq(std::string_view text);

std::string to_string(const WeightSeq& w);

}  // namespace orbitlab
