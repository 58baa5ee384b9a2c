#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or a plain decimal like "-0.25" into an exact rational.
// No exponents, no whitespace. Throws InputError on malformed input.
Rat parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
// parse_rational(format_rational(x)) == x for all x.
std::string format_rational(const Rat& value);

// Least common multiple of the denominators of a list of rationals (>= 1).
Int common_denominator(const std::vector<Rat>& values);

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace mm
