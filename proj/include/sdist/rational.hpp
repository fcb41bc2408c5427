#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sdist {

// GMP integers and rationals. mpq_class keeps values canonical (lowest terms,
// positive denominator, zero as 0/1) as long as every value is built through
// arithmetic or through make_rational/parse_rational below.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts `p/q`, an integer, or (when allow_decimal) a decimal literal such as
// `-0.125` or `3.5e-2`, which is converted exactly. Throws ParseError.
Rational parse_rational(std::string_view text, bool allow_decimal = true);

// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace sdist
