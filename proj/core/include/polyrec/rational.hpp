#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace polyrec {

// Exact rational arithmetic backed by GMP.  All geometry in this library is
// done over Q; no floating point is used anywhere in the computational path.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parse "p", "-p", "p/q" or "-p/q" (optionally with surrounding spaces).
// The result is canonical (reduced, denominator > 0).
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Render canonically: integers as "p", others as "p/q" with q > 0 and
// gcd(|p|, q) = 1.  parse_rational(rational_to_string(x)) == x.
std::string rational_to_string(const Rational& q);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

} // namespace polyrec
