#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace invstep {

// All scalars in the library are exact rationals. Arithmetic never rounds;
// floating point appears only in CLI-facing decimal rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& x) { return x.sign(); }

/// Parses "p/q", plain integers, and finite decimals ("-3.25") exactly.
Rational parse_rational(const std::string& s);

/// "p/q" when the denominator is not 1, "p" otherwise.
std::string fraction_string(const Rational& x);

/// Rounded decimal rendering with the given number of significant digits.
std::string decimal_string(const Rational& x, int sig_digits = 12);

Rational pow_rational(const Rational& base, unsigned exp);

/// Exact square root if x is a perfect square of a rational, else no value.
bool rational_sqrt(const Rational& x, Rational& out);

}  // namespace invstep
