#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "gakit/error.hpp"

namespace gakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Principal square root when the operand is a perfect square (numerator and
// denominator both perfect integer squares); nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

// gcd extended to rationals: gcd(a/b, c/d) = gcd(ad, cb) / bd. Nonnegative.
Rational rational_gcd(const Rational& x, const Rational& y);

std::string rational_to_string(const Rational& r);

} // namespace gakit
