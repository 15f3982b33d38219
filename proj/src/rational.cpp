#include "gakit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace gakit {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::DomainError, "cannot convert non-finite float to rational");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num = static_cast<int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(num);
  if (exp > 0)
    r *= Rational(BigInt(1) << exp);
  else if (exp < 0)
    r /= Rational(BigInt(1) << -exp);
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Rational rational_gcd(const Rational& x, const Rational& y) {
  if (x == 0) return y < 0 ? Rational(-y) : y;
  if (y == 0) return x < 0 ? Rational(-x) : x;
  BigInt a = boost::multiprecision::numerator(x), b = boost::multiprecision::denominator(x);
  BigInt c = boost::multiprecision::numerator(y), d = boost::multiprecision::denominator(y);
  Rational g(boost::multiprecision::gcd(BigInt(a * d), BigInt(c * b)), b * d);
  return g < 0 ? Rational(-g) : g;
}

std::string rational_to_string(const Rational& r) {
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

} // namespace gakit
