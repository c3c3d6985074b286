#ifndef BERNPART_RATIONAL_HPP
#define BERNPART_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace bernpart {

/// Arbitrary-precision signed integer (GMP-backed).
using BigInt = boost::multiprecision::mpz_int;

/// Exact fraction of arbitrary-precision integers. GMP keeps the value
/// canonical: reduced, denominator > 0, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Serializes as "numerator/denominator" in base 10; integers drop the "/1".
inline std::string to_fraction_string(const Rational& q) { return q.str(); }

/// Canonicalizing constructor: any sign on either argument, denominator
/// nonzero. Avoids the raw two-argument Rational constructor, which does not
/// normalize a negative denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

/// k! for k >= 0.
inline BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), k);
  return r;
}

/// C(a, b); zero when b < 0 or b > a.
inline BigInt binomial(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.backend().data(), a, static_cast<unsigned long>(b));
  return r;
}

/// a(a-1)...(a-k+1) over the integers; empty product is 1.
inline BigInt falling_factorial(long a, unsigned long k) {
  BigInt r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= BigInt(a - static_cast<long>(i));
  return r;
}

}  // namespace bernpart

#endif  // BERNPART_RATIONAL_HPP
