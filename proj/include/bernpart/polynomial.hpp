#ifndef BERNPART_POLYNOMIAL_HPP
#define BERNPART_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bernpart/rational.hpp"

namespace bernpart {

/// Dense polynomial with exact rational coefficients, coefficient i beside
/// variable^i. The zero polynomial has an empty coefficient list and
/// degree() == -1 (the -infinity sentinel).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static RationalPolynomial constant(const Rational& c) {
    return c == 0 ? RationalPolynomial() : RationalPolynomial({c});
  }
  static RationalPolynomial variable() { return RationalPolynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

  RationalPolynomial operator+(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return RationalPolynomial(std::move(c));
  }
  RationalPolynomial operator-(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return RationalPolynomial(std::move(c));
  }
  RationalPolynomial operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPolynomial(std::move(c));
  }

  RationalPolynomial scale(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v *= s;
    return RationalPolynomial(std::move(c));
  }

  /// r with r(n) = p(n + c) for all n; Horner expansion in (x + c).
  RationalPolynomial shift_argument(const Rational& c) const {
    RationalPolynomial xc({c, Rational(1)});
    RationalPolynomial r;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      r = r * xc + RationalPolynomial::constant(coeffs_[i]);
    return r;
  }

  Rational evaluate(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  /// Human-readable form, e.g. "x/63 - x^2/945" or "7/360*n - 1/45".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational a = abs(c);
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? " - " : " + ";
      if (i == 0) {
        out += to_fraction_string(a);
        continue;
      }
      std::string pow = (i == 1) ? var : var + "^" + std::to_string(i);
      if (numerator(a) == 1 && denominator(a) != 1)
        out += pow + "/" + denominator(a).str();
      else if (a == 1)
        out += pow;
      else
        out += to_fraction_string(a) + "*" + pow;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// The falling factorial (n + offset)(n + offset - 1)...(n + offset - count + 1)
/// as a polynomial in n; empty product is 1.
inline RationalPolynomial falling_factorial_poly(const Rational& offset, unsigned long count) {
  RationalPolynomial r = RationalPolynomial::constant(1);
  for (unsigned long i = 0; i < count; ++i)
    r = r * RationalPolynomial({offset - Rational(BigInt(i)), Rational(1)});
  return r;
}

}  // namespace bernpart

#endif  // BERNPART_POLYNOMIAL_HPP
