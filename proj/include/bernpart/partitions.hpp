#ifndef BERNPART_PARTITIONS_HPP
#define BERNPART_PARTITIONS_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "bernpart/bernoulli.hpp"
#include "bernpart/matrix.hpp"
#include "bernpart/polynomial.hpp"
#include "bernpart/report.hpp"

namespace bernpart {

/// Row m of the unsigned inverse-matrix entries b_m(n), n = 2..m, together
/// with the certified row sum |B_{2m}|.
struct PartitionRow {
  unsigned long m = 0;
  std::vector<std::pair<unsigned long, Rational>> terms;
  Rational certified_sum;
};

namespace detail {

// Process-wide inverse block, grown on demand. Leading blocks of the inverse
// of a lower-triangular matrix do not change when the block grows, so rows
// for any m <= size can be read from one inversion.
class InverseBlockCache {
 public:
  std::shared_ptr<const TriangularMatrix> at_least(unsigned long n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!inv_ || inv_->size() < n) {
      unsigned long target = inv_ ? std::max(n, 2 * inv_->size()) : std::max<unsigned long>(n, 16);
      inv_ = std::make_shared<const TriangularMatrix>(invert_triangular(build_matrix(target)));
    }
    return inv_;
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<const TriangularMatrix> inv_;
};

inline InverseBlockCache& inverse_block_cache() {
  static InverseBlockCache cache;
  return cache;
}

}  // namespace detail

/// Partition of |B_{2m}| into m-1 positive, strictly decreasing rationals.
/// The row sum is checked against bernoulli(2m) before returning. m = 1 is
/// rejected: |B_2| = 1/6 has no partition, see bernoulli(2).
inline PartitionRow partition_row(unsigned long m) {
  if (m < 2) throw std::invalid_argument("partition_row: m must be >= 2 (|B_2| = bernoulli(2))");
  auto inv = detail::inverse_block_cache().at_least(m);
  PartitionRow row;
  row.m = m;
  row.certified_sum = 0;
  for (unsigned long n = 2; n <= m; ++n) {
    Rational b = abs(inv->entry(m, n));
    row.certified_sum += b;
    row.terms.emplace_back(n, std::move(b));
  }
  if (row.certified_sum != bernoulli_abs_even(m))
    throw std::logic_error("partition_row: row sum does not equal |B_{2m}| at m = " +
                           std::to_string(m));
  return row;
}

/// The polynomials q_0..q_L generated by the paper's iteration, plus the
/// distinguished non-polynomial rule q_{-1}(n) = 1/(n-1). Every factorial
/// ratio in the iteration is realized as a falling-factorial product of
/// exactly l (resp. l-j) factors, so each q_l is a genuine degree-l
/// polynomial valid for all n.
struct QPolynomialFamily {
  std::vector<RationalPolynomial> polys;  // index l = 0..L

  Rational eval(long l, const Rational& n) const {
    if (l == -1) {
      if (n == 1) throw std::domain_error("q_{-1}(1) undefined");
      return 1 / (n - 1);
    }
    if (l < 0 || static_cast<std::size_t>(l) >= polys.size())
      throw std::out_of_range("QPolynomialFamily: l out of range");
    return polys[static_cast<std::size_t>(l)].evaluate(n);
  }
};

inline QPolynomialFamily q_polynomials(unsigned long order) {
  QPolynomialFamily fam;
  fam.polys.reserve(order + 1);
  for (unsigned long l = 0; l <= order; ++l) {
    const long ll = static_cast<long>(l);
    // (-1)^l / (2l+3)! * (n-l-3)! / (n-2l-3)!   [l falling factors from n-l-3]
    int sign = (l % 2 == 0) ? 1 : -1;
    RationalPolynomial q =
        falling_factorial_poly(Rational(-(ll + 3)), l).scale(Rational(sign, factorial(2 * l + 3)));
    for (unsigned long j = 0; j < l; ++j) {
      const long lj = static_cast<long>(j);
      // (-1)^{l+j+1} / (2l+1-2j)! * (n+j-l-1)! / (n+2j-2l-1)!  [l-j factors]
      int s = ((l + j + 1) % 2 == 0) ? 1 : -1;
      RationalPolynomial w = falling_factorial_poly(Rational(lj - ll - 1), l - j)
                                 .scale(Rational(s, factorial(2 * l + 1 - 2 * j)));
      q = q + w * fam.polys[j].shift_argument(Rational(lj - ll));
    }
    fam.polys.push_back(std::move(q));
  }
  return fam;
}

/// b_m(n) = m! n! / (2n+1)! * (n-1) * q_{m-1-n}(m), the partition term built
/// from the q-polynomial route rather than matrix inversion.
inline Rational b_via_q(unsigned long m, unsigned long n, const QPolynomialFamily& fam) {
  if (n < 2 || n > m) throw std::out_of_range("b_via_q: need 2 <= n <= m");
  const long l = static_cast<long>(m) - 1 - static_cast<long>(n);
  Rational q = fam.eval(l, Rational(BigInt(m)));
  return Rational(factorial(m) * factorial(n), factorial(2 * n + 1)) * Rational(BigInt(n - 1)) * q;
}

inline Rational b_via_q(unsigned long m, unsigned long n) {
  if (n < 2 || n > m) throw std::out_of_range("b_via_q: need 2 <= n <= m");
  const long l = static_cast<long>(m) - 1 - static_cast<long>(n);
  return b_via_q(m, n, q_polynomials(l < 0 ? 0 : static_cast<unsigned long>(l)));
}

/// Exact check of the trinomial / divided-Bernoulli identity:
/// (-1)^{n+1} (4n+2) sum_{k=0}^{n} (2n)!/(n! k! (n-k)!) B_{n+k+1}/(n+k+1) = 1.
inline VerificationReport verify_rid2(unsigned long n) {
  if (n < 1) throw std::invalid_argument("verify_rid2: n must be >= 1");
  Rational sum = 0;
  const BigInt two_n_fac = factorial(2 * n);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational weight(two_n_fac, factorial(n) * factorial(k) * factorial(n - k));
    sum += weight * bernoulli(n + k + 1) / Rational(BigInt(n + k + 1));
  }
  int sign = (n % 2 == 1) ? 1 : -1;
  Rational lhs = Rational(BigInt(sign * static_cast<long>(4 * n + 2))) * sum;
  VerificationReport r;
  r.check = "rid2";
  r.params["n"] = std::to_string(n);
  r.lhs = to_fraction_string(lhs);
  r.rhs = "1";
  r.residual = to_fraction_string(lhs - 1);
  r.pass = (lhs == 1);
  return r;
}

namespace detail {

// Coefficient of x^{k+1} in the asymptotic-ratio polynomial p_n(x), gamma
// ratios expanded as integer falling-factorial products.
inline Rational pn_coefficient(unsigned long n, unsigned long k) {
  BigInt num = falling_factorial(static_cast<long>(n) - 2, 2 * k);
  BigInt den = falling_factorial(2 * static_cast<long>(n) - 3, 2 * k) * factorial(2 * k + 1) *
               BigInt(4 * n * n - 1);
  int sign = (k % 2 == 0) ? 1 : -1;
  BigInt four_k = BigInt(1) << (2 * k);
  return Rational(sign * four_k * num, den);
}

}  // namespace detail

/// Exact check of the closed-form ratio b_m(n)/|B_{2m}|: the p_n(x) sum with
/// x^j replaced by the exact rational pi^{2j} zeta(2m-2j)/zeta(2m).
inline VerificationReport verify_exact_ratio(unsigned long m, unsigned long n) {
  if (n < 2 || n > m) throw std::invalid_argument("verify_exact_ratio: need 2 <= n <= m");
  Rational lhs = 0;
  for (unsigned long k = 0; k + 1 <= n / 2; ++k)
    lhs += detail::pn_coefficient(n, k) * zeta_ratio(static_cast<long>(m), static_cast<long>(k + 1));
  PartitionRow row = partition_row(m);
  Rational rhs = row.terms[n - 2].second / row.certified_sum;
  VerificationReport r;
  r.check = "exact-ratio";
  r.params["m"] = std::to_string(m);
  r.params["n"] = std::to_string(n);
  r.lhs = to_fraction_string(lhs);
  r.rhs = to_fraction_string(rhs);
  r.residual = to_fraction_string(lhs - rhs);
  r.pass = (lhs == rhs);
  return r;
}

/// Closed forms for |M^{-1}| along the diagonal and first two sub-diagonals.
/// Sub-diagonal values below their validity range are absent.
struct DiagonalClosedForms {
  Rational diagonal;                    // (m!)^2 / (2m+1)!
  std::optional<Rational> first_sub;    // m >= 2
  std::optional<Rational> second_sub;   // m >= 3
};

inline DiagonalClosedForms closed_form_diagonals(unsigned long m) {
  if (m < 1) throw std::invalid_argument("closed_form_diagonals: m must be >= 1");
  DiagonalClosedForms out;
  out.diagonal = Rational(factorial(m) * factorial(m), factorial(2 * m + 1));
  if (m >= 2)
    out.first_sub = Rational(1, 6) * Rational(BigInt(m - 2)) *
                    Rational(factorial(m) * factorial(m - 1), factorial(2 * m - 1));
  if (m >= 3)
    out.second_sub = Rational(7, 360) * (Rational(BigInt(m)) - Rational(8, 7)) *
                     Rational(BigInt(m - 3)) *
                     Rational(factorial(m) * factorial(m - 2), factorial(2 * m - 3));
  return out;
}

}  // namespace bernpart

#endif  // BERNPART_PARTITIONS_HPP
