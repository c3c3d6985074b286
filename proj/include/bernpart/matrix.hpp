#ifndef BERNPART_MATRIX_HPP
#define BERNPART_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "bernpart/rational.hpp"

namespace bernpart {

/// Lower-triangular block with exact rational entries, 1-based indices
/// matching the paper's rows and columns. Structural zeros above the
/// diagonal are not stored.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(unsigned long n) : rows_(n) {
    if (n == 0) throw std::invalid_argument("TriangularMatrix: size must be positive");
    for (unsigned long m = 1; m <= n; ++m) rows_[m - 1].assign(m, Rational(0));
  }

  unsigned long size() const { return rows_.size(); }

  const Rational& entry(unsigned long m, unsigned long n) const {
    static const Rational zero(0);
    check_row(m);
    if (n == 0 || n > size()) throw std::out_of_range("TriangularMatrix: column out of range");
    return n <= m ? rows_[m - 1][n - 1] : zero;
  }

  void set(unsigned long m, unsigned long n, Rational v) {
    check_row(m);
    if (n == 0 || n > m) throw std::out_of_range("TriangularMatrix: column out of range");
    rows_[m - 1][n - 1] = std::move(v);
  }

  static TriangularMatrix identity(unsigned long n) {
    TriangularMatrix r(n);
    for (unsigned long m = 1; m <= n; ++m) r.set(m, m, 1);
    return r;
  }

 private:
  void check_row(unsigned long m) const {
    if (m == 0 || m > size()) throw std::out_of_range("TriangularMatrix: row out of range");
  }
  std::vector<std::vector<Rational>> rows_;
};

/// N x N block of the partition matrix M, with
/// M(m,n) = 2 (-1)^{m+1} C(2n-1, m) C(2m+1, 2n).
inline TriangularMatrix build_matrix(unsigned long n_size) {
  TriangularMatrix r(n_size);
  for (unsigned long m = 1; m <= n_size; ++m) {
    const int sign = (m % 2 == 1) ? 1 : -1;
    for (unsigned long n = 1; n <= m; ++n) {
      BigInt v = 2 * binomial(2 * n - 1, static_cast<long>(m)) *
                 binomial(2 * m + 1, static_cast<long>(2 * n));
      if (v != 0) r.set(m, n, Rational(sign * v));
    }
  }
  return r;
}

/// Exact inverse of the stored block by forward substitution.
inline TriangularMatrix invert_triangular(const TriangularMatrix& a) {
  const unsigned long n_size = a.size();
  TriangularMatrix inv(n_size);
  for (unsigned long m = 1; m <= n_size; ++m)
    if (a.entry(m, m) == 0)
      throw std::domain_error("invert_triangular: zero diagonal entry at row " + std::to_string(m));
  for (unsigned long m = 1; m <= n_size; ++m) {
    const Rational diag_inv = 1 / a.entry(m, m);
    inv.set(m, m, diag_inv);
    for (unsigned long n = 1; n < m; ++n) {
      Rational acc = 0;
      for (unsigned long j = n; j < m; ++j) acc += a.entry(m, j) * inv.entry(j, n);
      if (acc != 0) inv.set(m, n, -diag_inv * acc);
    }
  }
  return inv;
}

}  // namespace bernpart

#endif  // BERNPART_MATRIX_HPP
