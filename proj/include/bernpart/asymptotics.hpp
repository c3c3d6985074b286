#ifndef BERNPART_ASYMPTOTICS_HPP
#define BERNPART_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "bernpart/bigfloat.hpp"
#include "bernpart/partitions.hpp"

namespace bernpart {

/// The conjectured asymptotic-ratio polynomials p_n(x), indexed by n with
/// p_1 the zero polynomial; a(n) = p_n(pi^2).
struct PnFamily {
  std::vector<RationalPolynomial> polys;  // polys[n] for n = 1..N; polys[0] unused

  const RationalPolynomial& at(unsigned long n) const {
    if (n == 0 || n >= polys.size()) throw std::out_of_range("PnFamily: n out of range");
    return polys[n];
  }
};

/// Exact coefficients from the floor(n/2)-term sum, gamma ratios expanded as
/// falling-factorial products.
inline PnFamily pn_polynomials(unsigned long n_max) {
  if (n_max < 1) throw std::invalid_argument("pn_polynomials: N must be >= 1");
  PnFamily fam;
  fam.polys.resize(n_max + 1);
  for (unsigned long n = 2; n <= n_max; ++n) {
    std::vector<Rational> coeffs(n / 2 + 1, Rational(0));
    for (unsigned long k = 0; k + 1 <= n / 2; ++k)
      coeffs[k + 1] = detail::pn_coefficient(n, k);
    fam.polys[n] = RationalPolynomial(std::move(coeffs));
  }
  return fam;
}

namespace detail {

/// The footnote's product-form expression for the same polynomial:
/// 1/(4n^2-1) * sum_k (-2)^k x^{k+1}/(2k+1)! * prod_{l=1}^{k} (n-k-1-l)/(2n-1-2l).
inline RationalPolynomial footnote_polynomial(unsigned long n) {
  std::vector<Rational> coeffs((n - 1) / 2 + 2, Rational(0));
  for (unsigned long k = 0; k <= (n - 1) / 2; ++k) {
    Rational prod = 1;
    for (unsigned long l = 1; l <= k; ++l)
      prod *= Rational(static_cast<long>(n - k - 1) - static_cast<long>(l),
                       2 * static_cast<long>(n) - 1 - 2 * static_cast<long>(l));
    int sign = (k % 2 == 0) ? 1 : -1;
    BigInt two_k = BigInt(1) << k;
    coeffs[k + 1] = Rational(sign * two_k, factorial(2 * k + 1)) * prod;
  }
  RationalPolynomial p{std::move(coeffs)};
  return p.scale(Rational(1, BigInt(4 * n * n - 1)));
}

inline MpFloat evaluate(const RationalPolynomial& p, const MpFloat& x) {
  MpFloat r = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + MpFloat(p.coeffs()[i]);
  return r;
}

inline MpFloat pi_at(unsigned work_digits) {
  return compute_pi(std::min<unsigned>(work_digits, kMaxPrecision)).value.value();
}

}  // namespace detail

/// a(n) = p_n(pi^2), at the requested precision.
inline BigFloat a_ratio(unsigned long n, unsigned precision) {
  if (n < 2) throw std::invalid_argument("a_ratio: n must be >= 2");
  check_precision(precision);
  const unsigned work = precision + guard_digits(precision);
  ScopedPrecision scope(work);
  MpFloat pi = detail::pi_at(work);
  return BigFloat(detail::evaluate(pn_polynomials(n).at(n), pi * pi), precision);
}

/// Exact check of the second-order difference equation
/// (2n+1) p_n(x) = (2n-3) p_{n-1}(x) - x/(2n-1) p_{n-2}(x), n = 3..N,
/// with p_1 = 0 and p_2 = x/15.
inline VerificationReport verify_difference_equation(unsigned long n_max) {
  if (n_max < 3) throw std::invalid_argument("verify_difference_equation: N must be >= 3");
  PnFamily fam = pn_polynomials(n_max);
  VerificationReport r;
  r.check = "difference-eq";
  r.params["N"] = std::to_string(n_max);
  r.pass = fam.at(2) == RationalPolynomial({Rational(0), Rational(1, 15)}) && fam.at(1).is_zero();
  r.residual = "0";
  const RationalPolynomial x = RationalPolynomial::variable();
  for (unsigned long n = 3; r.pass && n <= n_max; ++n) {
    const long ln = static_cast<long>(n);
    RationalPolynomial lhs = fam.at(n).scale(Rational(2 * ln + 1));
    RationalPolynomial rhs = fam.at(n - 1).scale(Rational(2 * ln - 3)) -
                             (x * fam.at(n - 2)).scale(Rational(1, 2 * ln - 1));
    if (lhs != rhs) {
      r.pass = false;
      r.params["first_failure_n"] = std::to_string(n);
      r.lhs = lhs.str();
      r.rhs = rhs.str();
      r.residual = (lhs - rhs).str();
    }
  }
  return r;
}

/// Coefficient-wise equality of the gamma-ratio sum and the footnote's
/// product form, for 2 <= n <= N.
inline VerificationReport verify_footnote_form(unsigned long n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_footnote_form: N must be >= 2");
  PnFamily fam = pn_polynomials(n_max);
  VerificationReport r;
  r.check = "footnote";
  r.params["N"] = std::to_string(n_max);
  r.pass = true;
  r.residual = "0";
  for (unsigned long n = 2; r.pass && n <= n_max; ++n) {
    RationalPolynomial alt = detail::footnote_polynomial(n);
    if (fam.at(n) != alt) {
      r.pass = false;
      r.params["first_failure_n"] = std::to_string(n);
      r.lhs = fam.at(n).str();
      r.rhs = alt.str();
      r.residual = (fam.at(n) - alt).str();
    }
  }
  return r;
}

/// t_n(x), the exact polynomial with t_n(pi^2) = pi (2 pi)^n j_{n-1}(pi),
/// from the spherical-Bessel recurrence at argument pi:
/// t_{n+1} = 2(2n-1) t_n - 4x t_{n-1}, t_1 = 0, t_2 = 4x.
inline RationalPolynomial bessel_poly_t(unsigned long n) {
  if (n < 1) throw std::invalid_argument("bessel_poly_t: n must be >= 1");
  RationalPolynomial prev;                                        // t_1
  RationalPolynomial cur({Rational(0), Rational(4)});             // t_2
  if (n == 1) return prev;
  const RationalPolynomial four_x({Rational(0), Rational(4)});
  for (unsigned long i = 2; i < n; ++i) {
    RationalPolynomial next = cur.scale(Rational(2 * (2 * static_cast<long>(i) - 1))) - four_x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Exact polynomial form of the half-integer Bessel closed form:
/// n!/(2n+1)! * t_n(x) = p_n(x), 2 <= n <= N. No floating point anywhere.
inline VerificationReport verify_bessel_closed_form(unsigned long n_max) {
  if (n_max < 2) throw std::invalid_argument("verify_bessel_closed_form: N must be >= 2");
  PnFamily fam = pn_polynomials(n_max);
  VerificationReport r;
  r.check = "bessel-poly";
  r.params["N"] = std::to_string(n_max);
  r.pass = true;
  r.residual = "0";
  for (unsigned long n = 2; r.pass && n <= n_max; ++n) {
    RationalPolynomial lhs = bessel_poly_t(n).scale(Rational(factorial(n), factorial(2 * n + 1)));
    if (lhs != fam.at(n)) {
      r.pass = false;
      r.params["first_failure_n"] = std::to_string(n);
      r.lhs = lhs.str();
      r.rhs = fam.at(n).str();
      r.residual = (lhs - fam.at(n)).str();
    }
  }
  return r;
}

/// Large-m estimate of b_m(n): 2 (2m)! (2 pi)^{-2m} p_n(pi^2), i.e. the
/// leading |B_{2m}| asymptotic times a(n).
inline BigFloat approximant(unsigned long m, unsigned long n, unsigned precision) {
  if (m < 2 || n < 2 || n > m) throw std::invalid_argument("approximant: need 2 <= n <= m");
  check_precision(precision);
  const unsigned work = precision + guard_digits(precision);
  ScopedPrecision scope(work);
  MpFloat pi = detail::pi_at(work);
  MpFloat lead = 2 * MpFloat(factorial(2 * m)) / pow(2 * pi, 2 * static_cast<int>(m));
  return BigFloat(lead * detail::evaluate(pn_polynomials(n).at(n), pi * pi), precision);
}

/// b_m(n)/|B_{2m}| for m = n..m_max, rounded from the exact rationals.
inline std::vector<std::pair<unsigned long, BigFloat>> ratio_convergence(unsigned long n,
                                                                         unsigned long m_max,
                                                                         unsigned precision) {
  if (n < 2 || m_max < n) throw std::invalid_argument("ratio_convergence: need 2 <= n <= m_max");
  check_precision(precision);
  std::vector<std::pair<unsigned long, BigFloat>> out;
  for (unsigned long m = n; m <= m_max; ++m) {
    PartitionRow row = partition_row(m);
    out.emplace_back(m, BigFloat(Rational(row.terms[n - 2].second / row.certified_sum), precision));
  }
  return out;
}

/// Residual 1 - sum_{n=2}^{N} p_n(pi^2); the partition-of-unity convergence
/// check. Flags (never silently ignores) a precision too low to resolve the
/// residual.
inline VerificationReport sum_to_unity(unsigned long n_max, unsigned precision) {
  if (n_max < 2) throw std::invalid_argument("sum_to_unity: N must be >= 2");
  if (precision < 30) throw std::invalid_argument("sum_to_unity: precision must be >= 30");
  check_precision(precision);
  const unsigned work = precision + guard_digits(precision);
  ScopedPrecision scope(work);
  MpFloat pi = detail::pi_at(work);
  MpFloat x = pi * pi;
  PnFamily fam = pn_polynomials(n_max);
  MpFloat sum = 0;
  for (unsigned long n = 2; n <= n_max; ++n) sum += detail::evaluate(fam.at(n), x);
  MpFloat residual = 1 - sum;
  VerificationReport r;
  r.check = "sum-unity";
  r.params["N"] = std::to_string(n_max);
  r.params["precision"] = std::to_string(precision);
  r.lhs = "1";
  r.rhs = detail::sci_string(sum, precision);
  r.residual = detail::sci_string(residual, 8);
  const MpFloat floor_resolvable = pow(MpFloat(10), -static_cast<int>(work) + 5);
  if (abs(residual) <= floor_resolvable) {
    r.pass = false;
    r.params["note"] = "residual below resolvable threshold at this precision";
  } else {
    r.pass = true;
  }
  return r;
}

/// Parameters for a numeric check of the sinc identity.
struct SincCheckConfig {
  Rational x;            // sample point
  unsigned long terms;   // truncation length L >= 1
  unsigned precision;    // working digits >= 10
};

/// Numeric check of
/// 1 = sinc(pi x) + 2 sum_{l=1}^{L} (-1)^l sin(pi sqrt(l^2+x^2))/(pi sqrt(l^2+x^2)),
/// reporting both the raw residual at L and the tail-averaged residual
/// (mean of the partial sums at L-1 and L).
inline VerificationReport verify_sinc_identity(const SincCheckConfig& cfg) {
  if (cfg.terms < 1) throw std::invalid_argument("verify_sinc_identity: L must be >= 1");
  check_precision(cfg.precision);
  const unsigned work = cfg.precision + guard_digits(cfg.precision);
  ScopedPrecision scope(work);
  MpFloat pi = detail::pi_at(work);
  MpFloat x(cfg.x);
  MpFloat x2 = x * x;
  MpFloat sum = (cfg.x == 0) ? MpFloat(1) : MpFloat(sin(pi * x) / (pi * x));
  MpFloat prev_partial = sum;
  // At x = 0 every tail term is sin(pi l)/(pi l) = 0 identically.
  for (unsigned long l = 1; cfg.x != 0 && l <= cfg.terms; ++l) {
    prev_partial = sum;
    MpFloat arg = pi * sqrt(l * l + x2);
    MpFloat term = 2 * sin(arg) / arg;
    sum += (l % 2 == 1) ? -term : term;
  }
  MpFloat raw = abs(1 - sum);
  MpFloat averaged = abs(1 - (sum + prev_partial) / 2);
  // Tail terms behave like x^2/l^2, so truncation error is O(x^2/L).
  MpFloat tol = (cfg.x == 0) ? pow(MpFloat(10), -static_cast<int>(cfg.precision))
                             : 10 * x2 / MpFloat(cfg.terms);
  VerificationReport r;
  r.check = "sinc-identity";
  r.params["x"] = to_fraction_string(cfg.x);
  r.params["L"] = std::to_string(cfg.terms);
  r.params["precision"] = std::to_string(cfg.precision);
  r.params["tolerance"] = detail::sci_string(tol, 4);
  r.params["averaged_residual"] = detail::sci_string(averaged, 8);
  r.lhs = "1";
  r.rhs = detail::sci_string(sum, cfg.precision);
  r.residual = detail::sci_string(raw, 8);
  r.pass = (raw <= tol) || (averaged <= tol);
  return r;
}

namespace detail {

// S_n(x) = (4n^2-1) p_n(x)/x as an exact polynomial; p_n has no constant term.
inline RationalPolynomial sinc_limit_partial(unsigned long n) {
  const RationalPolynomial p = pn_polynomials(n).at(n);
  std::vector<Rational> c;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) c.push_back(p.coeffs()[i]);
  return RationalPolynomial(std::move(c)).scale(Rational(BigInt(4 * n * n - 1)));
}

inline MpFloat sinc_limit_residual(unsigned long n, const Rational& x) {
  Rational s = sinc_limit_partial(n).evaluate(x);
  if (x == 0) return abs(MpFloat(s) - 1);
  MpFloat root = sqrt(MpFloat(x));
  return abs(MpFloat(s) - sin(root) / root);
}

}  // namespace detail

/// Convergence of the truncated hypergeometric sum back to the sinc
/// function: compares S_n(x*) with sinc(sqrt(x*)) at a generic point
/// (default x* = 4) and checks the error shrank relative to n/2. The paper
/// states no rate, so only monotone improvement is asserted.
inline VerificationReport verify_sinc_limit(unsigned long n, unsigned precision,
                                            const Rational& x = Rational(4)) {
  if (n < 2) throw std::invalid_argument("verify_sinc_limit: n must be >= 2");
  if (x < 0) throw std::invalid_argument("verify_sinc_limit: x must be >= 0");
  check_precision(precision);
  const unsigned work = precision + guard_digits(precision);
  ScopedPrecision scope(work);
  MpFloat residual = detail::sinc_limit_residual(n, x);
  VerificationReport r;
  r.check = "sinc-limit";
  r.params["n"] = std::to_string(n);
  r.params["x"] = to_fraction_string(x);
  r.params["precision"] = std::to_string(precision);
  r.lhs = detail::sci_string(MpFloat(detail::sinc_limit_partial(n).evaluate(x)), precision);
  if (x == 0) {
    r.rhs = "1";
  } else {
    MpFloat root = sqrt(MpFloat(x));
    r.rhs = detail::sci_string(sin(root) / root, precision);
  }
  r.residual = detail::sci_string(residual, 8);
  if (n <= 4) {
    r.pass = residual < 1;
  } else {
    MpFloat earlier = detail::sinc_limit_residual(n / 2, x);
    r.params["reference_n"] = std::to_string(n / 2);
    r.params["reference_residual"] = detail::sci_string(earlier, 8);
    r.pass = (residual == 0) || residual < earlier;
  }
  return r;
}

}  // namespace bernpart

#endif  // BERNPART_ASYMPTOTICS_HPP
