#ifndef BERNPART_BERNOULLI_HPP
#define BERNPART_BERNOULLI_HPP

#include <map>
#include <mutex>
#include <stdexcept>

#include "bernpart/rational.hpp"

namespace bernpart {

/// Append-only memo of even-index Bernoulli numbers. Values are computed
/// from the defining recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0 solved for
/// B_k; odd indices >= 3 never enter the cache (they are zero) and B_1 is
/// fixed to -1/2.
class BernoulliCache {
 public:
  Rational get(unsigned long k) {
    if (k == 0) return 1;
    if (k == 1) return Rational(-1, 2);
    if (k % 2 == 1) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = even_.find(k);
    if (it != even_.end()) return it->second;
    // B_k = -1/(k+1) * [ C(k+1,0) B_0 + C(k+1,1) B_1 + sum_{even j>=2}^{k-2} C(k+1,j) B_j ]
    for (unsigned long m = first_missing_; m <= k; m += 2) {
      Rational acc = Rational(BigInt(1))                       // C(m+1,0) B_0
                     + Rational(BigInt(binomial(m + 1, 1))) * Rational(-1, 2);
      for (unsigned long j = 2; j + 2 <= m; j += 2)
        acc += Rational(binomial(m + 1, static_cast<long>(j))) * even_.at(j);
      even_.emplace(m, -acc / Rational(BigInt(m + 1)));
    }
    first_missing_ = k + 2;
    return even_.at(k);
  }

 private:
  std::mutex mutex_;
  std::map<unsigned long, Rational> even_;
  unsigned long first_missing_ = 2;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

/// B_k with B_0 = 1, B_1 = -1/2, B_{2n+1} = 0 for n >= 1.
inline Rational bernoulli(unsigned long k) { return bernoulli_cache().get(k); }

/// |B_{2m}|.
inline Rational bernoulli_abs_even(unsigned long m) { return abs(bernoulli(2 * m)); }

/// Exact value of pi^{2k} zeta(2m-2k) / zeta(2m), i.e.
/// |B_{2m-2k}| / |B_{2m}| * (2m)! / (2m-2k)! * 4^{-k}.
inline Rational zeta_ratio(long m, long k) {
  if (m < 1) throw std::invalid_argument("zeta_ratio: m must be >= 1");
  if (k < 0 || k >= m) throw std::invalid_argument("zeta_ratio: need 0 <= k < m");
  const unsigned long um = static_cast<unsigned long>(m);
  const unsigned long uk = static_cast<unsigned long>(k);
  Rational r = bernoulli_abs_even(um - uk) / bernoulli_abs_even(um);
  r *= Rational(factorial(2 * um), factorial(2 * (um - uk)));
  BigInt four_k = 1;
  four_k <<= 2 * uk;
  return r / Rational(four_k);
}

}  // namespace bernpart

#endif  // BERNPART_BERNOULLI_HPP
