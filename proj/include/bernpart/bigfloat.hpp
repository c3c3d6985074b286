#ifndef BERNPART_BIGFLOAT_HPP
#define BERNPART_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "bernpart/rational.hpp"

namespace bernpart {

/// MPFR-backed floating point with runtime precision. Rounding is to
/// nearest, ties to even, fixed for reproducibility.
using MpFloat = boost::multiprecision::mpfr_float;

constexpr unsigned kMinPrecision = 10;
constexpr unsigned kMaxPrecision = 1000;

/// Guard digits carried by every pipeline on top of the requested precision;
/// results are rounded once at the end.
inline unsigned guard_digits(unsigned precision) { return std::max(10u, precision / 10); }

inline void check_precision(unsigned precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision)
    throw std::invalid_argument("precision must be in [" + std::to_string(kMinPrecision) + ", " +
                                std::to_string(kMaxPrecision) + "]");
}

/// RAII default-precision switch for MpFloat temporaries.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10) : prev_(MpFloat::default_precision()) {
    MpFloat::default_precision(digits10);
  }
  ~ScopedPrecision() { MpFloat::default_precision(prev_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned prev_;
};

namespace detail {

/// "d.dddd...e-1" with `digits` significant digits and a minimal exponent.
inline std::string sci_string(const MpFloat& v, unsigned digits) {
  if (v == 0) return "0";
  // str(d, scientific) produces d digits after the point, i.e. d+1 significant.
  std::string s = v.str(digits > 1 ? digits - 1 : 0, std::ios_base::scientific);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  long exp = std::stol(s.substr(epos + 1));
  return mant + "e" + std::to_string(exp);
}

/// %g-style: fixed notation when the exponent is moderate, scientific otherwise.
inline std::string fixed_string(const MpFloat& v, unsigned digits) {
  if (v == 0) return "0";
  std::string sci = sci_string(v, digits);
  auto epos = sci.find('e');
  long exp = std::stol(sci.substr(epos + 1));
  if (exp < -6 || exp >= static_cast<long>(digits)) return sci;
  std::string mant = sci.substr(0, epos);
  bool neg = mant[0] == '-';
  if (neg) mant.erase(0, 1);
  mant.erase(mant.find('.'), 1);  // bare digit string
  std::string out;
  if (exp < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp - 1), '0') + mant;
  } else {
    auto ip = static_cast<std::size_t>(exp) + 1;
    if (mant.size() <= ip)
      out = mant + std::string(ip - mant.size(), '0');
    else
      out = mant.substr(0, ip) + "." + mant.substr(ip);
  }
  return (neg ? "-" : "") + out;
}

}  // namespace detail

/// Arbitrary-precision value paired with its working precision in
/// significant decimal digits. The stored value carries guard digits; str()
/// rounds once to the stated precision.
class BigFloat {
 public:
  BigFloat() : value_(0), precision_(kMinPrecision) {}
  BigFloat(MpFloat value, unsigned precision) : value_(std::move(value)), precision_(precision) {
    check_precision(precision);
  }
  BigFloat(const Rational& q, unsigned precision) : precision_(precision) {
    check_precision(precision);
    ScopedPrecision scope(precision + guard_digits(precision));
    value_ = MpFloat(q);
  }

  const MpFloat& value() const { return value_; }
  unsigned precision() const { return precision_; }
  double to_double() const { return value_.convert_to<double>(); }

  /// Decimal scientific string with explicit precision annotation,
  /// e.g. "6.579736267392906e-1@16".
  std::string str() const { return digits() + "@" + std::to_string(precision_); }
  /// The same without the annotation.
  std::string digits() const { return detail::sci_string(value_, precision_); }
  std::string fixed() const { return detail::fixed_string(value_, precision_); }

 private:
  MpFloat value_;
  unsigned precision_;
};

/// Approximation of pi with the number of leading digits certified correct.
struct PiValue {
  BigFloat value;
  unsigned certified_precision = 0;
};

namespace detail {

// Taylor series for arctan(1/k) at the current default precision; stops when
// the next term falls below the requested resolution.
inline MpFloat arctan_recip(unsigned long k, unsigned digits) {
  const MpFloat x = MpFloat(1) / k;
  const MpFloat x2 = x * x;
  const MpFloat eps = pow(MpFloat(10), -static_cast<int>(digits) - 2);
  MpFloat power = x, sum = x;
  unsigned long i = 1;
  while (power > eps) {
    power *= x2;
    sum += (i % 2 == 1 ? -power : power) / (2 * i + 1);
    ++i;
  }
  return sum;
}

}  // namespace detail

/// pi via the Machin arctangent series, validated against an independent
/// two-term arctangent formula; the two must agree through the certified
/// digits or computation aborts.
inline PiValue compute_pi_uncached(unsigned precision) {
  check_precision(precision);
  const unsigned work = precision + guard_digits(precision) + 5;
  ScopedPrecision scope(work);
  MpFloat machin = 16 * detail::arctan_recip(5, work) - 4 * detail::arctan_recip(239, work);
  MpFloat euler = 4 * (detail::arctan_recip(2, work) + detail::arctan_recip(3, work));
  if (abs(machin - euler) > pow(MpFloat(10), -static_cast<int>(precision + guard_digits(precision))) * machin)
    throw std::logic_error("compute_pi: independent series disagree");
  return PiValue{BigFloat(machin, precision), precision};
}

inline PiValue compute_pi(unsigned precision) {
  static std::mutex mutex;
  static std::map<unsigned, PiValue> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(precision);
  if (it == cache.end()) it = cache.emplace(precision, compute_pi_uncached(precision)).first;
  return it->second;
}

}  // namespace bernpart

#endif  // BERNPART_BIGFLOAT_HPP
