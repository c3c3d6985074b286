#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bernpart/bernoulli.hpp"
#include "bernpart/polynomial.hpp"
#include "bernpart/rational.hpp"

using namespace bernpart;

namespace {

// Independent oracle: repeated multiplication.
BigInt factorial_oracle(unsigned long k) {
  BigInt r = 1;
  for (unsigned long i = 2; i <= k; ++i) r *= i;
  return r;
}

// Independent oracle: Pascal's triangle.
BigInt binomial_oracle(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
  std::vector<BigInt> row{1};
  for (unsigned long i = 1; i <= a; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (unsigned long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

// Independent oracle: Akiyama-Tanigawa algorithm (B_1 = +1/2 convention;
// even indices are what we compare).
Rational bernoulli_oracle(unsigned long n) {
  std::vector<Rational> a(n + 1);
  for (unsigned long m = 0; m <= n; ++m) {
    a[m] = Rational(1, BigInt(m + 1));
    for (unsigned long j = m; j >= 1; --j) a[j - 1] = Rational(BigInt(j)) * (a[j - 1] - a[j]);
  }
  return a[0];
}

Rational rnd_rational(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  return Rational(num(gen), den(gen));
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(21) == BigInt("51090942171709440000"));
  for (unsigned long k = 0; k <= 30; ++k) CHECK(factorial(k) == factorial_oracle(k));
}

TEST_CASE("binomial") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(1, 1) == 1);  // C(2n-1, m) at n = m = 1
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  for (unsigned long a = 0; a <= 25; ++a)
    for (long b = 0; b <= static_cast<long>(a); ++b) CHECK(binomial(a, b) == binomial_oracle(a, b));
}

TEST_CASE("bernoulli values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(7) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
}

TEST_CASE("bernoulli signs and odd zeros") {
  for (unsigned long n = 1; n <= 60; ++n) {
    Rational b = bernoulli(2 * n);
    if (n % 2 == 1)
      CHECK(b > 0);
    else
      CHECK(b < 0);
    CHECK(bernoulli(2 * n + 1) == 0);
  }
}

TEST_CASE("bernoulli agrees with Akiyama-Tanigawa through index 120") {
  for (unsigned long k = 0; k <= 120; k += 2) CHECK(bernoulli(k) == bernoulli_oracle(k));
}

TEST_CASE("polynomial arithmetic basics") {
  RationalPolynomial x = RationalPolynomial::variable();
  RationalPolynomial zero;
  RationalPolynomial p({Rational(1, 3), Rational(-2), Rational(5, 7)});
  CHECK(p + zero == p);
  CHECK(x * x == RationalPolynomial({Rational(0), Rational(0), Rational(1)}));
  CHECK(zero.degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.scale(Rational(2)).coeff(1) == Rational(-4));
}

TEST_CASE("shift_argument expands binomially") {
  // q_1(n) = 7n/360 - 1/45; q_1(n-1) = 7n/360 - 15/360
  RationalPolynomial q1({Rational(-1, 45), Rational(7, 360)});
  RationalPolynomial shifted = q1.shift_argument(Rational(-1));
  CHECK(shifted == RationalPolynomial({Rational(-15, 360), Rational(7, 360)}));
  for (long n = 0; n <= 3; ++n)
    CHECK(shifted.evaluate(Rational(n)) == q1.evaluate(Rational(n - 1)));
}

TEST_CASE("shift_argument is a group action") {
  std::mt19937 gen(20260826);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> coeffs;
    std::uniform_int_distribution<int> deg(0, 6);
    int d = deg(gen);
    for (int i = 0; i <= d; ++i) coeffs.push_back(rnd_rational(gen));
    RationalPolynomial p(coeffs);
    Rational c = rnd_rational(gen), e = rnd_rational(gen);
    CHECK(p.shift_argument(c).shift_argument(e) == p.shift_argument(c + e));
    CHECK(p.shift_argument(0) == p);
  }
}

TEST_CASE("zeta_ratio closed forms") {
  CHECK(zeta_ratio(2, 1) == 15);          // pi^2 zeta(2)/zeta(4) = 90/6
  CHECK(zeta_ratio(3, 1) == Rational(21, 2));  // 945/90
  CHECK(zeta_ratio(7, 0) == 1);
  CHECK_THROWS_AS(zeta_ratio(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(zeta_ratio(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(zeta_ratio(0, 0), std::invalid_argument);
}

TEST_CASE("zeta_ratio telescopes") {
  for (long m = 2; m <= 30; ++m)
    for (long k = 0; k < m; ++k)
      for (long j = 0; k + j < m; ++j)
        CHECK(zeta_ratio(m, k + j) == zeta_ratio(m, k) * zeta_ratio(m - k, j));
}

TEST_CASE("rational serialization") {
  CHECK(to_fraction_string(Rational(-691, 2730)) == "-691/2730");
  CHECK(to_fraction_string(Rational(4, 2)) == "2");
  CHECK(to_fraction_string(make_rational(3, -6)) == "-1/2");  // canonicalized
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(rational_from_string("-691/2730") == Rational(-691, 2730));
}
