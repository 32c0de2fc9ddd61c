#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "laplace/number_kernels.hpp"
#include "test_support.hpp"

using laplace::binomial_integer;
using laplace::binomial_rational;
using laplace::factorial;
using laplace::gamma_half_ratio;
using laplace::Integer;
using laplace::Rational;
using laplace::rising_factorial;
using laplace::stirling_first;
using laplace::stirling_second;
using laplace::StirlingKind;
using laplace::StirlingTriangle;
using testsupport::Poly;
using testsupport::poly_pow;

TEST_CASE("factorial and integer binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK(binomial_integer(10, 3) == 120);
  CHECK(binomial_integer(10, 0) == 1);
  CHECK(binomial_integer(10, 11) == 0);
  CHECK(binomial_integer(10, -1) == 0);
  CHECK_THROWS_AS(binomial_integer(-2, 1), std::invalid_argument);
}

TEST_CASE("rational binomial and rising factorial") {
  CHECK(binomial_rational(Rational(-1, 2), 2).str() == "3/8");
  CHECK(binomial_rational(Rational(5), 2) == Rational(10));
  CHECK(binomial_rational(Rational(3), 5) == Rational(0));  // terminates like an integer binomial
  CHECK(binomial_rational(Rational(7, 3), 0) == Rational(1));
  CHECK(rising_factorial(Rational(1, 2), 3).str() == "15/8");
  CHECK(rising_factorial(Rational(-2), 3) == Rational(0));
  CHECK(rising_factorial(Rational(4), 0) == Rational(1));
}

TEST_CASE("half-integer factorial ratio") {
  // Gamma(m + 1/2)/sqrt(pi) for m = 0, 1, 2, 3.
  CHECK(gamma_half_ratio(0) == Rational(1));
  CHECK(gamma_half_ratio(1) == Rational(1, 2));
  CHECK(gamma_half_ratio(2) == Rational(3, 4));
  CHECK(gamma_half_ratio(3) == Rational(15, 8));
  // Recurrence Gamma(z+1) = z Gamma(z).
  for (int m = 1; m < 30; ++m)
    CHECK(gamma_half_ratio(m) == gamma_half_ratio(m - 1) * Rational(2 * m - 1, 2));
}

TEST_CASE("stirling numbers match known rows") {
  // Unsigned first kind: x(x+1)...(x+n-1) = sum_k s(n,k) x^k.
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(5, 3) == 35);
  CHECK(stirling_first(6, 1) == 120);
  CHECK(stirling_first(5, 0) == 0);
  CHECK(stirling_first(5, 6) == 0);
  CHECK(stirling_first(-1, 0) == 0);
  // Second kind: set partitions.
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(5, 3) == 25);
  CHECK(stirling_second(6, 2) == 31);
  CHECK(stirling_second(5, 5) == 1);
  CHECK(stirling_second(5, 0) == 0);
}

TEST_CASE("first kind matches its generating function") {
  // n!/j! [x^n] (-log(1+x))^j = (-1)^n s(n,j) for the unsigned numbers.
  const int n_max = 12;
  Poly minus_log(n_max + 1, Rational(0));
  for (int m = 1; m <= n_max; ++m)
    minus_log[m] = Rational((m % 2 == 0) ? 1 : -1, m);
  for (int j = 0; j <= 6; ++j) {
    const Poly p = poly_pow(minus_log, j, n_max);
    for (int n = 0; n <= n_max; ++n) {
      const Rational expected = p[n] * Rational(factorial(n)) / Rational(factorial(j)) *
                                Rational(n % 2 == 0 ? 1 : -1);
      CHECK(expected == Rational(stirling_first(n, j)));
    }
  }
}

TEST_CASE("second kind matches its generating function") {
  // n!/j! [x^n] (e^x - 1)^j = S(n,j).
  const int n_max = 12;
  Poly expm1(n_max + 1, Rational(0));
  for (int m = 1; m <= n_max; ++m) expm1[m] = Rational(1) / Rational(factorial(m));
  for (int j = 0; j <= 6; ++j) {
    const Poly p = poly_pow(expm1, j, n_max);
    for (int n = 0; n <= n_max; ++n)
      CHECK(p[n] * Rational(factorial(n)) / Rational(factorial(j)) ==
            Rational(stirling_second(n, j)));
  }
  // Row sums of the second kind are Bell numbers; spot-check B_5 = 52.
  Integer bell5 = 0;
  for (int k = 0; k <= 5; ++k) bell5 += stirling_second(5, k);
  CHECK(bell5 == 52);
}

TEST_CASE("triangle extension is monotone and seedable") {
  StirlingTriangle tri(StirlingKind::first_unsigned, 3);
  CHECK(tri.max_row() == 3);
  tri.extend(6);
  CHECK(tri.max_row() == 6);
  tri.extend(2);  // never shrinks
  CHECK(tri.max_row() == 6);
  CHECK(tri.at(6, 1) == 120);
  CHECK(tri.at(6, 9) == 0);

  StirlingTriangle fresh(StirlingKind::first_unsigned, 8);
  StirlingTriangle target(StirlingKind::first_unsigned, 0);
  target.seed(fresh.rows());
  CHECK(target.max_row() == 8);
  CHECK(target.at(8, 3) == fresh.at(8, 3));

  std::vector<std::vector<Integer>> bad = fresh.rows();
  bad[4][4] = 99;  // diagonal anchor must be 1
  CHECK_THROWS_AS(target.seed(bad), std::invalid_argument);
  std::vector<std::vector<Integer>> ragged = fresh.rows();
  ragged[3].push_back(0);
  CHECK_THROWS_AS(target.seed(ragged), std::invalid_argument);
}
