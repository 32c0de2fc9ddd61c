#include <doctest.h>

#include <random>

#include "laplace/bell_polynomials.hpp"
#include "test_support.hpp"

using laplace::bell_from_potential;
using laplace::bell_table;
using laplace::BellTable;
using laplace::NormalizedSeries;
using laplace::potential_integer_table;
using laplace::potential_row;
using laplace::PotentialRow;
using laplace::PotentialTable;
using laplace::Rational;
using testsupport::Poly;
using testsupport::poly_inverse;
using testsupport::poly_mul;
using testsupport::poly_pow;
using testsupport::potential_brute;
using testsupport::random_series;

namespace {

Poly tail_poly(const NormalizedSeries& f, int n_max) {
  Poly u(n_max + 1, Rational(0));
  for (int i = 1; i <= n_max; ++i) u[i] = f.at(i);
  return u;
}

}  // namespace

TEST_CASE("series accessor pads with zeros") {
  NormalizedSeries f{{Rational(1, 2), Rational(-3)}};
  CHECK(f.at(0) == Rational(1));
  CHECK(f.at(1) == Rational(1, 2));
  CHECK(f.at(2) == Rational(-3));
  CHECK(f.at(3) == Rational(0));
  CHECK(f.at(-1) == Rational(0));
}

TEST_CASE("bell table equals brute-force series powers") {
  std::mt19937_64 rng(7);
  const int n_max = 10;
  for (int trial = 0; trial < 8; ++trial) {
    const NormalizedSeries f = random_series(rng, n_max);
    const BellTable bell = bell_table(f, n_max);
    const Poly u = tail_poly(f, n_max);
    for (int k = 0; k <= n_max; ++k) {
      const Poly p = poly_pow(u, k, n_max);
      for (int n = 0; n <= n_max; ++n) CHECK(bell.at(n, k) == p[n]);
    }
    CHECK(bell.at(n_max + 1, 0) == Rational(0));  // outside the triangle
    CHECK(bell.at(3, 5) == Rational(0));
  }
}

TEST_CASE("potential row equals the binomial-series oracle") {
  std::mt19937_64 rng(11);
  const int n_max = 9;
  const Rational exponents[] = {Rational(-3, 2), Rational(2),  Rational(7, 3),
                                Rational(0),     Rational(-1), Rational(5)};
  for (int trial = 0; trial < 5; ++trial) {
    const NormalizedSeries f = random_series(rng, n_max);
    const BellTable bell = bell_table(f, n_max);
    for (const Rational& rho : exponents) {
      const Poly expect = potential_brute(rho, f, n_max);
      const PotentialRow direct = potential_row(rho, f, n_max);
      const PotentialRow via_bell = potential_row(rho, bell);
      for (int n = 0; n <= n_max; ++n) {
        CHECK(direct.at(n) == expect[n]);
        CHECK(via_bell.at(n) == expect[n]);
      }
    }
  }
}

TEST_CASE("negative unit exponent matches series inversion") {
  std::mt19937_64 rng(13);
  const int n_max = 8;
  const NormalizedSeries f = random_series(rng, n_max);
  Poly one_plus_u = tail_poly(f, n_max);
  one_plus_u[0] = Rational(1);
  const Poly inv = poly_inverse(one_plus_u, n_max);
  const PotentialRow row = potential_row(Rational(-1), f, n_max);
  for (int n = 0; n <= n_max; ++n) CHECK(row.at(n) == inv[n]);
}

TEST_CASE("integer potential table matches explicit powers") {
  std::mt19937_64 rng(17);
  const int n_max = 8;
  const NormalizedSeries f = random_series(rng, n_max);
  const PotentialTable table = potential_integer_table(f, n_max);
  Poly one_plus_u = tail_poly(f, n_max);
  one_plus_u[0] = Rational(1);
  for (int j = 0; j <= n_max; ++j) {
    const Poly p = poly_pow(one_plus_u, j, n_max);
    for (int n = 0; n <= n_max; ++n) CHECK(table.at(j, n) == p[n]);
  }
  CHECK(table.at(0, 0) == Rational(1));
  CHECK(table.at(2, n_max + 1) == Rational(0));
}

TEST_CASE("bell triangle is recoverable from integer potential rows") {
  std::mt19937_64 rng(19);
  const int n_max = 9;
  for (int trial = 0; trial < 4; ++trial) {
    const NormalizedSeries f = random_series(rng, n_max);
    const BellTable direct = bell_table(f, n_max);
    const BellTable inverted = bell_from_potential(f, n_max);
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k) CHECK(direct.at(n, k) == inverted.at(n, k));
  }
}

TEST_CASE("potential rows satisfy the multiplicative identity") {
  // (1+u)^rho (1+u)^sigma = (1+u)^(rho+sigma), coefficient by coefficient.
  std::mt19937_64 rng(23);
  const int n_max = 7;
  const NormalizedSeries f = random_series(rng, n_max);
  const Rational rho(-3, 2), sigma(7, 3);
  const PotentialRow ra = potential_row(rho, f, n_max);
  const PotentialRow rb = potential_row(sigma, f, n_max);
  Poly a(n_max + 1, Rational(0)), b(n_max + 1, Rational(0));
  for (int n = 0; n <= n_max; ++n) {
    a[n] = ra.at(n);
    b[n] = rb.at(n);
  }
  const Poly prod = poly_mul(a, b, n_max);
  const PotentialRow sum = potential_row(rho + sigma, f, n_max);
  for (int n = 0; n <= n_max; ++n) CHECK(sum.at(n) == prod[n]);
}
