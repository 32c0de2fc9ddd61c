#include <doctest.h>

#include <vector>

#include "laplace/bell_polynomials.hpp"
#include "laplace/coefficients.hpp"
#include "laplace/gamma_asymptotics.hpp"
#include "laplace/number_kernels.hpp"

using laplace::coeffs_direct;
using laplace::diagonal_coefficients;
using laplace::gamma_integral_problem;
using laplace::gamma_integral_problem_mirror;
using laplace::LaplaceProblem;
using laplace::NormalizedSeries;
using laplace::potential_closed_form_log;
using laplace::potential_integer_table;
using laplace::PotentialTable;
using laplace::q_polynomial;
using laplace::QPolynomial;
using laplace::Rational;
using laplace::ScaledCoefficients;
using laplace::stirling_closed_form;
using laplace::stirling_via_pipeline;
using laplace::StirlingCoefficients;
using laplace::StirlingVariant;

namespace {

const std::vector<Rational> kKnownGamma = {Rational(1), Rational(-1, 12), Rational(1, 288),
                                           Rational(139, 51840), Rational(-571, 2488320)};

}  // namespace

TEST_CASE("factorial-kernel problems are built as documented") {
  const LaplaceProblem p = gamma_integral_problem(3);
  CHECK(p.alpha == Rational(2));
  CHECK(p.beta == Rational(1));
  CHECK(p.a == std::vector<Rational>{Rational(1, 2), Rational(-1, 3), Rational(1, 4),
                                     Rational(-1, 5)});
  CHECK(p.b[0] == Rational(1));
  const LaplaceProblem m = gamma_integral_problem_mirror(3);
  CHECK(m.a == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                     Rational(1, 5)});
}

TEST_CASE("mirror kernel flips the sign of every odd coefficient") {
  const int n = 9;
  const ScaledCoefficients sc = coeffs_direct(gamma_integral_problem(n));
  const ScaledCoefficients mirror = coeffs_direct(gamma_integral_problem_mirror(n));
  for (int k = 0; k <= n; ++k)
    CHECK(mirror.values[k] == (k % 2 == 0 ? sc.values[k] : -sc.values[k]));
}

TEST_CASE("pipeline reproduces the classical series coefficients") {
  const StirlingCoefficients got = stirling_via_pipeline(4);
  REQUIRE(got.gamma.size() == 5);
  for (int n = 0; n <= 4; ++n) CHECK(got.gamma[n] == kKnownGamma[n]);
}

TEST_CASE("all four closed forms match the pipeline") {
  const int n_max = 6;
  const StirlingCoefficients pipeline = stirling_via_pipeline(n_max);
  for (int n = 0; n <= n_max; ++n) {
    CHECK(stirling_closed_form(n, StirlingVariant::first_kind_potential) == pipeline.gamma[n]);
    CHECK(stirling_closed_form(n, StirlingVariant::first_kind_bell) == pipeline.gamma[n]);
    CHECK(stirling_closed_form(n, StirlingVariant::second_kind_potential) == pipeline.gamma[n]);
    CHECK(stirling_closed_form(n, StirlingVariant::second_kind_bell) == pipeline.gamma[n]);
  }
}

TEST_CASE("log-kernel potential closed form has the known leading entries") {
  CHECK(potential_closed_form_log(1, 1) == Rational(-2, 3));
  CHECK(potential_closed_form_log(1, 2) == Rational(1, 2));
  CHECK(potential_closed_form_log(0, 0) == Rational(1));
  CHECK(potential_closed_form_log(0, 3) == Rational(0));
}

TEST_CASE("log-kernel potential closed form matches the recurrence table") {
  // The closed form targets the normalized series with f_m = 2 (-1)^m / (m+2).
  const int n_max = 8;
  NormalizedSeries f;
  for (int m = 1; m <= n_max; ++m)
    f.coeffs.push_back(Rational(m % 2 == 0 ? 2 : -2, m + 2));
  const PotentialTable table = potential_integer_table(f, n_max);
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= n_max; ++n) CHECK(potential_closed_form_log(k, n) == table.at(k, n));
}

TEST_CASE("transition polynomials start with the known expansions") {
  const QPolynomial q0 = q_polynomial(0);
  REQUIRE(q0.q.size() == 1);
  CHECK(q0.q[0] == Rational(1));

  const QPolynomial q1 = q_polynomial(1);
  REQUIRE(q1.q.size() == 3);
  CHECK(q1.q == std::vector<Rational>{Rational(1), Rational(1), Rational(1, 12)});

  const QPolynomial q2 = q_polynomial(2);
  REQUIRE(q2.q.size() == 5);
  CHECK(q2.q == std::vector<Rational>{Rational(3), Rational(5), Rational(25, 12), Rational(1, 12),
                                      Rational(1, 288)});

  CHECK(q1.eval(Rational(2)) == Rational(1) + Rational(2) + Rational(4, 12));
}

TEST_CASE("top-degree polynomial coefficients alternate through the series coefficients") {
  const StirlingCoefficients pipeline = stirling_via_pipeline(6);
  for (int n = 0; n <= 6; ++n) {
    const QPolynomial qn = q_polynomial(n);
    REQUIRE(qn.q.size() == static_cast<std::size_t>(2 * n + 1));
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(qn.q[2 * n] == sign * pipeline.gamma[n]);
  }
}

TEST_CASE("diagonal coefficients match the known values") {
  const std::vector<Rational> got = diagonal_coefficients(3);
  REQUIRE(got.size() == 4);
  CHECK(got[0] == Rational(-1, 3));
  CHECK(got[1] == Rational(-1, 540));
  CHECK(got[2] == Rational(25, 6048));
  CHECK(got[3] == Rational(101, 155520));
}

TEST_CASE("series coefficients satisfy the reflection convolution") {
  // sum_k (-1)^(n-k) gamma_k gamma_(n-k) vanishes for every n >= 1.
  const StirlingCoefficients g = stirling_via_pipeline(8);
  for (int n = 1; n <= 8; ++n) {
    Rational s(0);
    for (int k = 0; k <= n; ++k) {
      const Rational sign = ((n - k) % 2 == 0) ? Rational(1) : Rational(-1);
      s += sign * g.gamma[k] * g.gamma[n - k];
    }
    CHECK(s == Rational(0));
  }
}
