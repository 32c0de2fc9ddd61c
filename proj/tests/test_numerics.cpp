#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "laplace/numerics.hpp"

using laplace::Domain;
using laplace::gamma_numeric;
using laplace::integrate_interval;
using laplace::log_gamma_numeric;
using laplace::quadrature;
using laplace::QuadratureResult;

TEST_CASE("gamma agrees with exact values") {
  CHECK(gamma_numeric(1.0L) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_numeric(10.0L) == doctest::Approx(362880.0).epsilon(1e-15));
  CHECK(gamma_numeric(0.5L) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-14));
  CHECK(gamma_numeric(5.5L) ==
        doctest::Approx(52.34277778455352).epsilon(1e-14));  // 9!!/2^4 sqrt(pi)
  CHECK_THROWS_AS(gamma_numeric(0.0L), std::domain_error);
  CHECK_THROWS_AS(gamma_numeric(-2.5L), std::domain_error);
}

TEST_CASE("gamma agrees with the platform lgamma") {
  for (long double x = 0.1L; x < 30.0L; x += 0.37L) {
    const long double ours = log_gamma_numeric(x);
    const long double ref = lgammal(x);
    CHECK(static_cast<double>(ours) ==
          doctest::Approx(static_cast<double>(ref)).epsilon(5e-15).scale(1.0));
  }
}

TEST_CASE("finite-interval quadrature hits smooth integrals") {
  const auto sq = [](double x) { return x * x; };
  QuadratureResult r = integrate_interval(sq, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto sine = [](double x) { return std::sin(x); };
  r = integrate_interval(sine, 0.0, std::acos(-1.0));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

  // Integrable endpoint singularity: adaptive bisection must still converge.
  const auto inv_sqrt = [](double x) { return 1.0 / std::sqrt(x); };
  r = integrate_interval(inv_sqrt, 0.0, 1.0, 1e-10, 5000);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("half-line quadrature finds the decaying tail") {
  const auto exp_decay = [](double x) { return std::exp(-x); };
  QuadratureResult r = quadrature(exp_decay, Domain::half_line);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

  const auto gauss = [](double x) { return std::exp(-x * x); };
  r = quadrature(gauss, Domain::half_line);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(std::acos(-1.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("half-line quadrature reports non-decaying integrands") {
  const auto stuck = [](double x) { return 2.0 + std::sin(x); };
  const QuadratureResult r = quadrature(stuck, Domain::half_line);
  CHECK_FALSE(r.converged);
}

TEST_CASE("unit-interval domain matches direct integration") {
  const auto f = [](double x) { return std::exp(x); };
  const QuadratureResult a = quadrature(f, Domain::unit_interval);
  const QuadratureResult b = integrate_interval(f, 0.0, 1.0);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-14));
  CHECK(a.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}
