#pragma once

#include <vector>

#include "laplace/coefficients.hpp"
#include "laplace/rational.hpp"

namespace laplace {

// Expansion input for the kernel x - log(1+x) on [0, inf): alpha = 2,
// beta = 1, a_k = (-1)^k / (k+2), unit amplitude g == 1.
LaplaceProblem gamma_integral_problem(int n_max);

// Mirror kernel -x - log(1-x) on [0, 1): a_k = 1 / (k+2). Its coefficients
// equal those of gamma_integral_problem with alternating signs.
LaplaceProblem gamma_integral_problem_mirror(int n_max);

/// Stirling-series coefficients gamma_n: the factorial satisfies
/// Gamma(lambda) ~ sqrt(2 pi) lambda^(lambda - 1/2) e^(-lambda)
///                 * sum_n (-1)^n gamma_n lambda^(-n).
struct StirlingCoefficients {
  Route route = Route::direct;
  std::vector<Rational> gamma;
};

// gamma_n = (-1)^n 2^n (Gamma(n + 1/2)/sqrt(pi)) * scaled_c_{2n}, where the
// scaled coefficients come from gamma_integral_problem via the given route.
StirlingCoefficients stirling_via_pipeline(int n_max, Route route = Route::direct);

enum class StirlingVariant {
  first_kind_potential,  // double sum over unsigned Stirling numbers s(n, k)
  first_kind_bell,       // triple sum over s(n, k)
  second_kind_potential,  // double sum over S(n, k)
  second_kind_bell,       // triple sum over S(n, k)
};

const char* stirling_variant_name(StirlingVariant v);

// Closed forms for gamma_n in terms of Stirling numbers alone; independent
// of the series pipeline.
Rational stirling_closed_form(int n, StirlingVariant variant);

// x^n coefficient of (2 (x - log(1+x)) / x^2)^k in closed form:
//   2^k sum_j (-1)^(n+k+j) binom(k,j) j! s(n+k+j, j) / (n+k+j)!.
Rational potential_closed_form_log(int k, int n);

/// Polynomial Q_n of degree 2n: q[k] is the mu^k coefficient. These carry
/// the polynomial part of the uniform incomplete-gamma expansion
/// coefficients C_n(eta) near the transition point.
struct QPolynomial {
  int n = 0;
  std::vector<Rational> q;

  Rational eval(const Rational& mu) const;
};

// Every coefficient is computed by two structurally different formulas
// (a Stirling double sum and a potential-polynomial sum) and compared;
// a mismatch throws std::logic_error since it can only mean a bug.
QPolynomial q_polynomial(int n);

// C_n(0) for n = 0..n_max: coefficients of the expansion
//   Gamma(m, m)/Gamma(m) ~ 1/2 + (2 pi m)^(-1/2) sum_n C_n(0) m^(-n).
std::vector<Rational> diagonal_coefficients(int n_max);

}  // namespace laplace
