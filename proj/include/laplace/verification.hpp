#pragma once

#include <string>
#include <vector>

#include "laplace/coefficients.hpp"
#include "laplace/numerics.hpp"

namespace laplace {

// Sum of the first N expansion terms at lambda:
//   sum_{n<N} Gamma(e_n) * (scaled_c_n / (alpha * a_0^e_n)) * lambda^(-e_n).
// Rationals are converted to float once per term; terms are summed in
// extended precision. Requires a_0 > 0 and lambda > 0.
double partial_sum(const LaplaceProblem& p, const ScaledCoefficients& sc, double lambda, int N);

// Magnitude of the term of index n at lambda (used as "first omitted term").
double expansion_term_value(const LaplaceProblem& p, const ScaledCoefficients& sc, int n,
                            double lambda);

/// Numeric sweep results: references, partial sums, errors and fitted
/// error orders over a grid. Matrices are indexed [grid point][N-1] for
/// N = terms[0]..terms.back().
struct VerificationReport {
  std::string check;
  std::vector<double> grid;  // lambda (or m), strictly increasing
  std::vector<int> terms;    // N values, ascending from 1
  std::vector<double> reference;
  std::vector<double> reference_err_bound;
  std::vector<std::vector<double>> partial_sums;
  std::vector<std::vector<double>> abs_errors;
  std::vector<std::vector<double>> rel_errors;
  std::vector<std::vector<double>> first_omitted;  // magnitude of term N
  std::vector<double> fitted_order;                // slope per N; NaN if unfit
  bool bounds_ok = false;  // every error <= 2 * first omitted + reference bound
};

// Asymptotic-series sanity factor: |error after N terms| may exceed the
// first omitted term, but not by more than this factor on our grids.
inline constexpr double kErrorBoundFactor = 2.0;
// Allowed deviation of a fitted error order from its theoretical value.
inline constexpr double kOrderTolerance = 0.15;

// Least-squares slope of log(err) against log(x). Pairs with non-finite or
// non-positive err are dropped; returns NaN unless at least 4 points remain
// spanning at least one decade in x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& err);

std::vector<double> log_spaced_grid(double lo, double hi, int points);

// Normalized factorial ratio Gamma(lambda) / (sqrt(2 pi) lambda^(lambda-1/2)
// e^(-lambda)) versus partial sums of sum_n (-1)^n gamma_n lambda^(-n).
// References and differences are evaluated in 384-bit float arithmetic so
// that error orders remain visible below double rounding. Grid must be
// strictly increasing with lambda >= 5.
VerificationReport verify_stirling_series(const std::vector<double>& lambda_grid, int n_terms);

// Scaled residual sqrt(2 pi m) * (Gamma(m,m)/Gamma(m) - 1/2) versus partial
// sums of sum_n C_n(0) m^(-n); the reference comes from the exact finite sum
// e^(-m) sum_{k<m} m^k/k! evaluated in 384-bit float arithmetic.
// Grid must be strictly increasing integers with m >= 5.
VerificationReport verify_igamma_diagonal(const std::vector<int>& m_grid, int n_terms);

// Quadrature of the integral behind p versus its partial sums. Only the two
// built-in kernels are integrable here: x - log(1+x) on the half line and
// -x - log(1-x) on the unit interval (recognized from p's coefficients).
VerificationReport verify_laplace_order(const LaplaceProblem& p,
                                        const std::vector<double>& lambda_grid, int n_terms);

struct OrderExpectation {
  int n_terms;      // N
  double expected;  // theoretical slope
};

struct ReportVerdict {
  bool bounds_ok = false;
  bool orders_ok = false;
  std::string detail;  // human-readable failure description, empty if passed
  bool passed() const { return bounds_ok && orders_ok; }
};

// Checks the report's error bounds and the listed fitted orders against
// kOrderTolerance.
ReportVerdict assess_report(const VerificationReport& r,
                            const std::vector<OrderExpectation>& expected);

/// Outcome of the exact cross-route equality sweep on random problems.
struct SweepResult {
  int problems = 0;
  bool all_agree = false;
  std::string first_failure;  // empty when all_agree
};

// Draws `count` random problems (alpha, beta from {1/2, 1, 3/2, 2, 3},
// coefficient numerators in [-9, 9], denominators in [1, 9], n_max <= 8)
// and checks that all evaluation routes agree exactly; each problem's
// unit-amplitude variant additionally checks the single-sum forms and the
// reversion oracle.
SweepResult route_agreement_sweep(unsigned long seed, int count);

}  // namespace laplace
