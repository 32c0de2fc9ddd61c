#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "laplace/rational.hpp"

namespace laplace {

/// Invalid problem data (bad exponents, vanishing leading coefficients, ...).
class ProblemError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested order exceeds the supplied coefficients and padding is off.
class TruncationError : public ProblemError {
  using ProblemError::ProblemError;
};

/// Asymptotic-expansion input: an integral of g(x) * exp(-lambda * f(x))
/// whose kernel behaves near the boundary like
///   f(x) - f(0) = x^alpha * (a_0 + a_1 x + ...),   a_0 > 0,
///   g(x)        = x^(beta-1) * (b_0 + b_1 x + ...).
struct LaplaceProblem {
  Rational alpha;
  Rational beta;
  std::vector<Rational> a;
  std::vector<Rational> b;
  int n_max = 0;
  bool pad = false;  // treat missing a_k / b_k beyond the lists as zero
};

// Throws ProblemError / TruncationError unless alpha > 0, beta > 0,
// n_max >= 0, a_0 != 0, b_0 != 0, and (unless pad) both lists reach n_max.
void validate_problem(const LaplaceProblem& p);

// True when zeros had to be supplied for coefficients beyond the lists.
bool padding_used(const LaplaceProblem& p);

enum class Route { direct, wojdylo, comtet };

const char* route_name(Route r);

/// Rescaled expansion coefficients: values[n] = alpha * a_0^((n+beta)/alpha) * c_n,
/// which stays rational for any rational inputs. The term of index n
/// contributes Gamma(e_n) * c_n * lambda^(-e_n) with e_n = (n+beta)/alpha.
struct ScaledCoefficients {
  LaplaceProblem problem;
  Route route = Route::direct;
  std::vector<Rational> values;
  bool padded = false;
};

/// One term of the expansion in exact form.
struct ExpansionTerm {
  int n = 0;
  Rational exponent;  // e_n = (n + beta) / alpha
  Rational scaled;    // alpha * a_0^(e_n) * c_n
};

// The three independent evaluation routes. All return identical values on
// valid input; disagreement elsewhere in the code is treated as a bug.

// Potential-polynomial route: c_n = sum_k b_{n-k} A_{-e_n,k} over the
// normalized series a_k / a_0, with A computed by the binomial sum over a
// Bell table.
ScaledCoefficients coeffs_direct(const LaplaceProblem& p);

// Bell-polynomial route over the unnormalized tail a_1, a_2, ...:
//   c_n = sum_k b_{n-k} sum_j (-1)^j a_0^{-j} (B_{k,j} / j!) rising(e_n, j).
ScaledCoefficients coeffs_wojdylo(const LaplaceProblem& p);

enum class ComtetForm { binomial, rising };

// Integer-exponent route: only potential polynomials A_{j,k} with integer j
// appear; the exponent dependence is carried by prefactors.
ScaledCoefficients coeffs_comtet(const LaplaceProblem& p,
                                 ComtetForm form = ComtetForm::binomial);

ScaledCoefficients compute_coefficients(const LaplaceProblem& p, Route route);

// Single-sum shortcuts available when g == 1 (b = (1, 0, 0, ...), beta = 1).
// Routes collapse to one layer of summation; route must be comtet or wojdylo.
ScaledCoefficients coeffs_g1(const LaplaceProblem& p, Route route);

// Independent check via series reversion: with w(x) = x (A(x)/a_0)^(1/alpha)
// and x(w) = sum delta_k w^k the inverse series, values[n] = (n+1) delta_{n+1}.
// Same g == 1 precondition as coeffs_g1.
ScaledCoefficients reversion_oracle(const LaplaceProblem& p);

std::vector<ExpansionTerm> expansion_terms(const ScaledCoefficients& sc);

}  // namespace laplace
