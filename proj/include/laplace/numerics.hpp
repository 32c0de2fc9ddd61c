#pragma once

#include <functional>

namespace laplace {

// Gamma function by a fixed Lanczos approximation, evaluated in extended
// precision. Relative error stays below 1e-13 across [0.5, 200].
// Throws std::domain_error unless x > 0.
long double gamma_numeric(long double x);
long double log_gamma_numeric(long double x);

enum class Domain {
  unit_interval,  // integrate over [0, 1]
  half_line,      // integrate over [0, inf)
};

struct QuadratureResult {
  double value = 0.0;
  double err_bound = 0.0;  // estimated absolute error, tail bound included
  bool converged = false;  // err_bound <= tol within the subdivision budget
  int subdivisions = 0;
};

// Adaptive 15-point Kronrod / 7-point Gauss quadrature, splitting the
// interval with the largest error estimate first. The half-line domain is
// cut where the integrand has decayed below 1e-18 of its peak; the remaining
// tail is bounded by an exponential envelope and folded into err_bound.
QuadratureResult quadrature(const std::function<double(double)>& f, Domain domain,
                            double tol = 1e-12);

// Same scheme on an explicit finite interval.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                                    double tol = 1e-12, int max_intervals = 2000);

}  // namespace laplace
