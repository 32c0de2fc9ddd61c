#include "laplace/verification.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "laplace/gamma_asymptotics.hpp"
#include "laplace/number_kernels.hpp"

namespace laplace {

namespace {

long double signed_term(const LaplaceProblem& p, const ScaledCoefficients& sc, int n,
                        long double lambda) {
  const Rational exponent = (Rational(n) + p.beta) / p.alpha;
  const long double e = exponent.to_double();
  const long double c = sc.values[n].to_double();
  const long double alpha = p.alpha.to_double();
  const long double a0 = p.a[0].to_double();
  return gamma_numeric(e) * c / (alpha * std::pow(a0, e)) * std::pow(lambda, -e);
}

void check_term_args(const LaplaceProblem& p, const ScaledCoefficients& sc, int n, double lambda) {
  if (p.a.empty() || !(p.a[0] > Rational(0)))
    throw std::domain_error("partial_sum: a_0 must be positive");
  if (!(lambda > 0)) throw std::domain_error("partial_sum: lambda must be positive");
  if (n < 0 || n > static_cast<int>(sc.values.size()))
    throw std::invalid_argument("partial_sum: term index exceeds available coefficients");
}

}  // namespace

double partial_sum(const LaplaceProblem& p, const ScaledCoefficients& sc, double lambda, int N) {
  check_term_args(p, sc, N, lambda);
  long double total = 0.0L;
  for (int n = 0; n < N; ++n) total += signed_term(p, sc, n, lambda);
  return static_cast<double>(total);
}

double expansion_term_value(const LaplaceProblem& p, const ScaledCoefficients& sc, int n,
                            double lambda) {
  check_term_args(p, sc, n + 1, lambda);
  return static_cast<double>(std::abs(signed_term(p, sc, n, lambda)));
}

// ---------------------------------------------------------------------------
// High-precision scalar used for verification references. Wraps MPFR with
// value semantics; everything rounds to nearest at 384 bits.

namespace {

constexpr mpfr_prec_t kPrec = 384;

class Big {
 public:
  Big() {
    mpfr_init2(v_, kPrec);
    mpfr_set_zero(v_, 1);
  }
  Big(const Big& o) {
    mpfr_init2(v_, kPrec);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Big& operator=(const Big& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  explicit Big(double d) : Big() { mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit Big(long n) : Big() { mpfr_set_si(v_, n, MPFR_RNDN); }
  explicit Big(const Rational& r) : Big() { mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN); }

  static Big pi() {
    Big r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

#define LAPLACE_BIG_BINOP(op, fn)                      \
  friend Big operator op(const Big& a, const Big& b) { \
    Big r;                                             \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                   \
    return r;                                          \
  }
  LAPLACE_BIG_BINOP(+, mpfr_add)
  LAPLACE_BIG_BINOP(-, mpfr_sub)
  LAPLACE_BIG_BINOP(*, mpfr_mul)
  LAPLACE_BIG_BINOP(/, mpfr_div)
#undef LAPLACE_BIG_BINOP

#define LAPLACE_BIG_UNOP(name, fn) \
  Big name() const {               \
    Big r;                         \
    fn(r.v_, v_, MPFR_RNDN);       \
    return r;                      \
  }
  LAPLACE_BIG_UNOP(log, mpfr_log)
  LAPLACE_BIG_UNOP(exp, mpfr_exp)
  LAPLACE_BIG_UNOP(sqrt, mpfr_sqrt)
  LAPLACE_BIG_UNOP(lngamma, mpfr_lngamma)
  LAPLACE_BIG_UNOP(abs, mpfr_abs)
#undef LAPLACE_BIG_UNOP

  Big pow_si(long e) const {
    Big r;
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

void check_grid(const std::vector<double>& grid, double minimum, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": grid must not be empty");
  double prev = -std::numeric_limits<double>::infinity();
  for (double x : grid) {
    if (!(x >= minimum))
      throw std::invalid_argument(std::string(what) + ": grid values must be >= " +
                                  std::to_string(minimum));
    if (!(x > prev))
      throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    prev = x;
  }
}

void check_terms(int n_terms, const char* what) {
  if (n_terms < 1) throw std::invalid_argument(std::string(what) + ": n_terms must be >= 1");
}

void finalize_report(VerificationReport& r) {
  const int cols = static_cast<int>(r.terms.size());
  r.fitted_order.assign(cols, std::numeric_limits<double>::quiet_NaN());
  for (int j = 0; j < cols; ++j) {
    std::vector<double> errs(r.grid.size());
    for (std::size_t i = 0; i < r.grid.size(); ++i) errs[i] = r.abs_errors[i][j];
    r.fitted_order[j] = fitted_slope(r.grid, errs);
  }
  r.bounds_ok = true;
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    for (int j = 0; j < cols; ++j)
      if (!(r.abs_errors[i][j] <=
            kErrorBoundFactor * r.first_omitted[i][j] + r.reference_err_bound[i]))
        r.bounds_ok = false;
}

// Nominal relative accuracy of a 384-bit reference after rounding the
// comparison down to double.
double reference_bound(double ref) { return std::abs(ref) * 1e-70; }

}  // namespace

double fitted_slope(const std::vector<double>& x, const std::vector<double>& err) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < err.size(); ++i) {
    if (std::isfinite(err[i]) && err[i] > 0.0 && x[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(err[i]));
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (lx.size() < 4) return nan;
  // Minimum span for a stable slope: a factor of 8 (the tightest grid the
  // checks run on, m = 10..80).
  if (lx.back() - lx.front() < std::log(8.0) * 0.999) return nan;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  return sxy / sxx;
}

std::vector<double> log_spaced_grid(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("log_spaced_grid: need 0 < lo < hi and points >= 2");
  std::vector<double> grid(points);
  const double step = (std::log(hi) - std::log(lo)) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = std::exp(std::log(lo) + i * step);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

VerificationReport verify_stirling_series(const std::vector<double>& lambda_grid, int n_terms) {
  check_grid(lambda_grid, 5.0, "verify_stirling_series");
  check_terms(n_terms, "verify_stirling_series");
  const std::vector<Rational> gamma = stirling_via_pipeline(n_terms).gamma;

  VerificationReport r;
  r.check = "stirling-series";
  r.grid = lambda_grid;
  for (int n = 1; n <= n_terms; ++n) r.terms.push_back(n);

  const Big half_log_2pi = (Big(2L) * Big::pi()).log() * Big(1L) / Big(2L);
  for (double lambda : lambda_grid) {
    const Big L(lambda);
    const Big ref = (L.lngamma() + L - (L - Big(0.5)) * L.log() - half_log_2pi).exp();
    const double ref_d = ref.to_double();
    r.reference.push_back(ref_d);
    r.reference_err_bound.push_back(reference_bound(ref_d));

    std::vector<double> sums, abss, rels, firsts;
    Big s;
    for (int n = 0; n < n_terms; ++n) {
      const Big term = Big(gamma[n]) * L.pow_si(-n);
      s = (n % 2 == 0) ? s + term : s - term;
      sums.push_back(s.to_double());
      const double abs_err = (s - ref).abs().to_double();
      abss.push_back(abs_err);
      rels.push_back(abs_err / std::abs(ref_d));
      firsts.push_back(std::abs(gamma[n + 1].to_double()) * std::pow(lambda, -(n + 1)));
    }
    r.partial_sums.push_back(std::move(sums));
    r.abs_errors.push_back(std::move(abss));
    r.rel_errors.push_back(std::move(rels));
    r.first_omitted.push_back(std::move(firsts));
  }
  finalize_report(r);
  return r;
}

VerificationReport verify_igamma_diagonal(const std::vector<int>& m_grid, int n_terms) {
  std::vector<double> grid_d(m_grid.begin(), m_grid.end());
  check_grid(grid_d, 5.0, "verify_igamma_diagonal");
  check_terms(n_terms, "verify_igamma_diagonal");
  const std::vector<Rational> c = diagonal_coefficients(n_terms);

  VerificationReport r;
  r.check = "igamma-diagonal";
  r.grid = grid_d;
  for (int n = 1; n <= n_terms; ++n) r.terms.push_back(n);

  const Big two_pi = Big(2L) * Big::pi();
  for (int m : m_grid) {
    // Exact tail ratio: e^(-m) sum_{k<m} m^k / k!.
    Rational qsum(0), term(1);
    for (int k = 0; k < m; ++k) {
      qsum += term;
      term = term * Rational(m) / Rational(k + 1);
    }
    const Big ratio = Big(qsum) * Big(static_cast<long>(-m)).exp();
    const Big scaled_ref = (two_pi * Big(static_cast<long>(m))).sqrt() *
                           (ratio - Big(1L) / Big(2L));
    const double ref_d = scaled_ref.to_double();
    r.reference.push_back(ref_d);
    r.reference_err_bound.push_back(reference_bound(ref_d));

    std::vector<double> sums, abss, rels, firsts;
    Big s;
    for (int n = 0; n < n_terms; ++n) {
      s = s + Big(c[n]) * Big(static_cast<long>(m)).pow_si(-n);
      sums.push_back(s.to_double());
      const double abs_err = (s - scaled_ref).abs().to_double();
      abss.push_back(abs_err);
      rels.push_back(abs_err / std::abs(ref_d));
      firsts.push_back(std::abs(c[n + 1].to_double()) * std::pow(double(m), -(n + 1)));
    }
    r.partial_sums.push_back(std::move(sums));
    r.abs_errors.push_back(std::move(abss));
    r.rel_errors.push_back(std::move(rels));
    r.first_omitted.push_back(std::move(firsts));
  }
  finalize_report(r);
  return r;
}

namespace {

enum class BuiltinKernel { log_kernel, mirror_log_kernel };

bool matches_problem(const LaplaceProblem& p, const LaplaceProblem& model) {
  if (p.alpha != model.alpha || p.beta != model.beta) return false;
  for (int k = 0; k <= p.n_max; ++k) {
    const Rational a = k < static_cast<int>(p.a.size()) ? p.a[k] : Rational(0);
    if (a != model.a[k]) return false;
    const Rational b = k < static_cast<int>(p.b.size()) ? p.b[k] : Rational(0);
    if (b != model.b[k]) return false;
  }
  return true;
}

BuiltinKernel detect_kernel(const LaplaceProblem& p) {
  if (matches_problem(p, gamma_integral_problem(p.n_max))) return BuiltinKernel::log_kernel;
  if (matches_problem(p, gamma_integral_problem_mirror(p.n_max)))
    return BuiltinKernel::mirror_log_kernel;
  throw ProblemError(
      "verify_laplace_order: no built-in integrand for this problem "
      "(supported kernels: x - log(1+x) on [0,inf), -x - log(1-x) on [0,1))");
}

}  // namespace

VerificationReport verify_laplace_order(const LaplaceProblem& p,
                                        const std::vector<double>& lambda_grid, int n_terms) {
  check_grid(lambda_grid, 1.0, "verify_laplace_order");
  check_terms(n_terms, "verify_laplace_order");
  const BuiltinKernel kernel = detect_kernel(p);

  // Regenerate the problem deep enough for N = n_terms plus the first
  // omitted term.
  const LaplaceProblem prob = kernel == BuiltinKernel::log_kernel
                                  ? gamma_integral_problem(n_terms)
                                  : gamma_integral_problem_mirror(n_terms);
  const ScaledCoefficients sc = coeffs_direct(prob);

  VerificationReport r;
  r.check = kernel == BuiltinKernel::log_kernel ? "laplace-order/log-kernel"
                                                : "laplace-order/mirror";
  r.grid = lambda_grid;
  for (int n = 1; n <= n_terms; ++n) r.terms.push_back(n);

  for (double lambda : lambda_grid) {
    QuadratureResult q;
    if (kernel == BuiltinKernel::log_kernel) {
      q = quadrature([lambda](double x) { return std::exp(-lambda * (x - std::log1p(x))); },
                     Domain::half_line, 1e-13);
    } else {
      q = quadrature([lambda](double x) { return std::exp(-lambda * (-x - std::log1p(-x))); },
                     Domain::unit_interval, 1e-13);
    }
    if (!q.converged)
      throw std::runtime_error("verify_laplace_order: quadrature did not converge at lambda = " +
                               std::to_string(lambda));
    r.reference.push_back(q.value);
    r.reference_err_bound.push_back(q.err_bound);

    std::vector<double> sums, abss, rels, firsts;
    for (int N = 1; N <= n_terms; ++N) {
      const double s = partial_sum(prob, sc, lambda, N);
      sums.push_back(s);
      const double abs_err = std::abs(s - q.value);
      abss.push_back(abs_err);
      rels.push_back(abs_err / std::abs(q.value));
      firsts.push_back(expansion_term_value(prob, sc, N, lambda));
    }
    r.partial_sums.push_back(std::move(sums));
    r.abs_errors.push_back(std::move(abss));
    r.rel_errors.push_back(std::move(rels));
    r.first_omitted.push_back(std::move(firsts));
  }
  finalize_report(r);
  return r;
}

ReportVerdict assess_report(const VerificationReport& r,
                            const std::vector<OrderExpectation>& expected) {
  ReportVerdict v;
  v.bounds_ok = r.bounds_ok;
  v.orders_ok = true;
  std::ostringstream detail;
  if (!r.bounds_ok) detail << "error bound exceeded 2x first omitted term; ";
  for (const OrderExpectation& e : expected) {
    int idx = -1;
    for (std::size_t j = 0; j < r.terms.size(); ++j)
      if (r.terms[j] == e.n_terms) idx = static_cast<int>(j);
    if (idx < 0) {
      v.orders_ok = false;
      detail << "no column for N = " << e.n_terms << "; ";
      continue;
    }
    const double got = r.fitted_order[idx];
    if (!std::isfinite(got) || std::abs(got - e.expected) > kOrderTolerance) {
      v.orders_ok = false;
      detail << "fitted order for N = " << e.n_terms << " is " << got << ", expected "
             << e.expected << " +/- " << kOrderTolerance << "; ";
    }
  }
  v.detail = detail.str();
  return v;
}

// ---------------------------------------------------------------------------
// Exact cross-route sweep.

namespace {

std::string describe_problem(const LaplaceProblem& p) {
  std::ostringstream os;
  os << "alpha=" << p.alpha << " beta=" << p.beta << " n_max=" << p.n_max << " a=[";
  for (std::size_t i = 0; i < p.a.size(); ++i) os << (i ? "," : "") << p.a[i];
  os << "] b=[";
  for (std::size_t i = 0; i < p.b.size(); ++i) os << (i ? "," : "") << p.b[i];
  os << "]";
  return os.str();
}

bool same_values(const ScaledCoefficients& x, const ScaledCoefficients& y) {
  return x.values == y.values;
}

}  // namespace

SweepResult route_agreement_sweep(unsigned long seed, int count) {
  if (count < 1) throw std::invalid_argument("route_agreement_sweep: count must be >= 1");
  std::mt19937_64 rng(seed);
  const Rational exponents[5] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                 Rational(3)};
  std::uniform_int_distribution<int> pick_exp(0, 4);
  std::uniform_int_distribution<int> pick_n(0, 8);
  std::uniform_int_distribution<int> pick_num(-9, 9);
  std::uniform_int_distribution<int> pick_den(1, 9);

  const auto random_rational = [&](bool nonzero) {
    int num = pick_num(rng);
    while (nonzero && num == 0) num = pick_num(rng);
    return Rational(num, pick_den(rng));
  };

  SweepResult result;
  for (int i = 0; i < count; ++i) {
    LaplaceProblem p;
    p.alpha = exponents[pick_exp(rng)];
    p.beta = exponents[pick_exp(rng)];
    p.n_max = pick_n(rng);
    for (int k = 0; k <= p.n_max; ++k) {
      p.a.push_back(random_rational(k == 0));
      p.b.push_back(random_rational(k == 0));
    }
    result.problems = i + 1;

    const ScaledCoefficients direct = coeffs_direct(p);
    const ScaledCoefficients wojdylo = coeffs_wojdylo(p);
    const ScaledCoefficients comtet_b = coeffs_comtet(p, ComtetForm::binomial);
    const ScaledCoefficients comtet_r = coeffs_comtet(p, ComtetForm::rising);
    if (!same_values(direct, wojdylo) || !same_values(direct, comtet_b) ||
        !same_values(direct, comtet_r)) {
      result.first_failure = "route mismatch on " + describe_problem(p);
      return result;
    }

    // Unit-amplitude variant: single-sum forms and the reversion oracle.
    LaplaceProblem u = p;
    u.beta = Rational(1);
    u.b.assign(u.n_max + 1, Rational(0));
    u.b[0] = Rational(1);
    const ScaledCoefficients u_direct = coeffs_direct(u);
    if (!same_values(u_direct, coeffs_wojdylo(u)) ||
        !same_values(u_direct, coeffs_comtet(u, ComtetForm::binomial)) ||
        !same_values(u_direct, coeffs_g1(u, Route::comtet)) ||
        !same_values(u_direct, coeffs_g1(u, Route::wojdylo)) ||
        !same_values(u_direct, reversion_oracle(u))) {
      result.first_failure = "unit-amplitude route mismatch on " + describe_problem(u);
      return result;
    }
  }
  result.all_agree = true;
  return result;
}

}  // namespace laplace
