#include "laplace/coefficients.hpp"

#include "laplace/bell_polynomials.hpp"
#include "laplace/number_kernels.hpp"

namespace laplace {

namespace {

Rational coeff_at(const std::vector<Rational>& v, int i) {
  return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : Rational(0);
}

// Series a_k / a_0 for k >= 1, up to k = n_max.
NormalizedSeries normalized_tail(const LaplaceProblem& p) {
  NormalizedSeries f;
  f.coeffs.reserve(p.n_max);
  for (int k = 1; k <= p.n_max; ++k) f.coeffs.push_back(coeff_at(p.a, k) / p.a[0]);
  return f;
}

// Tail a_1, a_2, ... without normalization, up to k = n_max.
NormalizedSeries raw_tail(const LaplaceProblem& p) {
  NormalizedSeries f;
  f.coeffs.reserve(p.n_max);
  for (int k = 1; k <= p.n_max; ++k) f.coeffs.push_back(coeff_at(p.a, k));
  return f;
}

Rational exponent_of(const LaplaceProblem& p, int n) {
  return (Rational(n) + p.beta) / p.alpha;
}

bool is_unit_g(const LaplaceProblem& p) {
  if (p.beta != Rational(1)) return false;
  if (p.b.empty() || p.b[0] != Rational(1)) return false;
  for (std::size_t i = 1; i < p.b.size(); ++i)
    if (!p.b[i].is_zero()) return false;
  return true;
}

ScaledCoefficients make_result(const LaplaceProblem& p, Route route,
                               std::vector<Rational> values) {
  return ScaledCoefficients{p, route, std::move(values), padding_used(p)};
}

}  // namespace

void validate_problem(const LaplaceProblem& p) {
  if (!(p.alpha > Rational(0))) throw ProblemError("alpha must be positive");
  if (!(p.beta > Rational(0))) throw ProblemError("beta must be positive");
  if (p.n_max < 0) throw ProblemError("n_max must be >= 0");
  if (p.a.empty()) throw ProblemError("coefficient list a must not be empty");
  if (p.b.empty()) throw ProblemError("coefficient list b must not be empty");
  if (p.a[0].is_zero()) throw ProblemError("a_0 must be nonzero");
  if (p.b[0].is_zero()) throw ProblemError("b_0 must be nonzero");
  if (!p.pad) {
    const std::size_t need = static_cast<std::size_t>(p.n_max) + 1;
    if (p.a.size() < need)
      throw TruncationError("list a has " + std::to_string(p.a.size()) + " entries but n_max = " +
                            std::to_string(p.n_max) + " requires " + std::to_string(need) +
                            "; enable pad to fill with zeros");
    if (p.b.size() < need)
      throw TruncationError("list b has " + std::to_string(p.b.size()) + " entries but n_max = " +
                            std::to_string(p.n_max) + " requires " + std::to_string(need) +
                            "; enable pad to fill with zeros");
  }
}

bool padding_used(const LaplaceProblem& p) {
  const std::size_t need = static_cast<std::size_t>(p.n_max) + 1;
  return p.a.size() < need || p.b.size() < need;
}

const char* route_name(Route r) {
  switch (r) {
    case Route::direct:
      return "direct";
    case Route::wojdylo:
      return "wojdylo";
    case Route::comtet:
      return "comtet";
  }
  return "?";
}

ScaledCoefficients coeffs_direct(const LaplaceProblem& p) {
  validate_problem(p);
  const BellTable bell = bell_table(normalized_tail(p), p.n_max);
  std::vector<Rational> values(p.n_max + 1);
  for (int n = 0; n <= p.n_max; ++n) {
    const PotentialRow row = potential_row(-exponent_of(p, n), bell);
    Rational sum(0);
    for (int k = 0; k <= n; ++k) sum += coeff_at(p.b, n - k) * row.at(k);
    values[n] = sum;
  }
  return make_result(p, Route::direct, std::move(values));
}

ScaledCoefficients coeffs_wojdylo(const LaplaceProblem& p) {
  validate_problem(p);
  const BellTable bell = bell_table(raw_tail(p), p.n_max);
  const Rational inv_a0 = Rational(1) / p.a[0];
  std::vector<Rational> values(p.n_max + 1);
  for (int n = 0; n <= p.n_max; ++n) {
    const Rational z = exponent_of(p, n);
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
      Rational inner(0);
      Rational sign_pow(1);  // (-1/a_0)^j
      for (int j = 0; j <= k; ++j) {
        inner += sign_pow * bell.at(k, j) / Rational(factorial(j)) * rising_factorial(z, j);
        sign_pow *= -inv_a0;
      }
      sum += coeff_at(p.b, n - k) * inner;
    }
    values[n] = sum;
  }
  return make_result(p, Route::wojdylo, std::move(values));
}

ScaledCoefficients coeffs_comtet(const LaplaceProblem& p, ComtetForm form) {
  validate_problem(p);
  const PotentialTable a = potential_integer_table(normalized_tail(p), p.n_max);
  std::vector<Rational> values(p.n_max + 1);
  for (int n = 0; n <= p.n_max; ++n) {
    const Rational z = exponent_of(p, n);
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
      Rational inner(0);
      if (form == ComtetForm::binomial) {
        for (int j = 0; j <= k; ++j) {
          Rational term = (z + Rational(k)) / (z + Rational(j)) *
                          Rational(binomial_integer(k, j)) * a.at(j, k);
          inner += ((k + j) % 2 == 0) ? term : -term;
        }
        sum += binomial_rational(-z, k) * coeff_at(p.b, n - k) * inner;
      } else {
        for (int j = 0; j <= k; ++j) {
          Rational term = Rational(binomial_integer(k, j)) * a.at(j, k) / (z + Rational(j));
          inner += (j % 2 == 0) ? term : -term;
        }
        sum += rising_factorial(z, k + 1) * coeff_at(p.b, n - k) / Rational(factorial(k)) * inner;
      }
    }
    values[n] = sum;
  }
  return make_result(p, Route::comtet, std::move(values));
}

ScaledCoefficients compute_coefficients(const LaplaceProblem& p, Route route) {
  switch (route) {
    case Route::direct:
      return coeffs_direct(p);
    case Route::wojdylo:
      return coeffs_wojdylo(p);
    case Route::comtet:
      return coeffs_comtet(p);
  }
  throw std::logic_error("unknown route");
}

ScaledCoefficients coeffs_g1(const LaplaceProblem& p, Route route) {
  validate_problem(p);
  if (!is_unit_g(p))
    throw ProblemError("single-sum routes require beta = 1 and b = (1, 0, 0, ...)");
  std::vector<Rational> values(p.n_max + 1);
  if (route == Route::comtet) {
    const PotentialTable a = potential_integer_table(normalized_tail(p), p.n_max);
    for (int n = 0; n <= p.n_max; ++n) {
      const Rational z = exponent_of(p, n);
      Rational sum(0);
      for (int k = 0; k <= n; ++k) {
        Rational term = Rational(binomial_integer(n, k)) * a.at(k, n) / (z + Rational(k));
        sum += (k % 2 == 0) ? term : -term;
      }
      values[n] = rising_factorial(z, n + 1) / Rational(factorial(n)) * sum;
    }
  } else if (route == Route::wojdylo) {
    const BellTable bell = bell_table(raw_tail(p), p.n_max);
    const Rational inv_a0 = Rational(1) / p.a[0];
    for (int n = 0; n <= p.n_max; ++n) {
      const Rational z = exponent_of(p, n);
      Rational sum(0);
      Rational sign_pow(1);
      for (int k = 0; k <= n; ++k) {
        sum += sign_pow * bell.at(n, k) / Rational(factorial(k)) * rising_factorial(z, k);
        sign_pow *= -inv_a0;
      }
      values[n] = sum;
    }
  } else {
    throw ProblemError("coeffs_g1 supports the comtet and wojdylo routes only");
  }
  return make_result(p, route, std::move(values));
}

namespace {

// Product of two polynomials (index = degree), truncated at degree n_max.
std::vector<Rational> poly_mul_trunc(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b, int n_max) {
  std::vector<Rational> out(n_max + 1, Rational(0));
  for (int i = 0; i <= n_max && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n_max && j < static_cast<int>(b.size()); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ScaledCoefficients reversion_oracle(const LaplaceProblem& p) {
  validate_problem(p);
  if (!is_unit_g(p))
    throw ProblemError("reversion oracle requires beta = 1 and b = (1, 0, 0, ...)");
  const int order = p.n_max + 1;  // highest power of the substitution variable
  const PotentialRow u = potential_row(Rational(1) / p.alpha, normalized_tail(p), order - 1);

  // w(x) = x * (A(x)/a_0)^(1/alpha) as a polynomial, w(x) = x + ...
  std::vector<Rational> w(order + 1, Rational(0));
  for (int m = 1; m <= order; ++m) w[m] = u.at(m - 1);

  // powers[k][n] = coefficient of x^n in w(x)^k, truncated.
  std::vector<std::vector<Rational>> powers(order + 1);
  powers[1] = w;
  for (int k = 2; k <= order; ++k) powers[k] = poly_mul_trunc(powers[k - 1], w, order);

  // Triangular reversion of w: x = sum_k delta_k w^k.
  std::vector<Rational> delta(order + 1, Rational(0));
  delta[1] = Rational(1);
  for (int n = 2; n <= order; ++n) {
    Rational sum(0);
    for (int k = 1; k < n; ++k) sum += delta[k] * powers[k][n];
    delta[n] = -sum;  // leading coefficient of w^n is 1
  }

  std::vector<Rational> values(p.n_max + 1);
  for (int n = 0; n <= p.n_max; ++n) values[n] = Rational(n + 1) * delta[n + 1];
  return make_result(p, Route::direct, std::move(values));
}

std::vector<ExpansionTerm> expansion_terms(const ScaledCoefficients& sc) {
  std::vector<ExpansionTerm> terms;
  terms.reserve(sc.values.size());
  for (int n = 0; n < static_cast<int>(sc.values.size()); ++n)
    terms.push_back({n, (Rational(n) + sc.problem.beta) / sc.problem.alpha, sc.values[n]});
  return terms;
}

}  // namespace laplace
