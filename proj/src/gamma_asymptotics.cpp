#include "laplace/gamma_asymptotics.hpp"

#include <stdexcept>
#include <string>

#include "laplace/number_kernels.hpp"

namespace laplace {

namespace {

Integer pow2(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

void check_nonneg(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

Rational fact(int n) { return Rational(factorial(n)); }

}  // namespace

LaplaceProblem gamma_integral_problem(int n_max) {
  check_nonneg(n_max, "n_max");
  LaplaceProblem p;
  p.alpha = Rational(2);
  p.beta = Rational(1);
  p.n_max = n_max;
  p.a.reserve(n_max + 1);
  for (int k = 0; k <= n_max; ++k) p.a.push_back(Rational(k % 2 == 0 ? 1 : -1, k + 2));
  p.b.assign(n_max + 1, Rational(0));
  p.b[0] = Rational(1);
  return p;
}

LaplaceProblem gamma_integral_problem_mirror(int n_max) {
  LaplaceProblem p = gamma_integral_problem(n_max);
  for (int k = 0; k <= n_max; ++k) p.a[k] = p.a[k].abs();
  return p;
}

StirlingCoefficients stirling_via_pipeline(int n_max, Route route) {
  check_nonneg(n_max, "n_max");
  const ScaledCoefficients sc = compute_coefficients(gamma_integral_problem(2 * n_max), route);
  StirlingCoefficients out{route, {}};
  out.gamma.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational g = Rational(pow2(n)) * gamma_half_ratio(n) * sc.values[2 * n];
    out.gamma.push_back(n % 2 == 0 ? g : -g);
  }
  return out;
}

const char* stirling_variant_name(StirlingVariant v) {
  switch (v) {
    case StirlingVariant::first_kind_potential:
      return "first-kind potential";
    case StirlingVariant::first_kind_bell:
      return "first-kind bell";
    case StirlingVariant::second_kind_potential:
      return "second-kind potential";
    case StirlingVariant::second_kind_bell:
      return "second-kind bell";
  }
  return "?";
}

Rational stirling_closed_form(int n, StirlingVariant variant) {
  check_nonneg(n, "n");
  const bool second = variant == StirlingVariant::second_kind_potential ||
                      variant == StirlingVariant::second_kind_bell;
  const auto stir = [second](int nn, int kk) {
    return second ? stirling_second(nn, kk) : stirling_first(nn, kk);
  };
  const bool potential = variant == StirlingVariant::first_kind_potential ||
                         variant == StirlingVariant::second_kind_potential;
  Rational total(0);
  if (potential) {
    const Rational gh = gamma_half_ratio(3 * n + 1);
    for (int k = 0; k <= 2 * n; ++k) {
      Rational inner(0);
      for (int j = 0; j <= k; ++j) {
        const Rational t =
            Rational(stir(2 * n + k + j, j)) / (fact(k - j) * fact(2 * n + k + j));
        inner += (j % 2 == 0) ? t : -t;
      }
      total += Rational(pow2(n + k + 1)) * gh / (Rational(2 * n + 2 * k + 1) * fact(2 * n - k)) *
               inner;
    }
  } else {
    for (int k = 0; k <= 2 * n; ++k) {
      Rational mid(0);
      for (int j = 0; j <= k; ++j) {
        Rational inner(0);
        for (int i = 0; i <= j; ++i) {
          const Rational t =
              Rational(stir(2 * n + j + i, i)) / (fact(j - i) * fact(2 * n + j + i));
          inner += (i % 2 == 0) ? t : -t;
        }
        mid += Rational(pow2(j)) / fact(k - j) * inner;
      }
      total += Rational(pow2(n)) * gamma_half_ratio(n + k) * mid;
    }
  }
  return (n % 2 == 0) ? total : -total;
}

Rational potential_closed_form_log(int k, int n) {
  check_nonneg(k, "k");
  check_nonneg(n, "n");
  Rational sum(0);
  for (int j = 0; j <= k; ++j) {
    const Rational t = Rational(binomial_integer(k, j)) * fact(j) *
                       Rational(stirling_first(n + k + j, j)) / fact(n + k + j);
    sum += ((n + k + j) % 2 == 0) ? t : -t;
  }
  return Rational(pow2(k)) * sum;
}

Rational QPolynomial::eval(const Rational& mu) const {
  Rational acc(0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) acc = acc * mu + q[k];
  return acc;
}

QPolynomial q_polynomial(int n) {
  check_nonneg(n, "n");
  QPolynomial out;
  out.n = n;
  out.q.resize(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    const Rational gh = gamma_half_ratio(n + k + 1);

    // Stirling double sum.
    Rational first(0);
    for (int j = 0; j <= k; ++j) {
      Rational inner(0);
      for (int i = 0; i <= j; ++i) {
        const Rational t = Rational(stirling_first(k + j + i, i)) / (fact(j - i) * fact(k + j + i));
        inner += (i % 2 == 0) ? t : -t;
      }
      first += Rational(pow2(n + j + 1)) * gh / (Rational(2 * n + 2 * j + 1) * fact(k - j)) * inner;
    }
    if (k % 2 != 0) first = -first;

    // Potential-polynomial sum over the same kernel.
    Rational second(0);
    for (int j = 0; j <= k; ++j) {
      const Rational t = Rational(binomial_integer(k, j)) * potential_closed_form_log(j, k) /
                         Rational(2 * n + 2 * j + 1);
      second += (j % 2 == 0) ? t : -t;
    }
    second *= Rational(pow2(n + 1)) * gh / fact(k);

    if (first != second)
      throw std::logic_error("q_polynomial: independent formulas disagree at n = " +
                             std::to_string(n) + ", k = " + std::to_string(k));
    out.q[k] = first;
  }
  return out;
}

std::vector<Rational> diagonal_coefficients(int n_max) {
  check_nonneg(n_max, "n_max");
  const StirlingCoefficients st = stirling_via_pipeline(n_max);
  const ScaledCoefficients sc = coeffs_direct(gamma_integral_problem(2 * n_max + 1));
  std::vector<Rational> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational sum = -st.gamma[n] / Rational(3);
    // Odd-index coefficients unscale exactly: c_m = scaled_c_m * 2^((m-1)/2).
    for (int k = 0; k < n; ++k)
      sum += fact(n - k) * st.gamma[k] * sc.values[2 * n - 2 * k + 1] * Rational(pow2(n - k));
    c[n] = sum;
  }
  return c;
}

}  // namespace laplace
