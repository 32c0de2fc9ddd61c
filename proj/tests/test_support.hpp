#pragma once

// Deliberately naive power-series oracles used to cross-check the library's
// recurrences, plus random-input helpers. Everything works on dense
// coefficient vectors poly[i] = coefficient of x^i.

#include <random>
#include <vector>

#include "laplace/bell_polynomials.hpp"
#include "laplace/number_kernels.hpp"
#include "laplace/rational.hpp"

namespace testsupport {

using laplace::NormalizedSeries;
using laplace::Rational;

using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& p, const Poly& q, int n_max) {
  Poly out(n_max + 1, Rational(0));
  for (int i = 0; i <= n_max && i < static_cast<int>(p.size()); ++i)
    for (int j = 0; i + j <= n_max && j < static_cast<int>(q.size()); ++j)
      out[i + j] += p[i] * q[j];
  return out;
}

inline Poly poly_pow(const Poly& p, int k, int n_max) {
  Poly out(n_max + 1, Rational(0));
  out[0] = Rational(1);
  for (int i = 0; i < k; ++i) out = poly_mul(out, p, n_max);
  return out;
}

// 1 / p to order n_max; requires p[0] == 1.
inline Poly poly_inverse(const Poly& p, int n_max) {
  Poly inv(n_max + 1, Rational(0));
  inv[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k)
      s += (k < static_cast<int>(p.size()) ? p[k] : Rational(0)) * inv[n - k];
    inv[n] = -s;
  }
  return inv;
}

// A_{rho,n} by the generalized binomial series (1+u)^rho = sum_k C(rho,k) u^k
// with u = f_1 x + f_2 x^2 + ... ; u^k needs no terms past k = n_max.
inline Poly potential_brute(const Rational& rho, const NormalizedSeries& f, int n_max) {
  Poly u(n_max + 1, Rational(0));
  for (int i = 1; i <= n_max; ++i) u[i] = f.at(i);
  Poly out(n_max + 1, Rational(0));
  Poly upow(n_max + 1, Rational(0));
  upow[0] = Rational(1);
  for (int k = 0; k <= n_max; ++k) {
    const Rational c = laplace::binomial_rational(rho, k);
    for (int n = 0; n <= n_max; ++n) out[n] += c * upow[n];
    upow = poly_mul(upow, u, n_max);
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Rational(n, den(rng));
}

inline NormalizedSeries random_series(std::mt19937_64& rng, int terms) {
  NormalizedSeries f;
  for (int i = 0; i < terms; ++i) f.coeffs.push_back(random_rational(rng));
  return f;
}

}  // namespace testsupport
