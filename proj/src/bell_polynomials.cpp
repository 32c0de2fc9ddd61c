#include "laplace/bell_polynomials.hpp"

#include <stdexcept>

#include "laplace/number_kernels.hpp"

namespace laplace {

namespace {

void check_n_max(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
}

}  // namespace

Rational NormalizedSeries::at(int n) const {
  if (n == 0) return Rational(1);
  if (n < 1 || n > terms()) return Rational(0);
  return coeffs[n - 1];
}

Rational BellTable::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > n_max()) return Rational(0);
  return rows_[n][k];
}

Rational PotentialRow::at(int n) const {
  if (n < 0 || n > n_max()) return Rational(0);
  return values[n];
}

Rational PotentialTable::at(int j, int n) const {
  if (j < 0 || j > n_max() || n < 0 || n > n_max()) return Rational(0);
  return values[j][n];
}

BellTable bell_table(const NormalizedSeries& f, int n_max) {
  check_n_max(n_max);
  std::vector<std::vector<Rational>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) rows[n].assign(n + 1, Rational(0));
  rows[0][0] = Rational(1);
  for (int k = 0; k < n_max; ++k) {
    for (int n = k + 1; n <= n_max; ++n) {
      Rational sum(0);
      for (int j = 1; j <= n - k; ++j) sum += f.at(j) * rows[n - j][k];
      rows[n][k + 1] = sum;
    }
  }
  return BellTable(std::move(rows));
}

namespace {

// One multiplication by (1 + f_1 x + ... ), truncated at degree n_max.
std::vector<Rational> convolve_step(const std::vector<Rational>& row, const NormalizedSeries& f,
                                    int n_max) {
  std::vector<Rational> next(n_max + 1, Rational(0));
  for (int n = 0; n <= n_max; ++n) {
    Rational sum = row[n];
    for (int k = 1; k <= n; ++k) sum += f.at(k) * row[n - k];
    next[n] = sum;
  }
  return next;
}

}  // namespace

PotentialRow potential_row(const Rational& rho, const NormalizedSeries& f, int n_max) {
  check_n_max(n_max);
  if (rho.is_integer() && !rho.is_negative() && rho.fits_long()) {
    const long e = rho.to_long();
    std::vector<Rational> row(n_max + 1, Rational(0));
    row[0] = Rational(1);
    for (long step = 0; step < e; ++step) row = convolve_step(row, f, n_max);
    return PotentialRow{rho, std::move(row)};
  }
  return potential_row(rho, bell_table(f, n_max));
}

PotentialRow potential_row(const Rational& rho, const BellTable& bell) {
  const int n_max = bell.n_max();
  std::vector<Rational> row(n_max + 1, Rational(0));
  // binom(rho, k), built incrementally.
  std::vector<Rational> binom(n_max + 1, Rational(1));
  for (int k = 1; k <= n_max; ++k) binom[k] = binom[k - 1] * (rho - Rational(k - 1)) / Rational(k);
  for (int n = 0; n <= n_max; ++n) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) sum += binom[k] * bell.at(n, k);
    row[n] = sum;
  }
  return PotentialRow{rho, std::move(row)};
}

PotentialTable potential_integer_table(const NormalizedSeries& f, int n_max) {
  check_n_max(n_max);
  std::vector<std::vector<Rational>> values(n_max + 1);
  values[0].assign(n_max + 1, Rational(0));
  values[0][0] = Rational(1);
  for (int j = 1; j <= n_max; ++j) values[j] = convolve_step(values[j - 1], f, n_max);
  return PotentialTable{std::move(values)};
}

BellTable bell_from_potential(const NormalizedSeries& f, int n_max) {
  check_n_max(n_max);
  const PotentialTable a = potential_integer_table(f, n_max);
  std::vector<std::vector<Rational>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, Rational(0));
    for (int j = 0; j <= n; ++j) {
      Rational sum(0);
      for (int i = 0; i <= j; ++i) {
        const Rational term = Rational(binomial_integer(j, i)) * a.at(i, n);
        sum += (i % 2 == 0) ? term : -term;
      }
      rows[n][j] = (j % 2 == 0) ? sum : -sum;
    }
  }
  return BellTable(std::move(rows));
}

}  // namespace laplace
