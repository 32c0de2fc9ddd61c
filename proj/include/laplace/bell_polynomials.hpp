#pragma once

#include <vector>

#include "laplace/rational.hpp"

namespace laplace {

/// Coefficients f_1, f_2, ... of a power series with constant term 1.
/// The constant term is implicit; coeffs[i] holds f_{i+1}.
struct NormalizedSeries {
  std::vector<Rational> coeffs;

  // f_n, with f_0 = 1; zero beyond the stored range and for n < 0.
  Rational at(int n) const;
  int terms() const { return static_cast<int>(coeffs.size()); }
};

/// Partial ordinary Bell polynomials B_{n,k} of a series, stored as a
/// triangle: row n holds k = 0..n. B_{n,k} is the x^n coefficient of
/// (f_1 x + f_2 x^2 + ...)^k.
class BellTable {
 public:
  explicit BellTable(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {}

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  Rational at(int n, int k) const;  // zero outside the triangle
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// One row of ordinary potential polynomials: values[n] = A_{rho,n}, the
/// x^n coefficient of (1 + f_1 x + f_2 x^2 + ...)^rho.
struct PotentialRow {
  Rational rho;
  std::vector<Rational> values;

  Rational at(int n) const;
  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

/// Square table values[j][n] = A_{j,n} for integer exponents j = 0..n_max.
struct PotentialTable {
  std::vector<std::vector<Rational>> values;

  Rational at(int j, int n) const;
  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// Builds B_{n,k} for 0 <= k <= n <= n_max by column recurrence:
//   B_{n,0} = [n == 0],  B_{n,k+1} = sum_{j=1}^{n-k} f_j B_{n-j,k}.
BellTable bell_table(const NormalizedSeries& f, int n_max);

// A_{rho,n} for n = 0..n_max. For a nonnegative integer rho this uses
// repeated convolution; otherwise it reduces to the Bell table via
//   A_{rho,n} = sum_k binom(rho, k) B_{n,k}.
PotentialRow potential_row(const Rational& rho, const NormalizedSeries& f, int n_max);

// Binomial-sum path over an existing Bell table (any rational rho).
PotentialRow potential_row(const Rational& rho, const BellTable& bell);

// Integer-exponent rows A_{j,n}, j = 0..n_max, by the additive recurrence
//   A_{j,n} = A_{j-1,n} + sum_{k=1}^{n} f_k A_{j-1,n-k}.
PotentialTable potential_integer_table(const NormalizedSeries& f, int n_max);

// Reconstructs the Bell triangle from integer potential rows by inversion:
//   B_{n,j} = (-1)^j sum_{i=0}^{j} (-1)^i binom(j, i) A_{i,n}.
BellTable bell_from_potential(const NormalizedSeries& f, int n_max);

}  // namespace laplace
