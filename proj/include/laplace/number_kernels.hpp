#pragma once

#include <vector>

#include "laplace/rational.hpp"

namespace laplace {

enum class StirlingKind { first_unsigned, second };

/// Triangular table of Stirling numbers, grown row by row. Row n holds the
/// entries for k = 0..n; everything outside the triangle is zero.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(StirlingKind kind, int n_max = 0);

  StirlingKind kind() const { return kind_; }
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }

  // Extends the table so that rows 0..n_max exist. Monotone: never shrinks.
  void extend(int n_max);

  // Value at (n, k); zero outside the triangle. Requires n <= max_row().
  const Integer& at(int n, int k) const;

  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  // Replaces the table with externally provided rows (e.g. a disk cache)
  // when they are larger than what is currently held. Shapes and anchor
  // values are checked; bad data throws std::invalid_argument.
  void seed(const std::vector<std::vector<Integer>>& rows);

 private:
  StirlingKind kind_;
  std::vector<std::vector<Integer>> rows_;
};

// Process-wide memoized access. Both functions return 0 for arguments
// outside the triangle (n < 0, k < 0 or k > n).
Integer stirling_first(int n, int k);   // unsigned kind, |s(n, k)|
Integer stirling_second(int n, int k);  // S(n, k)

// Snapshot of / seed for the process-wide triangle of the given kind; used by
// callers that persist the tables across runs.
std::vector<std::vector<Integer>> stirling_snapshot(StirlingKind kind);
void stirling_seed(StirlingKind kind, const std::vector<std::vector<Integer>>& rows);

Integer factorial(int n);                 // n >= 0
Integer binomial_integer(int n, int k);   // n >= 0; zero when k < 0 or k > n

// binom(rho, k) = rho (rho-1) ... (rho-k+1) / k! for rational rho, k >= 0.
Rational binomial_rational(const Rational& rho, int k);

// z (z+1) ... (z+j-1); empty product (j = 0) is 1. j >= 0.
Rational rising_factorial(const Rational& z, int j);

// Gamma(m + 1/2) / sqrt(pi) = (2m)! / (4^m m!), exact. m >= 0.
Rational gamma_half_ratio(int m);

}  // namespace laplace
