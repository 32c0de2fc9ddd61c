#include "laplace/number_kernels.hpp"

#include <mutex>
#include <stdexcept>

namespace laplace {

namespace {

const Integer kZero = 0;

void check_nonneg(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

StirlingTriangle::StirlingTriangle(StirlingKind kind, int n_max) : kind_(kind) {
  rows_.push_back({Integer(1)});
  extend(n_max);
}

void StirlingTriangle::extend(int n_max) {
  while (max_row() < n_max) {
    const int n = max_row();  // next row index is n + 1
    const auto& prev = rows_[n];
    std::vector<Integer> row(n + 2);
    // s(n+1, k) = s(n, k-1) + n * s(n, k)   (unsigned first kind)
    // S(n+1, k) = S(n, k-1) + k * S(n, k)
    for (int k = 0; k <= n + 1; ++k) {
      Integer v = (k > 0) ? prev[k - 1] : kZero;
      if (k <= n) v += (kind_ == StirlingKind::first_unsigned ? Integer(n) : Integer(k)) * prev[k];
      row[k] = v;
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& StirlingTriangle::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return kZero;
  return rows_.at(n)[k];
}

void StirlingTriangle::seed(const std::vector<std::vector<Integer>>& rows) {
  // Validate even when the data is too small to be applied: callers feed
  // this from disk caches and rely on bad data being rejected loudly.
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].size() != n + 1)
      throw std::invalid_argument("StirlingTriangle: row length mismatch in seed data");
    if (rows[n][n] != 1 || rows[n][0] != (n == 0 ? 1 : 0))
      throw std::invalid_argument("StirlingTriangle: seed data fails anchor check");
  }
  if (static_cast<int>(rows.size()) - 1 <= max_row()) return;
  rows_ = rows;
}

namespace {

struct SharedTriangle {
  std::mutex mu;
  StirlingTriangle tri;
  explicit SharedTriangle(StirlingKind k) : tri(k) {}
};

SharedTriangle& shared_triangle(StirlingKind kind) {
  static SharedTriangle first(StirlingKind::first_unsigned);
  static SharedTriangle second(StirlingKind::second);
  return kind == StirlingKind::first_unsigned ? first : second;
}

Integer shared_lookup(StirlingKind kind, int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  auto& s = shared_triangle(kind);
  std::lock_guard<std::mutex> lock(s.mu);
  s.tri.extend(n);
  return s.tri.at(n, k);
}

}  // namespace

Integer stirling_first(int n, int k) { return shared_lookup(StirlingKind::first_unsigned, n, k); }

Integer stirling_second(int n, int k) { return shared_lookup(StirlingKind::second, n, k); }

std::vector<std::vector<Integer>> stirling_snapshot(StirlingKind kind) {
  auto& s = shared_triangle(kind);
  std::lock_guard<std::mutex> lock(s.mu);
  return s.tri.rows();
}

void stirling_seed(StirlingKind kind, const std::vector<std::vector<Integer>>& rows) {
  auto& s = shared_triangle(kind);
  std::lock_guard<std::mutex> lock(s.mu);
  s.tri.seed(rows);
}

Integer factorial(int n) {
  check_nonneg(n, "factorial argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial_integer(int n, int k) {
  check_nonneg(n, "binomial_integer n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial_rational(const Rational& rho, int k) {
  check_nonneg(k, "binomial_rational k");
  Rational result(1);
  for (int i = 0; i < k; ++i) result *= (rho - Rational(i)) / Rational(i + 1);
  return result;
}

Rational rising_factorial(const Rational& z, int j) {
  check_nonneg(j, "rising_factorial j");
  Rational result(1);
  for (int i = 0; i < j; ++i) result *= z + Rational(i);
  return result;
}

Rational gamma_half_ratio(int m) {
  check_nonneg(m, "gamma_half_ratio m");
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(m));
  return Rational(factorial(2 * m), four_pow * factorial(m));
}

}  // namespace laplace
