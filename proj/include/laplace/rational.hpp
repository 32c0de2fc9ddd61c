#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace laplace {

using Integer = mpz_class;

/// Exact rational scalar. Canonical after every operation: the denominator is
/// positive and coprime to the numerator, so bitwise-equal values compare
/// equal and serialize identically.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den);
  explicit Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);

  // Parses "p/q" or "p" (optional leading sign on either part).
  // Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational from_string(std::string_view s);

  Integer numerator() const { return Integer(q_.get_num()); }
  Integer denominator() const { return Integer(q_.get_den()); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool fits_long() const;
  long to_long() const;  // requires is_integer() && fits_long()

  // "p/q", or just "p" when the denominator is 1. Sign goes on the numerator.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  Rational abs() const;
  // Integer power with negative exponents allowed; 0 to a negative power
  // throws std::domain_error.
  Rational pow_int(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Underlying GMP value, e.g. for seeding an MPFR register.
  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace laplace
