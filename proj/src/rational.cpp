#include "laplace/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace laplace {

namespace {

void canonicalize(mpq_class& q) { mpq_canonicalize(q.get_mpq_t()); }

// Strict integer literal: optional sign followed by one or more digits.
bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  canonicalize(q_);
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  canonicalize(q_);
}

Rational Rational::from_string(std::string_view s) {
  // GMP's string constructor rejects an explicit '+', so shed it here.
  const auto strip_plus = [](std::string_view v) {
    return v.size() > 1 && v.front() == '+' ? v.substr(1) : v;
  };
  const auto slash = s.find('/');
  const std::string_view num_part = s.substr(0, slash);
  if (!valid_integer_token(num_part))
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
  if (slash == std::string_view::npos)
    return Rational(Integer(std::string(strip_plus(num_part))));
  const std::string_view den_part = s.substr(slash + 1);
  if (!valid_integer_token(den_part))
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
  const Integer num{std::string(strip_plus(num_part))};
  const Integer den{std::string(strip_plus(den_part))};
  if (sgn(den) == 0)
    throw std::invalid_argument("Rational: zero denominator in \"" + std::string(s) + "\"");
  return Rational(num, den);
}

bool Rational::fits_long() const { return is_integer() && q_.get_num().fits_slong_p(); }

long Rational::to_long() const {
  if (!fits_long()) throw std::domain_error("Rational: value does not fit a long");
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::domain_error("Rational: zero to a negative power");
  const unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace laplace
