#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "laplace/rational.hpp"

using laplace::Integer;
using laplace::Rational;

TEST_CASE("construction canonicalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(Integer(10), Integer(-15)).str() == "-2/3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(Integer(3), Integer(0)), std::invalid_argument);
}

TEST_CASE("from_string accepts integers and fractions") {
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("+3/6") == Rational(1, 2));
  CHECK(Rational::from_string("9/-12") == Rational(-3, 4));
  CHECK(Rational::from_string("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");
}

TEST_CASE("from_string rejects malformed input") {
  for (const char* bad : {"", " 1", "1 ", "1.5", "1e3", "a", "1/", "/2", "1//2", "1/2/3", "--1",
                          "0x10", "1/0", "2 /3"})
    CHECK_THROWS_AS(Rational::from_string(bad), std::invalid_argument);
}

TEST_CASE("arithmetic matches hand results") {
  const Rational a(3, 4), b(-5, 6);
  CHECK((a + b).str() == "-1/12");
  CHECK((a - b).str() == "19/12");
  CHECK((a * b).str() == "-5/8");
  CHECK((a / b).str() == "-9/10");
  CHECK((-b).str() == "5/6");
  CHECK(a.abs() == a);
  CHECK(b.abs().str() == "5/6");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3) >= Rational(2, 3));
  CHECK(Rational(1, 7) != Rational(1, 8));
}

TEST_CASE("pow_int handles negative exponents and zero") {
  CHECK(Rational(2, 3).pow_int(3).str() == "8/27");
  CHECK(Rational(2, 3).pow_int(-2).str() == "9/4");
  CHECK(Rational(2, 3).pow_int(0) == Rational(1));
  CHECK(Rational(0).pow_int(5) == Rational(0));
  CHECK(Rational(0).pow_int(0) == Rational(1));
  CHECK(Rational(-1, 2).pow_int(3).str() == "-1/8");
  CHECK_THROWS_AS(Rational(0).pow_int(-1), std::domain_error);
}

TEST_CASE("integer queries and conversions") {
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(5, 3).is_integer());
  CHECK(Rational(42).fits_long());
  CHECK(Rational(42).to_long() == 42);
  const Rational huge = Rational(2).pow_int(200);
  CHECK(huge.is_integer());
  CHECK_FALSE(huge.fits_long());
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("str round-trips through from_string") {
  for (const Rational& r : {Rational(0), Rational(-7), Rational(22, 7), Rational(-1, 1000000)}) {
    CHECK(Rational::from_string(r.str()) == r);
    std::ostringstream os;
    os << r;
    CHECK(os.str() == r.str());
  }
}
