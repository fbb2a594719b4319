#include <genocchi/rational.hpp>

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using genocchi::Integer;
using genocchi::Rational;

TEST_CASE("arithmetic is exact and normalized") {
  CHECK(Rational(1, 6) + Rational(-1, 2) == Rational(-1, 3));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
}

TEST_CASE("construction enforces lowest terms and a positive denominator") {
  const Rational half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);

  const Rational neg(1, -2);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  const Rational zero(0, 7);
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);

  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("denominator_of") {
  CHECK(genocchi::denominator_of(Rational(3, 4)) == 4);
  CHECK(genocchi::denominator_of(Rational(5)) == 1);
  CHECK(genocchi::denominator_of(Rational(-7, 3)) == 3);
}

TEST_CASE("is_integer and sign") {
  CHECK(Rational(6, 3).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("string form is p/q with /q omitted for integers") {
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(0).str() == "0");
  std::ostringstream os;
  os << Rational(2, 4);
  CHECK(os.str() == "1/2");
}

TEST_CASE("parse accepts p/q and bare integers") {
  CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse(" 2/4 ") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("big values stay exact") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(Integer(1000000007));
  CHECK(x.denominator() == 1);
  CHECK(genocchi::denominator_of(Rational(1) / x) == x.numerator());
}
