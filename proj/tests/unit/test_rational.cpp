#include <doctest.h>

#include "heisospec/rational.hpp"

using heisospec::InvalidParameterError;
using heisospec::OverflowError;
using heisospec::Rational;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(7, 3) / Rational(7, 3)).is_one());
}

TEST_CASE("rational comparisons and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-5, 4).abs() == Rational(5, 4));
  CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
  CHECK(Rational(5).is_integer());
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-2, 7).sign() == -1);
}

TEST_CASE("rational guards") {
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameterError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidParameterError);
  const std::int64_t big = INT64_MAX / 2;
  CHECK_THROWS_AS(Rational(big) * Rational(big), OverflowError);
  // intermediate products overflow 64 bits but the reduced result fits
  Rational huge(INT64_MAX / 3, 2);
  CHECK((huge + huge) == Rational(INT64_MAX / 3));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1.5"), InvalidParameterError);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidParameterError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidParameterError);
  CHECK(Rational::parse("7/3").str() == "7/3");
  CHECK(Rational::parse("4").str() == "4");
}
