#include <stdexcept>

#include "doctest.h"
#include "pmsched/errors.hpp"
#include "pmsched/rational.hpp"

using pmsched::ParseError;
using pmsched::Rational;

TEST_SUITE("rational") {

TEST_CASE("decimal parsing is exact") {
  CHECK(Rational::from_decimal("0.165") == Rational(33, 200));
  CHECK(Rational::from_decimal(".5") == Rational(1, 2));
  CHECK(Rational::from_decimal("2") == Rational(2));
  CHECK(Rational::from_decimal("-0.25") == Rational(-1, 4));
  CHECK(Rational::from_decimal("0.098") == Rational(49, 500));
  CHECK(Rational::from_decimal("0.500000000000") == Rational(1, 2));
  CHECK(Rational::from_decimal("1.0") == Rational(1));
}

TEST_CASE("bad literals are rejected") {
  CHECK_THROWS_AS(Rational::from_decimal("abc"), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal(""), ParseError);
  CHECK_THROWS_AS(Rational::from_decimal("."), ParseError);
}

TEST_CASE("construction normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(49, 500) == Rational(201, 500));
  CHECK(Rational(1, 2) * Rational(49, 500) == Rational(49, 1000));
  CHECK(Rational(49, 500) / Rational(1, 5) == Rational(49, 100));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  // the boundary sum the clique scenarios sit on: 0.5 + 5 * 0.098 = 0.99
  Rational s = Rational(1, 2);
  for (int i = 0; i < 5; ++i) s += Rational(49, 500);
  CHECK(s == Rational(99, 100));
  CHECK(s < Rational(1));
  CHECK(s + Rational(1, 100) == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational(49, 500) < Rational(1, 10));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 10) > Rational(2, 10));
}

TEST_CASE("overflow throws instead of wrapping") {
  const Rational big(3000000000000000000LL);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  // near-limit products that still fit reduce fine
  CHECK(Rational(1000000007LL) * Rational(1000000009LL) ==
        Rational(1000000007LL * 1000000009LL));
}

TEST_CASE("rendering") {
  CHECK(Rational(33, 200).str() == "33/200");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(-1, 4).str() == "-1/4");
  CHECK(Rational(49, 500).to_double() == doctest::Approx(0.098));
}

}  // TEST_SUITE
