#include <doctest.h>

#include "lgh/errors.hpp"
#include "lgh/rational.hpp"

using namespace lgh;

TEST_CASE("parsing and printing") {
  CHECK(to_string(parse_rational("-4")) == "-4/1");
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational(" 10/4 ")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
  CHECK_THROWS_AS(parse_rational(""), ParameterError);
  const RationalC c = parse_rational_complex("1/2,-3");
  CHECK(c.re == Rational(1, 2));
  CHECK(c.im == Rational(-3));
  CHECK(parse_rational_complex("7").im == 0);
}

TEST_CASE("exact complex arithmetic") {
  const RationalC i(Rational(0), Rational(1));
  CHECK(i * i == RationalC(-1));
  const RationalC a(Rational(1, 3), Rational(2, 5));
  CHECK((a - a).is_zero());
  CHECK(a * RationalC(3) == RationalC(Rational(1), Rational(6, 5)));
  CHECK(to_string(a) == "(1/3, 2/5)");
}

TEST_CASE("big values never overflow") {
  Rational r(1);
  for (int i = 0; i < 200; ++i) r *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) r /= Rational(3, 2);
  CHECK(r == 1);
  Rational big(1);
  for (int i = 0; i < 100; ++i) big *= 10;
  CHECK_THROWS_AS(numerator_i64(big), ParameterError);
  CHECK(numerator_i64(Rational(-7, 3)) == -7);
  CHECK(denominator_i64(Rational(-7, 3)) == 3);
}
