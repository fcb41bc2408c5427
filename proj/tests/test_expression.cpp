#include "doctest.h"
#include "sdist/error.hpp"
#include "sdist/expression.hpp"

using namespace sdist;

TEST_CASE("parse_polynomial accepts the documented grammar") {
  const Polynomial f = parse_polynomial("3/2*x1^2*x3 - x2 + 1", 3);
  CHECK(f.size() == 3);
  CHECK(f.coefficient(Monomial(std::vector<std::uint32_t>{2, 0, 1})) == Rational(3, 2));
  CHECK(f.coefficient(Monomial::variable(3, 1)) == -1);
  CHECK(f.coefficient(Monomial(3)) == 1);

  CHECK(parse_polynomial("  x1 ^ 2*x2  ", 2) == parse_polynomial("x1^2*x2", 2));
  CHECK(parse_polynomial("-x1 + x1", 2).is_zero());
  CHECK(parse_polynomial("0.25*x2", 2).coefficient(Monomial::variable(2, 1)) == Rational(1, 4));
  CHECK(parse_polynomial("x1*x1*2", 2).coefficient(Monomial::variable(2, 0, 2)) == 2);
  CHECK(parse_polynomial("+5", 2) == Polynomial::constant(2, Rational(5)));
  CHECK(parse_polynomial("2*x1 - 3*x1", 2).to_string() == "-x1");
}

TEST_CASE("parse_polynomial rejects malformed text") {
  CHECK_THROWS_AS(parse_polynomial("", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^0", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0*x1", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1**2", 2), ParseError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("1e3") == 1000);
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("0.5", false), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
}
