#include <doctest.h>

#include <cmath>

#include "dwedge/expr.hpp"

using namespace dwedge;

namespace {

double eval(const std::string& text, const Vector& x, double t = 0.0) {
  return parse_expression(text, x.dim())->eval(x, t);
}

}  // namespace

TEST_CASE("literals, coordinates and time") {
  Vector x{2.0, -3.0};
  CHECK(eval("42", x) == 42.0);
  CHECK(eval("1.5e2", x) == 150.0);
  CHECK(eval("x1", x) == 2.0);
  CHECK(eval("x2", x) == -3.0);
  CHECK(eval("t", x, 7.5) == 7.5);
}

TEST_CASE("arithmetic and precedence") {
  Vector x{2.0, 3.0};
  CHECK(eval("1 + 2 * 3", x) == 7.0);
  CHECK(eval("(1 + 2) * 3", x) == 9.0);
  CHECK(eval("2 ^ 3 ^ 2", x) == 512.0);  // right associative
  CHECK(eval("-x1 ^ 2", x) == -4.0);
  CHECK(eval("10 - 4 - 3", x) == 3.0);
  CHECK(eval("12 / 4 / 3", x) == 1.0);
  CHECK(eval("x1 * x2 - 1", x) == 5.0);
}

TEST_CASE("functions") {
  Vector x{0.5};
  CHECK(eval("sin(0)", x) == 0.0);
  CHECK(eval("cos(0)", x) == 1.0);
  CHECK(eval("exp(1)", x) == doctest::Approx(std::exp(1.0)));
  CHECK(eval("sin(x1)^2 + cos(x1)^2", x) == doctest::Approx(1.0));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expression("x5", 3), ParseError);
  CHECK_THROWS_AS(parse_expression("foo + 1", 3), ParseError);
  CHECK_THROWS_AS(parse_expression("1 + ", 3), ParseError);
  CHECK_THROWS_AS(parse_expression("(1 + 2", 3), ParseError);
  CHECK_THROWS_AS(parse_expression("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_expression("sin 1", 3), ParseError);
  try {
    parse_expression("1 + @", 3);
    CHECK_MESSAGE(false, "expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column == 5);
  }
}
