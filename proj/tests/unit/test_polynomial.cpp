#include <doctest.h>

#include "qgr/error.hpp"
#include "qgr/polynomial.hpp"

using namespace qgr;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
Polynomial P(const char* s) { return parse_polynomial(s, xyz); }
}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("x*y + x*z + y*z^2").to_string() == "y*z^2 + x*y + x*z");
  CHECK(P("x*y + x*z + y*z^2").to_string(TermOrder::Ascending) == "x*z + x*y + y*z^2");
  CHECK(P("xy + xz + yz^2") == P("x*y + x*z + y*z^2"));
  CHECK(P("3 - 2*x^2").to_string() == "-2*x^2 + 3");
  CHECK(P("0").to_string() == "0");
  CHECK(P("x - x").is_zero());
  CHECK(univariate({1, 0, 2}).to_string() == "2*q^2 + 1");
  CHECK_THROWS_AS(P("x + w"), ValidationError);
  CHECK_THROWS_AS(P("x +"), ValidationError);
}

TEST_CASE("arithmetic") {
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK((P("x + 1")).pow(3) == P("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P("x") + P("-x") == Polynomial(xyz));
  CHECK(-P("x - 1") == P("1 - x"));
  CHECK(P("x*y") * Integer(0) == Polynomial(xyz));
  CHECK_THROWS_AS(P("x") + parse_polynomial("x", {"x"}), ValidationError);
}

TEST_CASE("big coefficients stay exact") {
  const auto p = P("2*x + 1").pow(80);
  CHECK(p.coefficient({80, 0, 0}) == Integer(1) << 80);
  CHECK(p.evaluate(std::vector<Integer>{1, 0, 0}) == boost::multiprecision::pow(Integer(3), 80));
}

TEST_CASE("degrees, coefficients, derivatives") {
  const auto p = P("x*y + x*z + y*z^2");
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(2) == 2);
  CHECK(p.coefficient({0, 1, 2}) == 1);
  CHECK(p.derivative(0) == P("y + z"));
  CHECK(p.derivative(1) == P("x + z^2"));
  CHECK(p.derivative(2) == P("x + 2*y*z"));
}

TEST_CASE("substitution and evaluation") {
  const auto p = P("x*y + z");
  CHECK(p.substitute(2, P("x^2")) == P("x*y + x^2"));
  CHECK(p.evaluate(std::vector<Integer>{2, 3, -1}) == 5);
  CHECK(p.evaluate(std::vector<Rational>{Rational(1, 2), Rational(4), Rational(0)}) == 2);
}

TEST_CASE("coefficient list") {
  const auto p = univariate({1, 0, 2});
  CHECK(coefficient_list(p) == std::vector<Integer>{1, 0, 2});
  CHECK_THROWS_AS(coefficient_list(P("x*y")), ValidationError);
}
