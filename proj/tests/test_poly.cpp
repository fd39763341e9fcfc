#include <doctest.h>

#include "algqe/parser.hpp"
#include "algqe/poly.hpp"
#include "algqe/semantics.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(3, -6).sign() == -1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS(Rational(0).inverse());
  Rational root;
  CHECK(Rational(9, 4).perfect_square(&root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(Rational(2).perfect_square(&root));
}

TEST_CASE("polynomial arithmetic is canonical") {
  const Poly x(Var("x")), y(Var("y"));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK(parse_poly("(x + 1)^3") == parse_poly("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(parse_poly("2*x*y - y*x") == x * y);
  CHECK(parse_poly("x^2*y + 1").degree() == 3);
  CHECK(parse_poly("x^2*y + 1").degree_in(Var("y")) == 1);
  CHECK(parse_poly("7").constant_value() == Rational(7));
  CHECK_FALSE(parse_poly("x").constant_value());
}

TEST_CASE("coefficient views round trip") {
  const Var x("x");
  const Poly p = parse_poly("a*x^2 - 3*x + b*c");
  const auto cs = p.coeffs_in(x);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == parse_poly("b*c"));
  CHECK(cs[1] == Poly(-3));
  CHECK(cs[2] == parse_poly("a"));
  CHECK(Poly::from_coeffs(x, cs) == p);
  CHECK(p.derivative(x) == parse_poly("2*a*x - 3"));
}

TEST_CASE("substitution and evaluation agree") {
  Rng rng(3);
  const Var x("x"), y("y");
  const Poly p = parse_poly("x^3*y - 2*x*y^2 + 5");
  const Poly q = parse_poly("y - 1/2");
  for (int n = 0; n < 100; ++n) {
    const Rational vy = random_rational(rng, 9);
    const Point pt = make_point({{"y", vy}});
    Point full = pt;
    full[x.id()] = q.eval(pt);
    CHECK(p.substitute(x, q).eval(pt) == p.eval(full));
    CHECK(p.partial_eval(pt).substitute(x, q.partial_eval(pt)).eval({}) == p.eval(full));
  }
}

TEST_CASE("primitive part clears denominators and content") {
  const Poly p = parse_poly("2/3*x + 4/9*y");
  const Poly prim = p.primitive();
  CHECK(prim == parse_poly("3*x + 2*y"));
  CHECK(p.primitive_scale() * p == prim);
}
