#include <doctest.h>

#include "algqe/errors.hpp"
#include "algqe/normal_forms.hpp"
#include "algqe/parser.hpp"
#include "algqe/real_qe.hpp"
#include "algqe/semantics.hpp"
#include "algqe/verify.hpp"
#include "oracle/blocks.hpp"

using namespace algqe;

namespace {

RealFormula qe(const std::string& text) { return eliminate_quantifiers(parse_real_formula(text)); }

bool holds(const RealFormula& f, std::map<std::string, Rational> values) {
  return eval_real_formula(f, make_point(values));
}

QfClause clause(const std::string& text) {
  QfClause out;
  for (const auto& c : to_clauses(parse_real_formula(text))) out.insert(out.end(), c.begin(), c.end());
  return out;
}

const std::vector<Rational> kGrid = {-3, -1, Rational(-1, 2), 0, Rational(1, 3), 1, 2};

}  // namespace

TEST_CASE("linear existential over a sign grid") {
  const RealFormula f = qe("exists x. a*x + b = 0");
  for (const auto& a : kGrid)
    for (const auto& b : kGrid) CHECK(holds(f, {{"a", a}, {"b", b}}) == (!a.is_zero() || b.is_zero()));
}

TEST_CASE("closed linear examples") {
  CHECK(qe("exists x. x <= 0 && 0 <= x") == RealFormula::truth());
  CHECK(qe("exists x. 1 <= x && x <= 0") == RealFormula::falsity());
  CHECK(qe("exists x. exists y. x = y && y = z") == RealFormula::truth());
  CHECK(qe("forall x. x^2 >= 0") == RealFormula::truth());
}

TEST_CASE("quadratic examples") {
  const RealFormula sq = qe("exists x. x^2 = c");
  for (const auto& c : kGrid) CHECK(holds(sq, {{"c", c}}) == (c.sign() >= 0));
  CHECK(qe("exists x. x^2 + 1 = 0") == RealFormula::falsity());
  CHECK(qe("exists x. x^2 - 3*x + 2 <= 0") == RealFormula::truth());
  CHECK(qe("exists x. x^2 - 3*x + 2 < 0 && x > 3/2") == RealFormula::truth());
  CHECK(qe("exists x. x^2 - 3*x + 2 < 0 && x > 2") == RealFormula::falsity());

  // Discriminant characterisation of a general quadratic.
  const RealFormula g = qe("exists x. a*x^2 + b*x + c = 0");
  for (const auto& a : kGrid)
    for (const auto& b : kGrid)
      for (const auto& c : kGrid) {
        const bool expected =
            a.is_zero() ? (!b.is_zero() || c.is_zero()) : (b * b - Rational(4) * a * c).sign() >= 0;
        CHECK(holds(g, {{"a", a}, {"b", b}, {"c", c}}) == expected);
      }
}

TEST_CASE("degree limits") {
  // Only odd powers of x: substituting u = x^3 leaves a linear problem.
  CHECK(qe("exists x. x^3 = z") == RealFormula::truth());
  CHECK_THROWS_AS(qe("exists x. x^3 + x = z"), DegreeTooHigh);
  try {
    qe("exists x. x^3 + x = z");
  } catch (const DegreeTooHigh& e) {
    CHECK(e.var() == "x");
    CHECK(e.degree() == 3);
    CHECK_FALSE(e.partial().quantifier_free());
  }
  CHECK_THROWS_AS(linear_vs({clause("x^2 - a <= 0")}, Var("x")), DegreeTooHigh);
}

TEST_CASE("equation substitution") {
  const Var v("v");
  const EqSubstitution s = eq_substitute(clause("2*v - z = 0 && v <= 1"), v);
  CHECK(s.guard.empty());
  CHECK_FALSE(s.degenerate);
  CHECK(from_clauses(s.clause) == parse_real_formula("z - 2 <= 0"));

  const EqSubstitution inv = eq_substitute(clause("x*v - 1 = 0"), v);
  CHECK(from_clauses({inv.guard}) == parse_real_formula("x != 0"));
  CHECK(inv.clause == ClauseSet{QfClause{}});
  CHECK_FALSE(inv.degenerate);  // x = 0 leaves -1 = 0

  CHECK_THROWS_AS(eq_substitute(clause("z = 1"), v), NotApplicable);
  CHECK_THROWS_AS(eq_substitute(clause("v^2 = 1"), v), NotApplicable);
}

TEST_CASE("simplify examples") {
  CHECK(simplify(parse_real_formula("0 <= 1 && a < 0")) == parse_real_formula("a < 0"));
  CHECK(simplify(parse_real_formula("a < 0 || a < 0")) == parse_real_formula("a < 0"));
  CHECK(simplify(parse_real_formula("2*z - 2 = 0")) == parse_real_formula("z - 1 = 0"));
  CHECK(simplify(parse_real_formula("a < 0 && a > 0")) == RealFormula::falsity());
  CHECK(simplify(parse_real_formula("a^2 + 1 = 0")) == RealFormula::falsity());
}

TEST_CASE("simplify preserves evaluation") {
  const std::vector<std::string> corpus = {
      "a < 0 || a = 0 || a > 0",
      "a*b <= 0 && (a < 0 || b <= 0)",
      "!(a^2 - b = 0) -> a*b + 1 >= 2",
      "(a - b)^2 <= 0 || a^2*b^2 > 1",
      "a^2 + b^2 = 0 && a + b + 1 != 0",
      "2*a - 4*b < 0 && 3*a - 6*b <= 0",
  };
  Rng rng(77);
  for (const auto& text : corpus) {
    CAPTURE(text);
    const RealFormula f = parse_real_formula(text);
    const RealFormula g = simplify(f);
    for (int k = 0; k < 1000; ++k) {
      const Point pt = make_point({{"a", random_rational(rng, 3)}, {"b", random_rational(rng, 3)}});
      CHECK(eval_real_formula(f, pt) == eval_real_formula(g, pt));
    }
  }
}

TEST_CASE("quantifier-free input passes through") {
  const RealFormula f = parse_real_formula("a^2 - b < 0 || a = b");
  const RealFormula g = eliminate_block({Var("x")}, f);
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Point pt = make_point({{"a", random_rational(rng, 3)}, {"b", random_rational(rng, 3)}});
    CHECK(eval_real_formula(f, pt) == eval_real_formula(g, pt));
  }
}

TEST_CASE("univariate oracle basics") {
  using oracle::UPoly;
  // (x - 1)(x + 2)(x^2 - 2)
  const UPoly p = UPoly({-1, 1}) * UPoly({2, 1}) * UPoly({-2, 0, 1});
  const auto roots = oracle::isolate(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].left() <= Rational(-2));
  CHECK(roots[3].right() >= Rational(1));
  CHECK(oracle::Sturm(p.squarefree()).roots_in(-10, 10) == 4);
  CHECK(oracle::isolate(UPoly({1, 0, 1})).empty());
  CHECK((UPoly({-1, 1}) * UPoly({-1, 1})).squarefree().degree() == 1);
  // Evaluated after back substitution x2 = x1 + a1.
  oracle::Block b;
  b.params = {Var("a1")};
  b.bound = {Var("x1"), Var("x2")};
  b.defs = {parse_poly("x1 + a1")};
  b.body = parse_real_formula("x1*x2 + 1 <= 0");  // x^2 + a x + 1 <= 0 iff a^2 >= 4
  for (const auto& a : kGrid)
    CHECK(oracle::decide(b, make_point({{"a1", a}})) == (a * a >= Rational(4)));
}

TEST_CASE("backend agrees with the root isolation oracle") {
  Rng rng(2024);
  for (int n = 0; n < 40; ++n) {
    const oracle::Block b = oracle::random_block(rng);
    const RealFormula f = b.formula();
    const RealFormula out = eliminate_quantifiers(f);
    std::set<std::string> vars;
    all_vars(out, vars);
    for (Var x : b.bound) CHECK_FALSE(vars.contains(x.name()));
    for (int k = 0; k < 50; ++k) {
      const Point pt = oracle::random_params(rng, b.params);
      CAPTURE(to_string(f));
      CHECK(eval_real_formula(out, pt) == oracle::decide(b, pt));
    }
  }
}
