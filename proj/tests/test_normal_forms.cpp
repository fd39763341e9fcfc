#include <doctest.h>

#include <set>

#include "algqe/normal_forms.hpp"
#include "algqe/parser.hpp"
#include "algqe/real_qe.hpp"
#include "algqe/semantics.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

namespace {

Assignment<Quaternion> random_env(Rng& rng, const std::vector<std::string>& vars) {
  static const auto structured = structured_elements<Quaternion>();
  Assignment<Quaternion> env;
  for (const auto& v : vars)
    env[v] = random_below(rng, 3) == 0 ? structured[random_below(rng, structured.size())]
                                       : random_element<Quaternion>(rng, 3);
  return env;
}

bool literal(const AlgFormula& f) {
  using K = AlgFormula::Kind;
  return f.kind() == K::Atom || (f.kind() == K::Not && f.lhs().kind() == K::Atom);
}

bool is_nnf(const AlgFormula& f) {
  using K = AlgFormula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or: return is_nnf(f.lhs()) && is_nnf(f.rhs());
    case K::Not: return f.lhs().kind() == K::Atom;
    case K::Implies: return false;
    default: return true;
  }
}

}  // namespace

TEST_CASE("nnf and dnf preserve truth") {
  Rng rng(23);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int n = 0; n < 300; ++n) {
    const AlgFormula f = random_qf_formula(rng, vars, 3);
    const AlgFormula g = nnf(f);
    const Dnf<AlgAtom> d = to_dnf(f);
    CHECK(is_nnf(g));
    for (const auto& c : d.clauses)
      for (const auto& l : c) CHECK(literal(l));
    for (int k = 0; k < 10; ++k) {
      const auto env = random_env(rng, vars);
      const bool truth = eval_formula(f, env);
      CHECK(eval_formula(g, env) == truth);
      CHECK(eval_formula(d.formula(), env) == truth);
    }
  }
}

TEST_CASE("dnf respects the clause limit") {
  const AlgFormula f = parse_alg_formula(
      "(a = 0 || b = 0) && (c = 0 || d = 0) && (e = 0 || f = 0) && (g = 0 || h = 0)");
  CHECK(to_dnf(f).clauses.size() == 16);
  CHECK_THROWS_AS(to_dnf(f, 8), SizeLimitExceeded);
}

TEST_CASE("prenex form pulls quantifiers out and renames apart") {
  const AlgFormula f = parse_alg_formula("(exists y. x*y = 1) && !(exists y. y*y = x)");
  const auto pf = prenex_form(f);
  REQUIRE(pf.prefix.size() == 2);
  CHECK(pf.prefix[0].exists);
  CHECK_FALSE(pf.prefix[1].exists);
  CHECK(pf.prefix[0].var != pf.prefix[1].var);
  CHECK(pf.matrix.quantifier_free());
  CHECK(free_vars(pf.formula()) == std::vector<std::string>{"x"});

  const auto imp = prenex_form(parse_alg_formula("(forall y. y = x) -> exists z. z = x"));
  REQUIRE(imp.prefix.size() == 2);
  CHECK(imp.prefix[0].exists);  // antecedent flips
  CHECK(imp.prefix[1].exists);
}

TEST_CASE("prenex form of a real formula is equivalent") {
  // Both sides are decided by the backend and compared pointwise.
  const std::vector<std::string> texts = {
      "(exists x. a*x = 1) && !(exists x. x^2 + a < 0)",
      "(forall x. x^2 + b >= 0) -> exists y. y^2 = b",
      "!(forall x. a*x + b != 0) || (exists x. x < a && x > b)",
  };
  Rng rng(9);
  for (const auto& t : texts) {
    CAPTURE(t);
    const RealFormula f = parse_real_formula(t);
    const RealFormula pf = prenex(f);
    CHECK(pf.is_quantifier());
    const RealFormula a = eliminate_quantifiers(f), b = eliminate_quantifiers(pf);
    for (int k = 0; k < 200; ++k) {
      const Point pt = make_point({{"a", random_rational(rng, 4)}, {"b", random_rational(rng, 4)}});
      CHECK(eval_real_formula(a, pt) == eval_real_formula(b, pt));
    }
  }
}

TEST_CASE("substitution avoids capture") {
  const AlgFormula f = parse_alg_formula("exists y. x*y = y*x");
  const AlgFormula g = substitute(f, "x", AlgTerm::var("y"));
  REQUIRE(g.is_quantifier());
  CHECK(g.var() != "y");
  CHECK(free_vars(g) == std::vector<std::string>{"y"});
  // Bound occurrences are left alone.
  CHECK(substitute(f, "y", AlgTerm::var("z")) == f);
  const AlgFormula h = substitute(parse_alg_formula("x = 1 && exists x. x = 0"), "x", AlgTerm::zero());
  CHECK(to_string(h) == "0 = 1 && (exists x. x = 0)");
}

TEST_CASE("free variables are listed atom by atom, sorted within an atom") {
  CHECK(free_vars(parse_alg_formula("z = x && exists y. y = w")) == std::vector<std::string>{"x", "z", "w"});
  CHECK(free_vars(parse_alg_formula("exists y. y = y")).empty());
}
