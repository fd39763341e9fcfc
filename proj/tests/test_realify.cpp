#include <doctest.h>

#include "algqe/parser.hpp"
#include "algqe/realify.hpp"
#include "algqe/semantics.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

namespace {

template <class E>
Point coordinates(const Assignment<E>& env) {
  std::map<std::string, Rational> values;
  for (const auto& [name, x] : env)
    for (int i = 0; i < E::kDim; ++i) values[coordinate_name(name, i)] = x[i];
  return make_point(values);
}

template <class E>
void check_soundness(Algebra a, std::uint64_t seed, int formulas, int points) {
  Rng rng(seed);
  const std::vector<std::string> vars{"x", "y", "z"};
  const auto structured = structured_elements<E>();
  for (bool simplify : {true, false}) {
    const Realification ctx{a, simplify};
    for (int n = 0; n < formulas; ++n) {
      const AlgFormula f = random_qf_formula(rng, vars, 3);
      const RealFormula r = realify_formula(f, ctx);
      for (int k = 0; k < points; ++k) {
        Assignment<E> env;
        for (const auto& v : vars)
          env[v] = k < static_cast<int>(structured.size()) && random_below(rng, 2) == 0
                       ? structured[random_below(rng, structured.size())]
                       : random_element<E>(rng, 4);
        CAPTURE(to_string(f));
        CHECK(eval_formula(f, env) == eval_real_formula(r, coordinates(env)));
      }
    }
  }
}

}  // namespace

TEST_CASE("coordinate names") {
  CHECK(coordinate_name("x", 0) == "x_0");
  CHECK(coordinate_name("v2", 7) == "v2_7");
  const Realification q{Algebra::Quaternion, true};
  CHECK(q.coords("y").size() == 4);
  CHECK(Realification{Algebra::Octonion, true}.coords("y").size() == 8);
}

TEST_CASE("quaternion product in coordinates") {
  const Realification ctx{Algebra::Quaternion, true};
  const auto xy = realify_term(parse_alg_term("x*y"), ctx);
  REQUIRE(xy.size() == 4);
  CHECK(xy[0] == parse_poly("x_0*y_0 - x_1*y_1 - x_2*y_2 - x_3*y_3"));
  CHECK(xy[1] == parse_poly("x_0*y_1 + x_1*y_0 + x_2*y_3 - x_3*y_2"));
  CHECK(xy[2] == parse_poly("x_0*y_2 - x_1*y_3 + x_2*y_0 + x_3*y_1"));
  CHECK(xy[3] == parse_poly("x_0*y_3 + x_1*y_2 - x_2*y_1 + x_3*y_0"));
  const auto c = realify_term(parse_alg_term("conj(x) + 2"), ctx);
  CHECK(c[0] == parse_poly("x_0 + 2"));
  CHECK(c[3] == parse_poly("-x_3"));
}

TEST_CASE("atoms expand to coordinatewise conditions") {
  const Realification ctx{Algebra::Quaternion, true};
  const RealFormula eq = realify_formula(parse_alg_formula("x = 0"), ctx);
  CHECK(eq.atom_count() == 4);
  CHECK(eval_real_formula(eq, make_point({{"x_0", 0}, {"x_1", 0}, {"x_2", 0}, {"x_3", 0}})));
  CHECK_FALSE(eval_real_formula(eq, make_point({{"x_0", 0}, {"x_1", 0}, {"x_2", 1}, {"x_3", 0}})));

  // t <= u holds only between central values.
  const RealFormula le = realify_formula(parse_alg_formula("x <= 1"), ctx);
  CHECK(eval_real_formula(le, make_point({{"x_0", Rational(1, 2)}, {"x_1", 0}, {"x_2", 0}, {"x_3", 0}})));
  CHECK_FALSE(eval_real_formula(le, make_point({{"x_0", 2}, {"x_1", 0}, {"x_2", 0}, {"x_3", 0}})));
  CHECK_FALSE(eval_real_formula(le, make_point({{"x_0", 0}, {"x_1", 1}, {"x_2", 0}, {"x_3", 0}})));
  const RealFormula nle = realify_formula(parse_alg_formula("!(x <= 1)"), ctx);
  CHECK(eval_real_formula(nle, make_point({{"x_0", 0}, {"x_1", 1}, {"x_2", 0}, {"x_3", 0}})));
}

TEST_CASE("octonion equation has eight coordinates") {
  const Realification ctx{Algebra::Octonion, false};
  CHECK(realify_formula(parse_alg_formula("x*y = y*x"), ctx).atom_count() == 8);
}

TEST_CASE("quantifiers are realified over all coordinates") {
  const Realification ctx{Algebra::Quaternion, true};
  const RealFormula r = realify_formula(parse_alg_formula("exists y. x*y = 1"), ctx);
  int binders = 0;
  RealFormula cur = r;
  while (cur.kind() == RealFormula::Kind::Exists) {
    ++binders;
    cur = cur.body();
  }
  CHECK(binders == 4);
  CHECK(cur.atom_count() == 4);
}

TEST_CASE("realification is sound on random formulas") {
  check_soundness<Quaternion>(Algebra::Quaternion, 31, 100, 20);
  check_soundness<Octonion>(Algebra::Octonion, 32, 60, 10);
}
