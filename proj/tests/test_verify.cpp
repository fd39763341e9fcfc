#include <doctest.h>

#include "algqe/parser.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

TEST_CASE("octonion multiplication table has 1344 signed symmetries") {
  const auto& syms = octonion_table_symmetries();
  CHECK(syms.size() == 1344);
  for (std::size_t n = 0; n < syms.size(); n += 97) CHECK(is_automorphism(syms[n]));
}

TEST_CASE("conjugation by 1 + i") {
  const LinearMap g = conjugation_map(Quaternion(1, 1, 0, 0));
  CHECK(is_automorphism(g));
  CHECK(g.apply(Quaternion::basis(1)) == Quaternion::basis(1));
  CHECK(g.apply(Quaternion::basis(2)) == Quaternion::basis(3));
  CHECK(g.apply(Quaternion::basis(3)) == -Quaternion::basis(2));
}

TEST_CASE("non-automorphisms are rejected") {
  LinearMap swap(Algebra::Quaternion);
  // i <-> j alone reverses orientation.
  swap.at(1, 1) = 0;
  swap.at(2, 2) = 0;
  swap.at(1, 2) = 1;
  swap.at(2, 1) = 1;
  CHECK_FALSE(is_automorphism(swap));
  LinearMap scale(Algebra::Octonion);
  scale.at(0, 0) = 2;
  CHECK_FALSE(is_automorphism(scale));
  CHECK(is_automorphism(LinearMap(Algebra::Octonion)));
}

TEST_CASE("lifted quaternion automorphisms preserve the octonion product") {
  AutoSampler s(Algebra::Quaternion, 3);
  for (int n = 0; n < 10; ++n) CHECK(is_automorphism(octonion_lift(s.next())));
}

TEST_CASE("sampled automorphisms are exact and reproducible") {
  for (Algebra a : {Algebra::Quaternion, Algebra::Octonion}) {
    AutoSampler s1(a, 99), s2(a, 99), s3(a, 100);
    bool differs = false;
    for (int n = 0; n < 20; ++n) {
      const LinearMap g = s1.next();
      CHECK(is_automorphism(g));
      CHECK(g == s2.next());
      differs = differs || !(g == s3.next());
    }
    CHECK(differs);
  }
}

TEST_CASE("equivalence check finds a planted disagreement") {
  const EquivalenceReport r =
      check_equivalence(Algebra::Quaternion, parse_alg_formula("x = 0"), AlgFormula::truth(), {200, 1, 10, 256});
  CHECK(r.disagreement_count > 0);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.disagreements.empty());
  CHECK(r.disagreements.front().original != r.disagreements.front().eliminated);
  CHECK(r.to_json()["kind"] == "equivalence");
}

TEST_CASE("equivalence check is deterministic") {
  const auto phi = parse_alg_formula("exists y. x*y = 1");
  const auto psi = parse_alg_formula("x*x <= 1");
  const auto a = check_equivalence(Algebra::Quaternion, phi, psi, {300, 5, 10, 256});
  const auto b = check_equivalence(Algebra::Quaternion, phi, psi, {300, 5, 10, 256});
  CHECK(a.to_json() == b.to_json());
  CHECK(a.disagreement_count > 0);
}

TEST_CASE("existential witnesses are found") {
  const auto r = check_equivalence(Algebra::Octonion, parse_alg_formula("exists y. y*y = x*x"),
                                   AlgFormula::truth(), {200, 2, 10, 256});
  CHECK(r.ok());
  CHECK(r.inconclusive == 0);
}

TEST_CASE("unsupported quantifier shapes") {
  CHECK_THROWS_AS(check_equivalence(Algebra::Quaternion, parse_alg_formula("exists y. forall z. y = z"),
                                    AlgFormula::truth()),
                  UnsupportedShape);
}

TEST_CASE("orbit invariance holds for formulas of the language") {
  Rng rng(12);
  for (Algebra a : {Algebra::Quaternion, Algebra::Octonion}) {
    for (int n = 0; n < 10; ++n) {
      const AlgFormula f = random_qf_formula(rng, {"x", "y"}, 3);
      CHECK(check_orbit_invariance(a, f, 50, static_cast<std::uint64_t>(n)).ok());
    }
  }
}
