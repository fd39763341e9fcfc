#include <doctest.h>

#include "algqe/parser.hpp"
#include "algqe/transfer.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

namespace {

void check_equivalent(Algebra a, const AlgFormula& original, const AlgFormula& eliminated, std::size_t samples = 300) {
  CheckOptions opts;
  opts.samples = samples;
  const EquivalenceReport r = check_equivalence(a, original, eliminated, opts);
  CAPTURE(to_string(eliminated));
  CHECK(r.disagreement_count == 0);
  CHECK(r.agreements + r.inconclusive == samples);
}

}  // namespace

TEST_CASE("quaternion reduction counts") {
  for (int r = 1; r <= 3; ++r)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l) {
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(l);
        const TransferReport rep = stats(synthetic_conjunction(r, m, l), Algebra::Quaternion);
        CHECK(rep.quantified_real_vars == static_cast<std::size_t>(4 * (l + m)));
        CHECK(rep.atoms_pre_qe == static_cast<std::size_t>(4 * r + m + m * m + m * m * m));
        CHECK(rep.total_vars == static_cast<std::size_t>(4 * (m + l) + m + m * m + m * m * m));
      }
  const TransferReport two = stats(synthetic_conjunction(2, 2, 0), Algebra::Quaternion);
  CHECK(two.atoms_pre_qe == 22);
}

TEST_CASE("octonion reduction counts") {
  const TransferReport rep = stats(synthetic_conjunction(1, 1, 1), Algebra::Octonion);
  CHECK(rep.quantified_real_vars == 16);
  CHECK(rep.atoms_pre_qe == 17);
  CHECK(rep.total_vars == 25);
}

TEST_CASE("job construction") {
  const TransferJob job = make_job(parse_alg_formula("exists y. x*y = 1"), Algebra::Quaternion);
  CHECK(job.m() == 1);
  CHECK(job.l() == 1);
  CHECK(job.free == std::vector<std::string>{"x"});
  CHECK(job.scheme.size() == 3);
  CHECK(job.z.size() == 3);
}

TEST_CASE("invertibility over the quaternions") {
  const AlgFormula phi = parse_alg_formula("exists y. x*y = 1");
  const TransferResult res = run_transfer(phi, Algebra::Quaternion);
  CHECK(res.formula.quantifier_free());
  CHECK(res.report.status == "ok");
  CHECK(res.report.steps.eq_subst + res.report.steps.linear_vs + res.report.steps.quadratic_vs > 0);
  check_equivalent(Algebra::Quaternion, parse_alg_formula("x != 0"), res.formula);
}

TEST_CASE("real parts over the octonions") {
  const AlgFormula phi = parse_alg_formula("exists y. y + conj(y) = x");
  const TransferResult res = run_transfer(phi, Algebra::Octonion);
  check_equivalent(Algebra::Octonion, parse_alg_formula("x = conj(x)"), res.formula);
}

TEST_CASE("trivial and constant matrices") {
  CHECK(run_transfer(parse_alg_formula("exists y. x = x"), Algebra::Quaternion).formula == AlgFormula::truth());
  CHECK(run_transfer(parse_alg_formula("exists y. 0 = 1"), Algebra::Quaternion).formula == AlgFormula::falsity());
  const TransferResult qf = run_transfer(parse_alg_formula("x*x = x"), Algebra::Quaternion);
  check_equivalent(Algebra::Quaternion, parse_alg_formula("x*x = x"), qf.formula);
}

TEST_CASE("commuting square roots always exist") {
  const TransferResult res = run_transfer(parse_alg_formula("exists y. x*y = y*x && y*y = x"), Algebra::Quaternion);
  check_equivalent(Algebra::Quaternion, AlgFormula::truth(), res.formula);
}

TEST_CASE("eliminated formulas keep the free variables") {
  const TransferResult res = run_transfer(parse_alg_formula("exists y. x*y = 1"), Algebra::Quaternion);
  for (const auto& v : free_vars(res.formula)) CHECK(v == "x");
}

TEST_CASE("backend limits surface as transfer failures") {
  TransferOptions opts;
  opts.qe.max_clauses = 3;
  CHECK_THROWS_AS(run_transfer(parse_alg_formula("exists y. x*y = 1"), Algebra::Quaternion, opts), TransferFailure);
}
