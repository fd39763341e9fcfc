// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact; the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "algqe/invariants.hpp"
#include "algqe/parser.hpp"
#include "algqe/realify.hpp"
#include "algqe/real_qe.hpp"
#include "algqe/semantics.hpp"
#include "algqe/transfer.hpp"
#include "algqe/verify.hpp"
#include "oracle/blocks.hpp"

namespace {

using namespace algqe;
using Clock = std::chrono::steady_clock;

constexpr double kCountLimitS = 1.0;
constexpr double kQuatEndToEndLimitS = 30.0;
constexpr double kOctEndToEndLimitS = 60.0;
constexpr double kOracleLimitS = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few messages go into the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_ << (failures_ > 1 ? "; " : "") << what;
  }
  int failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failure(s): " + msgs_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msgs_;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome counts() {
  const auto t0 = Clock::now();
  Tally t;
  int cases = 0;
  for (int r = 1; r <= 3; ++r)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l) {
        ++cases;
        const TransferReport rep = stats(synthetic_conjunction(r, m, l), Algebra::Quaternion);
        const std::string at = "(r,m,l)=(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
        t.expect(rep.quantified_real_vars == static_cast<std::size_t>(4 * (l + m)), at + " quantified");
        t.expect(rep.atoms_pre_qe == static_cast<std::size_t>(4 * r + m + m * m + m * m * m), at + " atoms");
        t.expect(rep.total_vars == static_cast<std::size_t>(4 * (m + l) + m + m * m + m * m * m), at + " total");
      }
  const double s = seconds_since(t0);
  t.expect(s < kCountLimitS, "runtime " + fmt_s(s));
  return t.outcome(std::to_string(cases) + " (r,m,l) cases, " + fmt_s(s));
}

Outcome end_to_end(Algebra a, const std::string& phi_text, const std::string& expected_text, double limit,
                   const std::function<void(const AlgFormula&, Tally&)>& extra = {}) {
  const auto t0 = Clock::now();
  Tally t;
  const AlgFormula phi = parse_alg_formula(phi_text);
  TransferResult res;
  try {
    res = run_transfer(phi, a);
  } catch (const TransferFailure& e) {
    return {false, std::string("eliminate failed: ") + e.what()};
  }
  t.expect(res.formula.quantifier_free(), "output has quantifiers");
  CheckOptions opts;
  opts.samples = 1000;
  opts.seed = 1;
  const EquivalenceReport eq = check_equivalence(a, parse_alg_formula(expected_text), res.formula, opts);
  t.expect(eq.samples == 1000, "sample count");
  t.expect(eq.disagreement_count == 0, std::to_string(eq.disagreement_count) + " disagreements");
  t.expect(eq.inconclusive == 0, std::to_string(eq.inconclusive) + " inconclusive");
  if (extra) extra(res.formula, t);
  const double s = seconds_since(t0);
  t.expect(s < limit, "runtime " + fmt_s(s));
  return t.outcome("steps eq/lin/quad " + std::to_string(res.report.steps.eq_subst) + "/" +
                   std::to_string(res.report.steps.linear_vs) + "/" + std::to_string(res.report.steps.quadratic_vs) +
                   ", " + std::to_string(eq.agreements) + "/1000 agree, " + std::to_string(eq.disagreement_count) +
                   " disagree, " + std::to_string(eq.inconclusive) + " inconclusive, " + fmt_s(s));
}

template <class E>
void invariant_pairs(Algebra a, std::uint64_t seed, Tally& t) {
  std::vector<InvariantScheme> schemes;
  for (int m = 1; m <= 3; ++m) schemes.push_back(make_scheme(a, default_tuple_vars(m)));
  AutoSampler sampler(a, seed);
  for (int n = 0; n < 1000; ++n) {
    const InvariantScheme& s = schemes[static_cast<std::size_t>(n % 3)];
    const LinearMap g = sampler.next();
    std::vector<E> tuple, image;
    for (int i = 0; i < s.arity(); ++i) {
      tuple.push_back(random_element<E>(sampler.rng(), 10));
      image.push_back(g.apply(tuple.back()));
    }
    t.expect(eval_scheme<E>(s, tuple) == eval_scheme<E>(s, image),
             std::string(to_string(a)) + " pair " + std::to_string(n));
  }
}

Outcome invariant_equality() {
  Tally t;
  invariant_pairs<Quaternion>(Algebra::Quaternion, 4, t);
  invariant_pairs<Octonion>(Algebra::Octonion, 4, t);
  return t.outcome("1000 (tuple, automorphism) pairs per algebra, m = 1..3");
}

Outcome orientation() {
  Tally t;
  const InvariantScheme s = quat_scheme(3);
  const Quaternion i = Quaternion::basis(1), j = Quaternion::basis(2), k = Quaternion::basis(3);
  const auto v = eval_scheme<Quaternion>(s, std::vector<Quaternion>{i, j, k});
  const auto w = eval_scheme<Quaternion>(s, std::vector<Quaternion>{i, j, -k});
  Rational t3v, t3w;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const std::string& label = s.entries[n].label;
    if (label.rfind("L3", 0) == 0) {
      if (label == "L3[1,2,3]") {
        t3v = v[n];
        t3w = w[n];
      }
    } else {
      t.expect(v[n] == w[n], label + " differs");
    }
  }
  t.expect(t3v == Rational(-16), "tau3(i,j,k) = " + t3v.str());
  t.expect(t3w == Rational(16), "tau3(i,j,-k) = " + t3w.str());
  return t.outcome("tau1, tau2 agree; tau3[1,2,3] = " + t3v.str() + " vs " + t3w.str());
}

template <class E>
void identities(std::uint64_t seed, bool alternative, Tally& t) {
  Rng rng(seed);
  for (int n = 0; n < 1000; ++n) {
    const E x = random_element<E>(rng, 10), y = random_element<E>(rng, 10);
    const E xy = x * y;
    t.expect(xy.norm() == x.norm() * y.norm(), "N(xy)");
    t.expect(xy.conj() == y.conj() * x.conj(), "conj(xy)");
    t.expect(x * x.conj() == E::scalar(x.norm()), "x conj(x)");
    if (alternative) {
      t.expect((x * x) * y == x * (x * y), "left alternative");
      t.expect((y * x) * x == y * (x * x), "right alternative");
    }
  }
}

Outcome algebra_identities() {
  Tally t;
  identities<Quaternion>(6, false, t);
  identities<Octonion>(7, true, t);
  const Octonion i = Octonion::basis(1), j = Octonion::basis(2), l = Octonion::basis(4);
  const Octonion lhs = (i * j) * l, rhs = i * (j * l);
  t.expect(lhs != rhs, "(ij)l = i(jl)");
  return t.outcome("1000 pairs per algebra; (ij)l = " + lhs.str() + ", i(jl) = " + rhs.str());
}

Outcome word_counts() {
  Tally t;
  std::string got;
  for (int m = 1; m <= 3; ++m) {
    const std::size_t expected = static_cast<std::size_t>(m + m * m + 2 * m * m * m + 5 * m * m * m * m);
    const std::size_t n = enum_words(m).size();
    t.expect(n == expected, "m=" + std::to_string(m) + ": " + std::to_string(n) + " != " + std::to_string(expected));
    got += (m > 1 ? ", " : "") + std::to_string(n);
  }
  // The listed triple (9, 102, 525) disagrees with its own formula at m = 3;
  // the formula and the exhaustive enumeration both give 471.
  return t.outcome("counts " + got + " = m + m^2 + 2m^3 + 5m^4");
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  Tally t;
  Rng rng(8);
  std::size_t points = 0, true_count = 0;
  for (int n = 0; n < 500; ++n) {
    const oracle::Block b = oracle::random_block(rng);
    RealFormula out;
    try {
      out = eliminate_quantifiers(b.formula());
    } catch (const std::exception& e) {
      t.expect(false, "block " + std::to_string(n) + ": " + e.what());
      continue;
    }
    for (int k = 0; k < 200; ++k) {
      const Point pt = oracle::random_params(rng, b.params);
      const bool expected = oracle::decide(b, pt);
      ++points;
      true_count += expected;
      t.expect(eval_real_formula(out, pt) == expected, "block " + std::to_string(n) + " point " + std::to_string(k));
    }
  }
  const double s = seconds_since(t0);
  t.expect(s < kOracleLimitS, "runtime " + fmt_s(s));
  return t.outcome("500 blocks x 200 points, " + std::to_string(t.failures()) + " disagreements, " +
                   std::to_string(true_count) + "/" + std::to_string(points) + " true, " + fmt_s(s));
}

Outcome type_preservation() {
  const std::vector<std::pair<Algebra, std::string>> corpus = {
      {Algebra::Quaternion, "exists y. x*y = 1"},
      {Algebra::Quaternion, "exists y. y*y = x"},
      {Algebra::Quaternion, "forall y. x*y = y*x"},
      {Algebra::Quaternion, "exists y. y + conj(y) = x"},
      {Algebra::Quaternion, "exists y. x*y = 1 && y <= 1"},
      {Algebra::Quaternion, "exists y. x*y = y*x && y != x"},
      {Algebra::Quaternion, "exists y. x*y = y*x && y*y = x"},
      {Algebra::Quaternion, "x*x = x"},
      {Algebra::Octonion, "exists y. y + conj(y) = x"},
      {Algebra::Octonion, "exists y. y*y = x"},
      {Algebra::Octonion, "forall y. x*y = y*x"},
      {Algebra::Octonion, "exists y. x*y = 1 && y <= 1"},
      {Algebra::Octonion, "x*x = x"},
  };
  Tally t;
  std::size_t pairs = 0;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto& [a, text] = corpus[n];
    try {
      const AlgFormula out = run_transfer(parse_alg_formula(text), a).formula;
      const OrbitReport r = check_orbit_invariance(a, out, 200, 900 + n);
      pairs += r.samples;
      t.expect(r.ok(), text + ": " + std::to_string(r.violations.size()) + " violations");
    } catch (const TransferFailure& e) {
      t.expect(false, text + ": " + e.what());
    }
  }
  return t.outcome(std::to_string(corpus.size()) + " eliminated formulas, " + std::to_string(pairs) +
                   " (assignment, automorphism) pairs");
}

template <class E>
void realify_sound(Algebra a, std::uint64_t seed, Tally& t) {
  Rng rng(seed);
  const std::vector<std::string> vars{"x", "y", "z"};
  const auto structured = structured_elements<E>();
  const Realification ctx{a, true};
  for (int n = 0; n < 500; ++n) {
    const AlgFormula f = random_qf_formula(rng, vars, 3);
    const RealFormula r = realify_formula(f, ctx);
    for (int k = 0; k < 100; ++k) {
      Assignment<E> env;
      std::map<std::string, Rational> coords;
      for (const auto& v : vars) {
        const E x = random_below(rng, 4) == 0 ? structured[random_below(rng, structured.size())]
                                               : random_element<E>(rng, 5);
        env[v] = x;
        for (int c = 0; c < E::kDim; ++c) coords[coordinate_name(v, c)] = x[c];
      }
      t.expect(eval_formula(f, env) == eval_real_formula(r, make_point(coords)),
               std::string(to_string(a)) + ": " + to_string(f));
    }
  }
}

Outcome realification() {
  Tally t;
  realify_sound<Quaternion>(Algebra::Quaternion, 10, t);
  realify_sound<Octonion>(Algebra::Octonion, 11, t);
  return t.outcome("500 formulas x 100 points per algebra");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "quaternion reduction counts", counts},
      {2, "quaternion invertibility end to end",
       [] {
         return end_to_end(Algebra::Quaternion, "exists y. x*y = 1", "!(x = 0)", kQuatEndToEndLimitS,
                           [](const AlgFormula& out, Tally& t) {
                             const Assignment<Quaternion> zero{{"x", Quaternion{}}};
                             t.expect(!eval_formula(out, zero), "true at x = 0");
                           });
       }},
      {3, "octonion real parts end to end",
       [] { return end_to_end(Algebra::Octonion, "exists y. y + conj(y) = x", "x = conj(x)", kOctEndToEndLimitS); }},
      {4, "invariants constant on orbits", invariant_equality},
      {5, "orientation separated by tau3", orientation},
      {6, "algebra identities", algebra_identities},
      {7, "word enumeration counts", word_counts},
      {8, "real backend vs root isolation oracle", oracle_equivalence},
      {9, "eliminated formulas are orbit invariant", type_preservation},
      {10, "realification soundness", realification},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    passed += o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
