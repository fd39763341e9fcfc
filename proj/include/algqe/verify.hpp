#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "algqe/algebra.hpp"
#include "algqe/formula.hpp"
#include "algqe/semantics.hpp"

namespace algqe {

using Rng = std::mt19937_64;

// Uniform-ish p/q with |p| <= bound, 1 <= q <= bound. Draws by modulo so the
// stream is identical across standard libraries.
Rational random_rational(Rng& rng, int bound);
std::uint64_t random_below(Rng& rng, std::uint64_t n);

template <class E>
E random_element(Rng& rng, int bound) {
  E out;
  for (int i = 0; i < E::kDim; ++i) out[i] = random_rational(rng, bound);
  return out;
}

template <class E>
std::vector<Rational> coords_of(const E& x) {
  std::vector<Rational> out;
  for (int i = 0; i < E::kDim; ++i) out.push_back(x[i]);
  return out;
}

// Linear map on coordinates; column j is the image of basis element j.
class LinearMap {
 public:
  explicit LinearMap(Algebra a);  // identity
  Algebra algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const Rational& at(int row, int col) const { return m_[row * dim_ + col]; }
  Rational& at(int row, int col) { return m_[row * dim_ + col]; }

  template <class E>
  E apply(const E& x) const {
    if (E::kDim != dim_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    E out;
    for (int r = 0; r < dim_; ++r) {
      Rational s;
      for (int c = 0; c < dim_; ++c)
        if (!x[c].is_zero() && !at(r, c).is_zero()) s += at(r, c) * x[c];
      out[r] = s;
    }
    return out;
  }

  // (this after first)(x) = this(first(x))
  LinearMap after(const LinearMap& first) const;
  nlohmann::json to_json() const;  // rows of rational strings
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Algebra algebra_;
  int dim_;
  std::vector<Rational> m_;
};

// Exact check: g(1) = 1 and g(e_i e_j) = g(e_i) g(e_j) on all basis pairs.
bool is_automorphism(const LinearMap& g);

// v -> q v q^-1.
LinearMap conjugation_map(const Quaternion& q);
// (p + r l) -> phi(p) + phi(r) l for a quaternion automorphism phi.
LinearMap octonion_lift(const LinearMap& phi);
// Signed permutations of the imaginary octonion units that preserve the
// multiplication table. Computed once by search over images of i, j, l.
const std::vector<LinearMap>& octonion_table_symmetries();

// Deterministic stream of verified automorphisms. Octonion maps come from
// the subgroup generated by quaternion lifts and table symmetries, not all
// of G2(Q).
class AutoSampler {
 public:
  AutoSampler(Algebra a, std::uint64_t seed, int bound = 10);
  Algebra algebra() const { return algebra_; }
  std::uint64_t seed() const { return seed_; }
  int bound() const { return bound_; }
  Rng& rng() { return rng_; }
  LinearMap next();

 private:
  Quaternion nonzero_quaternion();
  Algebra algebra_;
  std::uint64_t seed_;
  int bound_;
  Rng rng_;
};

inline LinearMap sample_automorphism(AutoSampler& s) { return s.next(); }

std::string automorphism_family(Algebra a);

class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int bound = 10;
  std::size_t witness_bound = 256;
};

// Assignment printed as variable -> element text.
using PrintedAssignment = std::map<std::string, std::string>;

struct Counterexample {
  PrintedAssignment assignment;
  bool original = false;
  bool eliminated = false;
};

struct EquivalenceReport {
  Algebra algebra = Algebra::Quaternion;
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::size_t disagreement_count = 0;
  std::vector<Counterexample> disagreements;  // the first kKeptCounterexamples
  std::size_t inconclusive = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  std::size_t witness_bound = 0;

  static constexpr std::size_t kKeptCounterexamples = 32;
  bool ok() const { return disagreement_count == 0; }
  nlohmann::json to_json() const;
};

// `original` is quantifier free or one block of like quantifiers over a
// quantifier-free matrix; `eliminated` is quantifier free. An existential
// original counts as true once a witness is found among the structured and
// random candidates; with no witness, an eliminated `false` agrees and an
// eliminated `true` is inconclusive. Universal blocks are dual.
EquivalenceReport check_equivalence(Algebra a, const AlgFormula& original, const AlgFormula& eliminated,
                                    const CheckOptions& opts = {});

struct OrbitViolation {
  PrintedAssignment assignment;
  nlohmann::json map;
  bool before = false;
  bool after = false;
};

struct OrbitReport {
  Algebra algebra = Algebra::Quaternion;
  std::size_t samples = 0;
  std::vector<OrbitViolation> violations;
  std::uint64_t seed = 0;
  int bound = 0;

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// eval(phi, t) = eval(phi, g t) for n (assignment, automorphism) pairs; the
// first assignments are the structured ones (0, 1, basis units).
OrbitReport check_orbit_invariance(Algebra a, const AlgFormula& phi, std::size_t n, std::uint64_t seed,
                                   int bound = 10);

// Random syntax for property tests.
struct GenOptions {
  int max_depth = 3;
  int literal_bound = 3;
  bool use_le = true;
};
AlgTerm random_term(Rng& rng, const std::vector<std::string>& vars, int depth, const GenOptions& g = {});
AlgFormula random_qf_formula(Rng& rng, const std::vector<std::string>& vars, int depth, const GenOptions& g = {});

// Structured values first (0, 1, -1, the basis units), then random ones.
template <class E>
std::vector<E> structured_elements() {
  std::vector<E> out{E{}, E::one(), -E::one()};
  for (int i = 1; i < E::kDim; ++i) {
    out.push_back(E::basis(i));
    out.push_back(-E::basis(i));
  }
  return out;
}

}  // namespace algqe
