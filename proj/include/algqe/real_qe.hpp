#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algqe/formula.hpp"
#include "algqe/poly.hpp"

namespace algqe {

// Conjunction of atoms p rel 0. After normalize_clause: atoms are sorted,
// unique, have coprime integer coefficients, and each polynomial appears
// once up to sign (= and != atoms with positive leading coefficient).
using QfClause = std::vector<RealAtom>;
// Disjunction of clauses. The empty set is false; a set holding an empty
// clause is true.
using ClauseSet = std::vector<QfClause>;

ClauseSet to_clauses(const RealFormula& quantifier_free, std::size_t max_clauses = 100000);
RealFormula from_clauses(const ClauseSet& s);

// nullopt when the clause is unsatisfiable for syntactic reasons (constant
// atoms, contradictory sign conditions on one polynomial, a positive
// definite sum of squares required to vanish, ...).
std::optional<QfClause> normalize_clause(QfClause c);
// Normalizes every clause, drops false ones and subsumed ones.
ClauseSet simplify_clauses(ClauseSet s);
ClauseSet conj(const ClauseSet& a, const ClauseSet& b);
// Case split on the first = or <= atom whose polynomial has a monomial
// factor m (with even exponents for <=): one branch per variable of m
// vanishing, one for the cofactor. nullopt when no atom qualifies.
std::optional<ClauseSet> split_products(const QfClause& c);

// Evaluation-preserving cleanup of any formula; quantifiers are kept.
RealFormula simplify(const RealFormula& f);

class DegreeTooHigh : public std::runtime_error {
 public:
  DegreeTooHigh(std::string var, RealAtom atom, unsigned degree, RealFormula partial = RealFormula::truth());
  const std::string& var() const { return var_; }
  const RealAtom& atom() const { return atom_; }
  unsigned degree() const { return degree_; }
  // Equivalent to the input with the remaining quantifiers still in place.
  const RealFormula& partial() const { return partial_; }
  void set_partial(RealFormula f) { partial_ = std::move(f); }

 private:
  std::string var_;
  RealAtom atom_;
  unsigned degree_;
  RealFormula partial_;
};

struct QeStats {
  std::size_t eq_subst = 0;
  std::size_t linear_vs = 0;
  std::size_t quadratic_vs = 0;
};

enum class VarOrder { Auto, Given };

struct QeOptions {
  VarOrder order = VarOrder::Auto;
  std::size_t max_clauses = 100000;
  std::size_t max_monomials = 1000000;  // per step result
  // Alternative steps tried after a branch ran into DegreeTooHigh.
  std::size_t max_backtracks = 256;
  // A step producing an atom of higher degree in a block variable fails.
  unsigned max_degree = 12;
  bool simplify = true;
};

// Gauss step on a linear equation c*x + r = 0 of the clause. `clause` is the
// rest of the clause with x := -r/c (denominators cleared, sign-split into a
// disjunction where the parity of the cleared power needs it); `guard` is
// c != 0; `degenerate` is the c = 0 branch (rest plus c = 0, r = 0), absent
// when c is a nonzero constant.
struct EqSubstitution {
  ClauseSet clause;
  QfClause guard;
  std::optional<QfClause> degenerate;
};

// Throws NotApplicable when no equation of the clause is linear in x.
EqSubstitution eq_substitute(const QfClause& clause, Var x);

// Exists x over each clause by virtual substitution. Throws DegreeTooHigh
// if some atom has degree in x above 1 (resp. 2); != atoms of any degree
// are accepted by quadratic_vs.
ClauseSet linear_vs(const ClauseSet& s, Var x, QeStats* stats = nullptr);
ClauseSet quadratic_vs(const ClauseSet& s, Var x, QeStats* stats = nullptr);

// Exists block. matrix. The result mentions no variable of the block.
RealFormula eliminate_block(const std::vector<Var>& block, const RealFormula& matrix,
                            const QeOptions& opts = {}, QeStats* stats = nullptr);

// Full elimination of a formula with arbitrary quantifiers; blocks are
// processed innermost first, forall as not-exists-not.
RealFormula eliminate_quantifiers(const RealFormula& f, const QeOptions& opts = {}, QeStats* stats = nullptr);

}  // namespace algqe
