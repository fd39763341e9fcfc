#pragma once

#include <cassert>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algqe/poly.hpp"
#include "algqe/term.hpp"

namespace algqe {

// First-order formula over an atom type. Immutable with shared subtrees;
// And/Or/Implies are binary as in the surface grammar.
template <class AtomT>
class Formula {
 public:
  using atom_type = AtomT;
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Exists, Forall };

  Formula() : Formula(truth()) {}

  static Formula truth() { return make(Kind::True); }
  static Formula falsity() { return make(Kind::False); }
  static Formula atom(AtomT a) {
    Node n{Kind::Atom};
    n.atom = std::move(a);
    return Formula(std::make_shared<const Node>(std::move(n)));
  }
  static Formula negation(Formula f) { return make(Kind::Not, std::move(f)); }
  static Formula conj(Formula a, Formula b) { return make(Kind::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return make(Kind::Or, std::move(a), std::move(b)); }
  static Formula implies(Formula a, Formula b) { return make(Kind::Implies, std::move(a), std::move(b)); }
  static Formula exists(std::string var, Formula body) { return binder(Kind::Exists, std::move(var), std::move(body)); }
  static Formula forall(std::string var, Formula body) { return binder(Kind::Forall, std::move(var), std::move(body)); }

  // Left-nested conjunction/disjunction; empty lists give true/false.
  static Formula conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return truth();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
    return out;
  }
  static Formula disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return falsity();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
    return out;
  }

  Kind kind() const { return node_->kind; }
  bool is_quantifier() const { return kind() == Kind::Exists || kind() == Kind::Forall; }
  const AtomT& atom() const { return node_->atom; }
  const Formula& lhs() const { return node_->kids[0]; }  // also the body of Not and binders
  const Formula& rhs() const { return node_->kids[1]; }
  const Formula& body() const { return node_->kids[0]; }
  const std::string& var() const { return node_->var; }

  bool quantifier_free() const {
    switch (kind()) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom: return true;
      case Kind::Exists:
      case Kind::Forall: return false;
      default:
        for (const auto& k : node_->kids)
          if (!k.quantifier_free()) return false;
        return true;
    }
  }

  std::size_t atom_count() const {
    switch (kind()) {
      case Kind::Atom: return 1;
      case Kind::True:
      case Kind::False: return 0;
      default: {
        std::size_t n = 0;
        for (const auto& k : node_->kids) n += k.atom_count();
        return n;
      }
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::True:
      case Kind::False: return true;
      case Kind::Atom: return a.atom() == b.atom();
      case Kind::Exists:
      case Kind::Forall: return a.var() == b.var() && a.body() == b.body();
      default: return a.node_->kids == b.node_->kids;
    }
  }

 private:
  struct Node {
    Kind kind;
    AtomT atom{};
    std::string var{};
    std::vector<Formula> kids{};
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula make(Kind k) { return Formula(std::make_shared<const Node>(Node{k})); }
  static Formula make(Kind k, Formula a) {
    Node n{k};
    n.kids.push_back(std::move(a));
    return Formula(std::make_shared<const Node>(std::move(n)));
  }
  static Formula make(Kind k, Formula a, Formula b) {
    Node n{k};
    n.kids.push_back(std::move(a));
    n.kids.push_back(std::move(b));
    return Formula(std::make_shared<const Node>(std::move(n)));
  }
  static Formula binder(Kind k, std::string var, Formula body) {
    Node n{k};
    n.var = std::move(var);
    n.kids.push_back(std::move(body));
    return Formula(std::make_shared<const Node>(std::move(n)));
  }

  std::shared_ptr<const Node> node_;
};

// --- algebra-language atoms ---

struct AlgAtom {
  enum class Rel { Eq, Le };
  Rel rel = Rel::Eq;
  AlgTerm lhs;
  AlgTerm rhs;

  friend bool operator==(const AlgAtom&, const AlgAtom&) = default;
};

using AlgFormula = Formula<AlgAtom>;

inline AlgFormula eq(AlgTerm a, AlgTerm b) { return AlgFormula::atom({AlgAtom::Rel::Eq, std::move(a), std::move(b)}); }
inline AlgFormula le(AlgTerm a, AlgTerm b) { return AlgFormula::atom({AlgAtom::Rel::Le, std::move(a), std::move(b)}); }

// --- base-field atoms: poly rel 0 ---

enum class Rel { Eq, Le, Lt, Ne };

std::string_view rel_symbol(Rel r);
// Relation satisfied exactly when the given one fails (negating the poly
// for the order relations is left to the caller).
Rel negate_rel(Rel r);
bool holds(Rel r, int sign);

struct RealAtom {
  Poly poly;
  Rel rel = Rel::Eq;

  friend bool operator==(const RealAtom&, const RealAtom&) = default;
  friend bool operator<(const RealAtom& a, const RealAtom& b) {
    if (a.rel != b.rel) return a.rel < b.rel;
    return a.poly < b.poly;
  }
};

using RealFormula = Formula<RealAtom>;

inline RealFormula real_atom(Poly p, Rel r) { return RealFormula::atom({std::move(p), r}); }

// Printing, free variables and substitution per atom type.
std::string atom_str(const AlgAtom& a);
std::string atom_str(const RealAtom& a);
void atom_vars(const AlgAtom& a, std::set<std::string>& out);
void atom_vars(const RealAtom& a, std::set<std::string>& out);
AlgAtom atom_substitute(const AlgAtom& a, const std::string& var, const AlgTerm& value);
RealAtom atom_substitute(const RealAtom& a, const std::string& var, const Poly& value);
void term_vars(const AlgTerm& t, std::set<std::string>& out);
void term_vars(const Poly& p, std::set<std::string>& out);
AlgTerm var_term(const AlgAtom*, const std::string& name);
Poly var_term(const RealAtom*, const std::string& name);

std::string to_string(const AlgFormula& f);
std::string to_string(const RealFormula& f);
inline std::ostream& operator<<(std::ostream& os, const AlgFormula& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const RealFormula& f) { return os << to_string(f); }

}  // namespace algqe
