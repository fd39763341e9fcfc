#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "algqe/algebra.hpp"
#include "algqe/formula.hpp"

namespace algqe {

template <class E>
using Assignment = std::map<std::string, E>;

class UnassignedVariable : public std::out_of_range {
 public:
  explicit UnassignedVariable(const std::string& name)
      : std::out_of_range("unassigned variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

template <class E>
E eval_term(const AlgTerm& t, const Assignment<E>& env) {
  using K = AlgTerm::Kind;
  switch (t.kind()) {
    case K::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnassignedVariable(t.name());
      return it->second;
    }
    case K::Zero: return E{};
    case K::One: return E::one();
    case K::Neg: return -eval_term(t.lhs(), env);
    case K::Conj: return eval_term(t.lhs(), env).conj();
    case K::Add: return eval_term(t.lhs(), env) + eval_term(t.rhs(), env);
    case K::Sub: return eval_term(t.lhs(), env) - eval_term(t.rhs(), env);
    case K::Mul: return eval_term(t.lhs(), env) * eval_term(t.rhs(), env);
  }
  return E{};
}

// The order symbol lives on the centre k*1 only: a <= b holds iff both
// values are central and Re(a) <= Re(b). Pairs with a non-central member are
// incomparable and the atom is false. realify_le encodes the same rule.
template <class E>
bool central_le(const E& a, const E& b) {
  return a.is_central() && b.is_central() && a.re() <= b.re();
}

template <class E>
bool eval_atom(const AlgAtom& a, const Assignment<E>& env) {
  const E l = eval_term(a.lhs, env);
  const E r = eval_term(a.rhs, env);
  return a.rel == AlgAtom::Rel::Eq ? l == r : central_le(l, r);
}

// Tarskian evaluation of a quantifier-free formula.
template <class E>
bool eval_formula(const AlgFormula& f, const Assignment<E>& env) {
  using K = AlgFormula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return eval_atom(f.atom(), env);
    case K::Not: return !eval_formula(f.lhs(), env);
    case K::And: return eval_formula(f.lhs(), env) && eval_formula(f.rhs(), env);
    case K::Or: return eval_formula(f.lhs(), env) || eval_formula(f.rhs(), env);
    case K::Implies: return !eval_formula(f.lhs(), env) || eval_formula(f.rhs(), env);
    default: throw std::invalid_argument("eval_formula: formula has quantifiers");
  }
}

bool eval_real_atom(const RealAtom& a, const Point& point);
bool eval_real_formula(const RealFormula& f, const Point& point);
// Names resolved through the variable interner.
Point make_point(const std::map<std::string, Rational>& values);

}  // namespace algqe
