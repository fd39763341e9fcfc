#include "algqe/semantics.hpp"

namespace algqe {

bool eval_real_atom(const RealAtom& a, const Point& point) {
  return holds(a.rel, a.poly.eval(point).sign());
}

bool eval_real_formula(const RealFormula& f, const Point& point) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return eval_real_atom(f.atom(), point);
    case K::Not: return !eval_real_formula(f.lhs(), point);
    case K::And: return eval_real_formula(f.lhs(), point) && eval_real_formula(f.rhs(), point);
    case K::Or: return eval_real_formula(f.lhs(), point) || eval_real_formula(f.rhs(), point);
    case K::Implies: return !eval_real_formula(f.lhs(), point) || eval_real_formula(f.rhs(), point);
    default: throw std::invalid_argument("eval_real_formula: formula has quantifiers");
  }
}

Point make_point(const std::map<std::string, Rational>& values) {
  Point p;
  for (const auto& [name, v] : values) p[Var(name).id()] = v;
  return p;
}

}  // namespace algqe
