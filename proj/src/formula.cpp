#include "algqe/formula.hpp"

#include <stdexcept>

namespace algqe {

std::string_view rel_symbol(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ne: return "!=";
  }
  return "?";
}

Rel negate_rel(Rel r) {
  switch (r) {
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Le: return Rel::Lt;
    case Rel::Lt: return Rel::Le;
  }
  return r;
}

bool holds(Rel r, int sign) {
  switch (r) {
    case Rel::Eq: return sign == 0;
    case Rel::Ne: return sign != 0;
    case Rel::Le: return sign <= 0;
    case Rel::Lt: return sign < 0;
  }
  return false;
}

std::string atom_str(const AlgAtom& a) {
  return a.lhs.str() + (a.rel == AlgAtom::Rel::Eq ? " = " : " <= ") + a.rhs.str();
}

std::string atom_str(const RealAtom& a) {
  return a.poly.str() + " " + std::string(rel_symbol(a.rel)) + " 0";
}

void term_vars(const AlgTerm& t, std::set<std::string>& out) { t.collect_vars(out); }

void term_vars(const Poly& p, std::set<std::string>& out) {
  for (Var v : p.vars()) out.insert(v.name());
}

void atom_vars(const AlgAtom& a, std::set<std::string>& out) {
  a.lhs.collect_vars(out);
  a.rhs.collect_vars(out);
}

void atom_vars(const RealAtom& a, std::set<std::string>& out) { term_vars(a.poly, out); }

AlgAtom atom_substitute(const AlgAtom& a, const std::string& var, const AlgTerm& value) {
  return {a.rel, a.lhs.substitute(var, value), a.rhs.substitute(var, value)};
}

RealAtom atom_substitute(const RealAtom& a, const std::string& var, const Poly& value) {
  return {a.poly.substitute(Var(var), value), a.rel};
}

AlgTerm var_term(const AlgAtom*, const std::string& name) { return AlgTerm::var(name); }
Poly var_term(const RealAtom*, const std::string& name) { return Poly(Var(name)); }

namespace {

// Contexts: 1 implication, 2 disjunction, 3 conjunction, 4 negation operand.
template <class Atom>
void print(const Formula<Atom>& f, std::string& out, int context) {
  using K = typename Formula<Atom>::Kind;
  switch (f.kind()) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Atom: out += atom_str(f.atom()); return;
    case K::Exists:
    case K::Forall: {
      const bool parens = context > 0;
      if (parens) out += "(";
      out += f.kind() == K::Exists ? "exists " : "forall ";
      out += f.var();
      out += ". ";
      print(f.body(), out, 0);
      if (parens) out += ")";
      return;
    }
    case K::Not: {
      const auto& inner = f.lhs();
      if constexpr (std::is_same_v<Atom, AlgAtom>) {
        if (inner.kind() == K::Atom && inner.atom().rel == AlgAtom::Rel::Eq) {
          out += inner.atom().lhs.str() + " != " + inner.atom().rhs.str();
          return;
        }
      }
      out += "!";
      if (inner.kind() == K::Atom) {
        out += "(";
        print(inner, out, 0);
        out += ")";
      } else {
        print(inner, out, 4);
      }
      return;
    }
    default: break;
  }
  const int own = f.kind() == K::Implies ? 1 : (f.kind() == K::Or ? 2 : 3);
  const bool parens = own < context;
  if (parens) out += "(";
  switch (f.kind()) {
    case K::And:
      print(f.lhs(), out, 3);
      out += " && ";
      print(f.rhs(), out, 4);
      break;
    case K::Or:
      print(f.lhs(), out, 2);
      out += " || ";
      print(f.rhs(), out, 3);
      break;
    default:
      print(f.lhs(), out, 2);
      out += " -> ";
      print(f.rhs(), out, 1);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const AlgFormula& f) {
  std::string out;
  print(f, out, 0);
  return out;
}

std::string to_string(const RealFormula& f) {
  std::string out;
  print(f, out, 0);
  return out;
}

}  // namespace algqe
