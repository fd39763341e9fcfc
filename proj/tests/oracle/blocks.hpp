#pragma once

// Random existential blocks that the quadratic backend must handle, and an
// exact decision procedure for them at rational parameter values.
//
// Shape: exists x1..xk. (x2 = L2) && ... && (xk = Lk) && body, where each Lj
// is linear in x1..x(j-1) with integer coefficients plus a linear form in the
// parameters, and every body atom has total degree <= 2 in the x's. Back-
// substituting the definitions leaves a univariate problem in x1 of degree
// <= 2, which the oracle decides by root isolation.

#include <functional>
#include <string>
#include <vector>

#include "algqe/formula.hpp"
#include "algqe/poly.hpp"
#include "algqe/verify.hpp"
#include "univariate.hpp"

namespace oracle {

using algqe::Poly;
using algqe::Rel;
using algqe::RealFormula;
using algqe::Rng;
using algqe::Var;

struct Block {
  std::vector<Var> params;
  std::vector<Var> bound;
  std::vector<Poly> defs;  // defs[j-1] = L_{j+1}, bound[j] = defs[j-1]
  RealFormula body;

  RealFormula matrix() const {
    std::vector<RealFormula> parts;
    for (std::size_t j = 1; j < bound.size(); ++j) parts.push_back(algqe::real_atom(Poly(bound[j]) - defs[j - 1], Rel::Eq));
    parts.push_back(body);
    return RealFormula::conj_all(parts);
  }

  RealFormula formula() const {
    RealFormula f = matrix();
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) f = RealFormula::exists(it->name(), f);
    return f;
  }
};

inline long small_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(algqe::random_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Constant, a parameter, or a parameter plus a constant.
inline Poly coefficient(Rng& rng, const std::vector<Var>& params) {
  switch (algqe::random_below(rng, 4)) {
    case 0: return Poly(algqe::Rational(small_int(rng, -3, 3)));
    case 1: return Poly(params[algqe::random_below(rng, params.size())]);
    case 2: return Poly(params[algqe::random_below(rng, params.size())]) * algqe::Rational(small_int(rng, -2, 2)) +
                   Poly(algqe::Rational(small_int(rng, -2, 2)));
    default: return Poly(algqe::Rational(small_int(rng, 1, 2)));
  }
}

inline Poly body_poly(Rng& rng, const std::vector<Var>& params, const std::vector<Var>& bound) {
  // Monomials of total degree <= 2 in the bound variables.
  std::vector<Poly> monos{Poly(1)};
  for (std::size_t i = 0; i < bound.size(); ++i) {
    monos.push_back(Poly(bound[i]));
    for (std::size_t j = i; j < bound.size(); ++j) monos.push_back(Poly(bound[i]) * Poly(bound[j]));
  }
  Poly p;
  const int terms = static_cast<int>(small_int(rng, 1, 3));
  for (int t = 0; t < terms; ++t) p += coefficient(rng, params) * monos[algqe::random_below(rng, monos.size())];
  // Keep at least one bound variable in play.
  p += Poly(algqe::Rational(small_int(rng, 1, 2))) * monos[1 + algqe::random_below(rng, monos.size() - 1)];
  return p;
}

inline RealFormula body_formula(Rng& rng, const std::vector<Var>& params, const std::vector<Var>& bound, int atoms) {
  if (atoms <= 1) {
    static const Rel rels[] = {Rel::Eq, Rel::Le, Rel::Lt, Rel::Ne};
    return algqe::real_atom(body_poly(rng, params, bound), rels[algqe::random_below(rng, 4)]);
  }
  const int left = static_cast<int>(small_int(rng, 1, atoms - 1));
  RealFormula a = body_formula(rng, params, bound, left);
  RealFormula b = body_formula(rng, params, bound, atoms - left);
  switch (algqe::random_below(rng, 5)) {
    case 0: return RealFormula::disj(a, b);
    case 1: return RealFormula::conj(RealFormula::negation(a), b);
    default: return RealFormula::conj(a, b);
  }
}

// At most 3 bound variables, 4 parameters and 6 atoms in total.
inline Block random_block(Rng& rng) {
  Block b;
  const int np = static_cast<int>(small_int(rng, 1, 4));
  const int nb = static_cast<int>(small_int(rng, 1, 3));
  for (int i = 1; i <= np; ++i) b.params.emplace_back("a" + std::to_string(i));
  for (int i = 1; i <= nb; ++i) b.bound.emplace_back("x" + std::to_string(i));
  for (int j = 1; j < nb; ++j) {
    Poly l = coefficient(rng, b.params);
    for (int i = 0; i < j; ++i) l += Poly(b.bound[static_cast<std::size_t>(i)]) * algqe::Rational(small_int(rng, -2, 2));
    b.defs.push_back(l);
  }
  const int body_atoms = static_cast<int>(small_int(rng, 1, 6 - (nb - 1)));
  b.body = body_formula(rng, b.params, b.bound, body_atoms);
  return b;
}

// Evaluates a quantifier-free formula given the sign of each atom.
inline bool eval_signs(const RealFormula& f, const std::function<int(const Poly&)>& sign) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: {
      const int s = sign(f.atom().poly);
      switch (f.atom().rel) {
        case Rel::Eq: return s == 0;
        case Rel::Le: return s <= 0;
        case Rel::Lt: return s < 0;
        case Rel::Ne: return s != 0;
      }
      return false;
    }
    case K::Not: return !eval_signs(f.lhs(), sign);
    case K::And: return eval_signs(f.lhs(), sign) && eval_signs(f.rhs(), sign);
    case K::Or: return eval_signs(f.lhs(), sign) || eval_signs(f.rhs(), sign);
    case K::Implies: return !eval_signs(f.lhs(), sign) || eval_signs(f.rhs(), sign);
    default: throw std::invalid_argument("eval_signs: quantifier");
  }
}

inline RealFormula map_atoms(const RealFormula& f, const std::function<Poly(const Poly&)>& g) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return algqe::real_atom(g(f.atom().poly), f.atom().rel);
    case K::Not: return RealFormula::negation(map_atoms(f.lhs(), g));
    case K::And: return RealFormula::conj(map_atoms(f.lhs(), g), map_atoms(f.rhs(), g));
    case K::Or: return RealFormula::disj(map_atoms(f.lhs(), g), map_atoms(f.rhs(), g));
    case K::Implies: return RealFormula::implies(map_atoms(f.lhs(), g), map_atoms(f.rhs(), g));
    default: return f;
  }
}

inline void collect_polys(const RealFormula& f, std::vector<Poly>& out) {
  using K = RealFormula::Kind;
  if (f.kind() == K::Atom) out.push_back(f.atom().poly);
  else if (f.kind() == K::Not || f.kind() == K::And || f.kind() == K::Or || f.kind() == K::Implies) {
    collect_polys(f.lhs(), out);
    if (f.kind() != K::Not) collect_polys(f.rhs(), out);
  }
}

inline UPoly to_upoly(const Poly& p, Var x) {
  std::vector<Rational> c;
  for (const auto& k : p.coeffs_in(x)) {
    const auto v = k.constant_value();
    if (!v) throw std::logic_error("to_upoly: polynomial has other variables");
    c.push_back(*v);
  }
  return UPoly(std::move(c));
}

// Exact truth of exists x. f(x) for f quantifier free in the single
// variable x (other variables already evaluated).
inline bool exists_univariate(const RealFormula& f, Var x) {
  std::vector<Poly> polys;
  collect_polys(f, polys);
  std::vector<UPoly> ups;
  UPoly product(std::vector<Rational>{Rational(1)});
  for (const auto& p : polys) {
    ups.push_back(to_upoly(p, x));
    if (ups.back().degree() >= 1) product = product * ups.back().squarefree();
  }
  auto at_rational = [&](const Rational& v) {
    return eval_signs(f, [&](const Poly& p) { return to_upoly(p, x).sign_at(v); });
  };
  const std::vector<Root> roots = isolate(product);
  if (roots.empty()) return at_rational(Rational(0));
  if (at_rational(roots.front().left() - Rational(1)) || at_rational(roots.back().right() + Rational(1))) return true;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (at_rational((roots[i].right() + roots[i + 1].left()) / Rational(2))) return true;
  for (const Root& r : roots) {
    if (r.exact) {
      if (at_rational(*r.exact)) return true;
      continue;
    }
    // Every root of an atom polynomial is a root of the product, so an atom
    // vanishes at the isolated root iff it has a root in (lo, hi).
    const bool holds = eval_signs(f, [&](const Poly& p) {
      const UPoly u = to_upoly(p, x);
      if (u.degree() < 1) return u.is_zero() ? 0 : u.lead().sign();
      if (Sturm(u.squarefree()).roots_in(r.lo, r.hi) == 1) return 0;
      return u.sign_at(r.lo);
    });
    if (holds) return true;
  }
  return false;
}

// Truth of the block at the given parameter values.
inline bool decide(const Block& b, const algqe::Point& params) {
  RealFormula f = b.body;
  for (std::size_t j = b.bound.size(); j-- > 1;) {
    const Var xj = b.bound[j];
    const Poly lj = b.defs[j - 1];
    f = map_atoms(f, [&](const Poly& p) { return p.substitute(xj, lj); });
  }
  f = map_atoms(f, [&](const Poly& p) { return p.partial_eval(params); });
  return exists_univariate(f, b.bound.front());
}

inline algqe::Point random_params(Rng& rng, const std::vector<Var>& params) {
  algqe::Point pt;
  for (Var v : params)
    pt[v.id()] = algqe::random_below(rng, 2) == 0 ? Rational(small_int(rng, -3, 3)) : algqe::random_rational(rng, 5);
  return pt;
}

}  // namespace oracle
