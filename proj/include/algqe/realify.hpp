#pragma once

#include <span>
#include <string>
#include <vector>

#include "algqe/algebra.hpp"
#include "algqe/formula.hpp"

namespace algqe {

// Coordinate expansion of algebra formulas: each algebra variable x becomes
// the real variables x_0 ... x_{dim-1} in canonical basis order.
struct Realification {
  Algebra algebra = Algebra::Quaternion;
  // Drop coordinate equations that are trivially true and divide integer
  // content out of the rest. Off reproduces the raw atom counts.
  bool simplify = true;

  int dim() const { return dimension(algebra); }
  std::vector<Var> coords(const std::string& var) const;
};

std::string coordinate_name(const std::string& var, int index);

// Product of two coordinate vectors through the algebra's structure table.
std::vector<Poly> multiply(Algebra a, std::span<const Poly> x, std::span<const Poly> y);
std::vector<Poly> conjugate(std::span<const Poly> x);

std::vector<Poly> realify_term(const AlgTerm& t, const Realification& ctx);
// Batch form; products shared between the terms are expanded once.
std::vector<std::vector<Poly>> realify_terms(std::span<const AlgTerm> ts, const Realification& ctx);
RealFormula realify_atom(const AlgAtom& a, const Realification& ctx);
RealFormula realify_formula(const AlgFormula& f, const Realification& ctx);

// t <= u over coordinates: Im(t) = 0, Im(u) = 0 and Re(t) <= Re(u).
RealFormula realify_le(std::span<const Poly> t, std::span<const Poly> u, bool simplify);

}  // namespace algqe
