#include "algqe/realify.hpp"

#include <unordered_map>

namespace algqe {

std::string coordinate_name(const std::string& var, int index) {
  return var + "_" + std::to_string(index);
}

std::vector<Var> Realification::coords(const std::string& var) const {
  std::vector<Var> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.emplace_back(coordinate_name(var, i));
  return out;
}

std::vector<Poly> multiply(Algebra a, std::span<const Poly> x, std::span<const Poly> y) {
  const StructureTable& table = structure_table(a);
  const int n = table.dim();
  std::vector<Poly> out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const BasisProduct& p = table(i, j);
      Poly prod = x[i] * y[j];
      if (p.sign > 0) out[p.index] += prod;
      else out[p.index] -= prod;
    }
  }
  return out;
}

std::vector<Poly> conjugate(std::span<const Poly> x) {
  std::vector<Poly> out(x.begin(), x.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

namespace {

using Coords = std::vector<Poly>;

class TermRealifier {
 public:
  explicit TermRealifier(const Realification& ctx) : ctx_(ctx) {}

  Coords run(const AlgTerm& t) {
    using K = AlgTerm::Kind;
    const int n = ctx_.dim();
    switch (t.kind()) {
      case K::Var: {
        Coords out;
        for (Var v : ctx_.coords(t.name())) out.emplace_back(v);
        return out;
      }
      case K::Zero: return Coords(n);
      case K::One: {
        Coords out(n);
        out[0] = Poly(1);
        return out;
      }
      case K::Neg: {
        Coords out = run(t.lhs());
        for (auto& p : out) p = -p;
        return out;
      }
      case K::Conj: return conjugate(run(t.lhs()));
      case K::Add:
      case K::Sub: {
        Coords a = run(t.lhs());
        const Coords b = run(t.rhs());
        for (int i = 0; i < n; ++i) {
          if (t.kind() == K::Add) a[i] += b[i];
          else a[i] -= b[i];
        }
        return a;
      }
      case K::Mul: {
        const void* key = t.identity();
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Coords out = multiply(ctx_.algebra, run(t.lhs()), run(t.rhs()));
        cache_.emplace(key, out);
        return out;
      }
    }
    return Coords(n);
  }

 private:
  const Realification& ctx_;
  std::unordered_map<const void*, Coords> cache_;
};

RealFormula equation(const Poly& p, bool simplify) {
  if (!simplify) return real_atom(p, Rel::Eq);
  Poly q = p.primitive();
  if (const auto* lt = q.leading_term(); lt != nullptr && lt->second.sign() < 0) q = -q;
  return real_atom(q, Rel::Eq);
}

RealFormula inequality(const Poly& p, bool simplify) {
  return real_atom(simplify ? p.primitive() : p, Rel::Le);
}

}  // namespace

std::vector<Poly> realify_term(const AlgTerm& t, const Realification& ctx) {
  return TermRealifier(ctx).run(t);
}

std::vector<std::vector<Poly>> realify_terms(std::span<const AlgTerm> ts, const Realification& ctx) {
  TermRealifier r(ctx);
  std::vector<std::vector<Poly>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(r.run(t));
  return out;
}

RealFormula realify_le(std::span<const Poly> t, std::span<const Poly> u, bool simplify) {
  std::vector<RealFormula> parts;
  for (auto side : {t, u}) {
    for (std::size_t i = 1; i < side.size(); ++i) {
      if (simplify && side[i].is_zero()) continue;
      parts.push_back(equation(side[i], simplify));
    }
  }
  parts.push_back(inequality(t[0] - u[0], simplify));
  return RealFormula::conj_all(parts);
}

RealFormula realify_atom(const AlgAtom& a, const Realification& ctx) {
  TermRealifier r(ctx);
  const Coords lhs = r.run(a.lhs);
  const Coords rhs = r.run(a.rhs);
  if (a.rel == AlgAtom::Rel::Le) return realify_le(lhs, rhs, ctx.simplify);
  std::vector<RealFormula> parts;
  for (int i = 0; i < ctx.dim(); ++i) {
    Poly d = lhs[i] - rhs[i];
    if (ctx.simplify && d.is_zero()) continue;
    parts.push_back(equation(d, ctx.simplify));
  }
  return RealFormula::conj_all(parts);
}

RealFormula realify_formula(const AlgFormula& f, const Realification& ctx) {
  using K = AlgFormula::Kind;
  switch (f.kind()) {
    case K::True: return RealFormula::truth();
    case K::False: return RealFormula::falsity();
    case K::Atom: return realify_atom(f.atom(), ctx);
    case K::Not: return RealFormula::negation(realify_formula(f.lhs(), ctx));
    case K::And: return RealFormula::conj(realify_formula(f.lhs(), ctx), realify_formula(f.rhs(), ctx));
    case K::Or: return RealFormula::disj(realify_formula(f.lhs(), ctx), realify_formula(f.rhs(), ctx));
    case K::Implies:
      return RealFormula::implies(realify_formula(f.lhs(), ctx), realify_formula(f.rhs(), ctx));
    case K::Exists:
    case K::Forall: {
      RealFormula body = realify_formula(f.body(), ctx);
      const auto cs = ctx.coords(f.var());
      for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        body = f.kind() == K::Exists ? RealFormula::exists(it->name(), body)
                                     : RealFormula::forall(it->name(), body);
      return body;
    }
  }
  return RealFormula::truth();
}

}  // namespace algqe
