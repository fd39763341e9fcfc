#include "algqe/real_qe.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "algqe/errors.hpp"
#include "algqe/normal_forms.hpp"

namespace algqe {

DegreeTooHigh::DegreeTooHigh(std::string var, RealAtom atom, unsigned degree, RealFormula partial)
    : std::runtime_error("degree " + std::to_string(degree) + " in " + var + " of atom " + atom_str(atom) +
                         " exceeds the quadratic backend"),
      var_(std::move(var)),
      atom_(std::move(atom)),
      degree_(degree),
      partial_(std::move(partial)) {}

namespace {

// p + q sqrt(D)
struct SqrtVal {
  Poly p, q;
};

// x = (alpha + beta sqrt(disc)) / gamma, meaningful under the guard, which
// includes gamma != 0 and disc >= 0.
struct TestPoint {
  enum class Kind { MinusInf, Point, PointEps };
  Kind kind = Kind::MinusInf;
  Poly alpha, beta, gamma{1}, disc;
  QfClause guard;

  auto key() const { return std::tie(kind, alpha, beta, gamma, disc, guard); }
  friend bool operator<(const TestPoint& a, const TestPoint& b) { return a.key() < b.key(); }
};

const ClauseSet kTrue{QfClause{}};

ClauseSet single(RealAtom a) { return {QfClause{std::move(a)}}; }

ClauseSet disj(ClauseSet a, const ClauseSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ClauseSet all_zero(const std::vector<Poly>& coeffs) {
  QfClause c;
  for (const auto& k : coeffs) c.push_back({k, Rel::Eq});
  return {c};
}

ClauseSet some_nonzero(const std::vector<Poly>& coeffs) {
  ClauseSet out;
  for (const auto& k : coeffs) out.push_back({{k, Rel::Ne}});
  return out;
}

// Sign condition on p + q sqrt(D), D >= 0 assumed.
ClauseSet sqrt_sign(const SqrtVal& v, const Poly& d, Rel rel) {
  if (v.q.is_zero() || d.is_zero()) return single({v.p, rel});
  if (v.p.is_zero()) {
    switch (rel) {
      case Rel::Eq: return {{{v.q, Rel::Eq}}, {{d, Rel::Eq}}};
      case Rel::Ne: return {{{v.q, Rel::Ne}, {d, Rel::Ne}}};
      case Rel::Le: return {{{v.q, Rel::Le}}, {{d, Rel::Eq}}};
      case Rel::Lt: return {{{v.q, Rel::Lt}, {d, Rel::Ne}}};
    }
  }
  const Poly r = v.p * v.p - v.q * v.q * d;
  switch (rel) {
    case Rel::Eq: return {{{v.p * v.q, Rel::Le}, {r, Rel::Eq}}};
    case Rel::Ne: return {{{-(v.p * v.q), Rel::Lt}}, {{r, Rel::Ne}}};
    case Rel::Le: return {{{v.p, Rel::Le}, {-r, Rel::Le}}, {{v.q, Rel::Le}, {r, Rel::Le}}};
    case Rel::Lt:
      return {{{v.p, Rel::Lt}, {-r, Rel::Lt}}, {{v.q, Rel::Le}, {v.p, Rel::Lt}}, {{v.q, Rel::Le}, {r, Rel::Lt}}};
  }
  return {};
}

// gamma^d * p(t) for p = sum coeffs[i] x^i of degree d.
SqrtVal scaled_value(const std::vector<Poly>& coeffs, const TestPoint& t) {
  const std::size_t d = coeffs.size() - 1;
  SqrtVal v{coeffs[d], Poly()};
  Poly gpow(1);
  for (std::size_t i = d; i-- > 0;) {
    gpow = gpow * t.gamma;
    SqrtVal next{v.p * t.alpha, v.p * t.beta + v.q * t.alpha};
    if (!v.q.is_zero() && !t.beta.is_zero()) next.p += v.q * t.beta * t.disc;
    next.p += coeffs[i] * gpow;
    v = std::move(next);
  }
  return v;
}

bool is_order(Rel r) { return r == Rel::Le || r == Rel::Lt; }

// p(t) rel 0 at an exact test point.
ClauseSet at_point(const std::vector<Poly>& coeffs, Rel rel, const TestPoint& t) {
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return single({coeffs[0], rel});
  SqrtVal v = scaled_value(coeffs, t);
  // gamma^d may be negative for odd d; one more factor makes it a square.
  if (is_order(rel) && d % 2 == 1) {
    if (auto g = t.gamma.constant_value()) {
      if (g->sign() < 0) {
        v.p = -v.p;
        v.q = -v.q;
      }
    } else {
      v.p = v.p * t.gamma;
      v.q = v.q * t.gamma;
    }
  }
  return sqrt_sign(v, t.disc, rel);
}

std::vector<Poly> derivative(const std::vector<Poly>& coeffs) {
  std::vector<Poly> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * Rational(static_cast<long>(i)));
  if (out.empty()) out.push_back(Poly());
  return out;
}

// p(t + eps) < 0 for a positive infinitesimal eps.
ClauseSet lt_eps(const std::vector<Poly>& coeffs, const TestPoint& t) {
  if (coeffs.size() == 1) return single({coeffs[0], Rel::Lt});
  ClauseSet out = at_point(coeffs, Rel::Lt, t);
  ClauseSet tail = conj(at_point(coeffs, Rel::Eq, t), lt_eps(derivative(coeffs), t));
  return simplify_clauses(disj(std::move(out), tail));
}

ClauseSet lt_minus_inf(const std::vector<Poly>& coeffs) {
  ClauseSet out;
  QfClause higher;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    QfClause c = higher;
    c.push_back({i % 2 == 0 ? coeffs[i] : -coeffs[i], Rel::Lt});
    out.push_back(std::move(c));
    higher.push_back({coeffs[i], Rel::Eq});
  }
  return out;
}

// Virtual substitution of t into the atom p rel 0.
ClauseSet substitute_atom(const RealAtom& a, Var x, const TestPoint& t) {
  const std::vector<Poly> coeffs = a.poly.coeffs_in(x);
  if (coeffs.size() <= 1) return single(a);
  using K = TestPoint::Kind;
  if (t.kind == K::Point) return at_point(coeffs, a.rel, t);
  switch (a.rel) {
    case Rel::Eq: return all_zero(coeffs);
    case Rel::Ne: return some_nonzero(coeffs);
    case Rel::Lt: return t.kind == K::MinusInf ? lt_minus_inf(coeffs) : lt_eps(coeffs, t);
    case Rel::Le: {
      ClauseSet lt = t.kind == K::MinusInf ? lt_minus_inf(coeffs) : lt_eps(coeffs, t);
      return disj(std::move(lt), all_zero(coeffs));
    }
  }
  return {};
}

TestPoint rational_point(TestPoint::Kind kind, Poly num, Poly den, QfClause guard) {
  TestPoint t;
  t.kind = kind;
  if (auto c = den.constant_value()) {
    t.alpha = num * c->inverse();
  } else {
    t.alpha = std::move(num);
    t.gamma = std::move(den);
  }
  t.guard = std::move(guard);
  return t;
}

// Roots of c2 x^2 + c1 x + c0 under c2 != 0, as test points of one kind.
std::vector<TestPoint> quadratic_roots(TestPoint::Kind kind, const Poly& c2, const Poly& c1, const Poly& c0) {
  const Poly d = c1 * c1 - Rational(4) * c2 * c0;
  QfClause guard{{c2, Rel::Ne}};
  std::vector<TestPoint> out;
  if (auto dv = d.constant_value()) {
    if (dv->sign() < 0) return out;
    Rational s;
    if (dv->perfect_square(&s)) {
      for (int sign : {1, -1}) {
        out.push_back(rational_point(kind, -c1 + Poly(s * Rational(sign)), Rational(2) * c2, guard));
        if (s.is_zero()) break;
      }
      return out;
    }
  } else {
    guard.push_back({-d, Rel::Le});
  }
  for (int sign : {1, -1}) {
    TestPoint t;
    t.kind = kind;
    t.alpha = -c1;
    t.beta = Poly(sign);
    t.disc = d;
    t.gamma = Rational(2) * c2;
    if (auto g = t.gamma.constant_value()) {
      t.alpha = t.alpha * g->inverse();
      t.beta = t.beta * g->inverse();
      t.gamma = Poly(1);
    }
    t.guard = guard;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TestPoint> points_of(TestPoint::Kind kind, const std::vector<Poly>& coeffs) {
  std::vector<TestPoint> out;
  if (coeffs.size() == 2) {
    out.push_back(rational_point(kind, -coeffs[0], coeffs[1], {{coeffs[1], Rel::Ne}}));
  } else if (coeffs.size() == 3) {
    out = quadratic_roots(kind, coeffs[2], coeffs[1], coeffs[0]);
    if (!coeffs[2].constant_value() && !coeffs[1].is_zero())
      out.push_back(rational_point(kind, -coeffs[0], coeffs[1], {{coeffs[2], Rel::Eq}, {coeffs[1], Rel::Ne}}));
  }
  return out;
}

unsigned vs_degree(const QfClause& c, Var x, const RealAtom** offender) {
  unsigned deg = 0;
  for (const auto& a : c) {
    if (a.rel == Rel::Ne) continue;
    const unsigned d = a.poly.degree_in(x);
    if (d > deg) {
      deg = d;
      if (offender) *offender = &a;
    }
  }
  return deg;
}

std::set<TestPoint> test_points(const QfClause& c, Var x) {
  using K = TestPoint::Kind;
  std::set<TestPoint> out;
  out.insert(TestPoint{});
  const bool has_ne = std::any_of(c.begin(), c.end(), [&](const RealAtom& a) {
    return a.rel == Rel::Ne && a.poly.contains(x);
  });
  for (const auto& a : c) {
    if (a.rel == Rel::Ne || !a.poly.contains(x)) continue;
    const auto coeffs = a.poly.coeffs_in(x);
    std::vector<K> kinds;
    if (a.rel == Rel::Lt) kinds = {K::PointEps};
    else if (has_ne) kinds = {K::Point, K::PointEps};
    else kinds = {K::Point};
    for (K k : kinds)
      for (auto& t : points_of(k, coeffs)) out.insert(std::move(t));
  }
  return out;
}

// Conjunction of the clause's x-atoms under t, the guard and the x-free rest.
ClauseSet instantiate(const QfClause& rest, const std::vector<const RealAtom*>& with_x, Var x,
                      const TestPoint& t) {
  QfClause base = rest;
  base.insert(base.end(), t.guard.begin(), t.guard.end());
  auto first = normalize_clause(std::move(base));
  if (!first) return {};
  ClauseSet cs{*first};
  for (const RealAtom* a : with_x) {
    cs = simplify_clauses(conj(cs, substitute_atom(*a, x, t)));
    if (cs.empty()) break;
  }
  return cs;
}

void split(const QfClause& c, Var x, QfClause& rest, std::vector<const RealAtom*>& with_x) {
  for (const auto& a : c) {
    if (a.poly.contains(x)) with_x.push_back(&a);
    else rest.push_back(a);
  }
}

ClauseSet vs_clause(const QfClause& c, Var x) {
  QfClause rest;
  std::vector<const RealAtom*> with_x;
  split(c, x, rest, with_x);
  if (with_x.empty()) return {c};
  ClauseSet out;
  for (const auto& t : test_points(c, x)) {
    ClauseSet part = instantiate(rest, with_x, x, t);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return simplify_clauses(std::move(out));
}

struct GaussResult {
  ClauseSet solved;                  // branches with x eliminated
  std::optional<QfClause> residual;  // degenerate branch, may still contain x
};

// Elimination through the equation c[index] of degree 1 or 2 in x.
GaussResult gauss(const QfClause& c, std::size_t index, Var x) {
  const RealAtom& eq = c[index];
  const auto coeffs = eq.poly.coeffs_in(x);
  QfClause rest;
  std::vector<const RealAtom*> with_x;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == index) continue;
    if (c[i].poly.contains(x)) with_x.push_back(&c[i]);
    else rest.push_back(c[i]);
  }
  GaussResult out;
  const Poly& lead = coeffs.back();
  std::vector<TestPoint> points;
  if (coeffs.size() == 2) points.push_back(rational_point(TestPoint::Kind::Point, -coeffs[0], coeffs[1], {{coeffs[1], Rel::Ne}}));
  else points = quadratic_roots(TestPoint::Kind::Point, coeffs[2], coeffs[1], coeffs[0]);
  for (const auto& t : points) {
    ClauseSet part = instantiate(rest, with_x, x, t);
    out.solved.insert(out.solved.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!lead.constant_value()) {
    QfClause deg = rest;
    for (const RealAtom* a : with_x) deg.push_back(*a);
    deg.push_back({lead, Rel::Eq});
    std::vector<Poly> lower(coeffs.begin(), coeffs.end() - 1);
    deg.push_back({Poly::from_coeffs(x, lower), Rel::Eq});
    out.residual = normalize_clause(std::move(deg));
  }
  return out;
}

std::size_t count_vars(const Poly& p, const std::set<std::uint32_t>& block) {
  std::size_t n = 0;
  for (Var v : p.vars())
    if (block.contains(v.id())) ++n;
  return n;
}

enum class Method { GaussLinear, GaussQuadratic, Vs };

struct Choice {
  Var var;
  Method method = Method::Vs;
  std::size_t eq_index = 0;
  unsigned vs_deg = 0;
};

using Score = std::tuple<int, std::size_t, std::size_t>;

// Every applicable elimination step for x in clause c with its static score.
std::vector<std::pair<Score, Choice>> steps_for(const QfClause& c, Var x, const std::set<std::uint32_t>& block) {
  std::vector<std::pair<Score, Choice>> best;
  auto offer = [&](Score s, Choice ch) { best.emplace_back(s, ch); };
  std::size_t occurrences = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const RealAtom& a = c[i];
    const unsigned d = a.poly.degree_in(x);
    if (d == 0) continue;
    ++occurrences;
    if (a.rel != Rel::Eq || d > 2) continue;
    const auto coeffs = a.poly.coeffs_in(x);
    const Poly& lead = coeffs.back();
    if (d == 1) {
      if (lead.constant_value()) offer({0, a.poly.size(), 0}, {x, Method::GaussLinear, i, 0});
      else offer({1, count_vars(lead, block), lead.size() * 64 + a.poly.size()}, {x, Method::GaussLinear, i, 0});
    } else {
      offer({3, count_vars(lead, block), a.poly.size()}, {x, Method::GaussQuadratic, i, 0});
    }
  }
  const unsigned deg = vs_degree(c, x, nullptr);
  if (deg <= 2) {
    const std::size_t points = test_points(c, x).size();
    offer({deg <= 1 ? 2 : 4, points, occurrences}, {x, Method::Vs, 0, deg});
  }
  return best;
}

std::size_t monomials(const QfClause& c) {
  std::size_t n = 0;
  for (const auto& a : c) n += a.poly.size();
  return n;
}

bool mentions(const QfClause& c, const std::set<std::uint32_t>& block) {
  for (const auto& a : c)
    for (const auto& [m, coef] : a.poly.terms())
      for (const auto& [id, e] : m.powers())
        if (block.contains(id)) return true;
  return false;
}

RealFormula partial_formula(const std::vector<Var>& block, const std::vector<QfClause>& work, const ClauseSet& done) {
  RealFormula open = from_clauses(work);
  for (auto it = block.rbegin(); it != block.rend(); ++it) open = RealFormula::exists(it->name(), open);
  return RealFormula::disj(open, from_clauses(done));
}

// When x occurs in c only through x^g (g >= 2), exists x. c(x^g) is
// exists u. c(u) with u >= 0 for even g; x then stands for u.
std::optional<QfClause> deflate(const QfClause& c, Var x) {
  unsigned g = 0;
  for (const auto& a : c) {
    const auto cs = a.poly.coeffs_in(x);
    for (std::size_t i = 1; i < cs.size(); ++i)
      if (!cs[i].is_zero()) g = std::gcd(g, static_cast<unsigned>(i));
  }
  if (g < 2) return std::nullopt;
  QfClause out;
  for (const auto& a : c) {
    const auto cs = a.poly.coeffs_in(x);
    std::vector<Poly> lowered;
    for (std::size_t i = 0; i < cs.size(); i += g) lowered.push_back(cs[i]);
    out.push_back({Poly::from_coeffs(x, lowered), a.rel});
  }
  if (g % 2 == 0) out.push_back({-Poly(x), Rel::Le});
  return out;
}

// Upper bound on the degree in a block variable after the step: the
// eliminated variable is replaced by an expression whose coefficients have
// at most the degrees of the defining atoms' coefficients.
unsigned estimated_degree(const QfClause& c, const Choice& ch, const std::set<std::uint32_t>& block) {
  std::vector<const RealAtom*> sources;
  if (ch.method == Method::Vs) {
    for (const auto& a : c)
      if (a.poly.contains(ch.var)) sources.push_back(&a);
  } else {
    sources.push_back(&c[ch.eq_index]);
  }
  unsigned worst = 0;
  for (std::uint32_t id : block) {
    const Var y = Var::from_id(id);
    if (y == ch.var) continue;
    unsigned e = 0;
    for (const RealAtom* s : sources)
      for (const auto& k : s->poly.coeffs_in(ch.var)) e = std::max(e, k.degree_in(y));
    for (const auto& a : c) {
      const auto ks = a.poly.coeffs_in(ch.var);
      for (std::size_t i = 0; i < ks.size(); ++i)
        if (!ks[i].is_zero()) worst = std::max(worst, ks[i].degree_in(y) + static_cast<unsigned>(ks.size() - 1) * e);
    }
  }
  return worst;
}

ClauseSet apply_step(const QfClause& c, const Choice& ch) {
  if (ch.method == Method::Vs) return vs_clause(c, ch.var);
  GaussResult g = gauss(c, ch.eq_index, ch.var);
  ClauseSet out = std::move(g.solved);
  if (g.residual) out.push_back(std::move(*g.residual));
  return out;
}

constexpr std::size_t kLookahead = 8;
constexpr std::size_t kSimplifyEvery = 64;

// Simplifies an accumulating clause set once it passes `next`, then moves the
// threshold to twice the simplified size so the total cost stays near linear
// in the number of appends.
void compact(ClauseSet& s, std::size_t& next) {
  if (s.size() <= next) return;
  s = simplify_clauses(std::move(s));
  next = std::max(kSimplifyEvery, 2 * s.size());
}

// (clauses with no applicable step, degree above 2 summed over atoms, monomials)
std::tuple<std::size_t, std::size_t, std::size_t> lookahead_key(const ClauseSet& s,
                                                              const std::set<std::uint32_t>& block) {
  std::size_t stuck = 0, excess = 0, size = 0;
  for (const auto& c : s) {
    size += monomials(c);
    bool movable = false, any = false;
    for (std::uint32_t id : block) {
      const Var x = Var::from_id(id);
      if (!std::any_of(c.begin(), c.end(), [&](const RealAtom& a) { return a.poly.contains(x); })) continue;
      any = true;
      if (!steps_for(c, x, block).empty()) {
        movable = true;
        break;
      }
    }
    if (any && !movable) ++stuck;
    for (const auto& a : c) {
      if (a.rel == Rel::Ne) continue;
      unsigned d = 0;
      for (std::uint32_t id : block) d = std::max(d, a.poly.degree_in(Var::from_id(id)));
      if (d > 2) excess += d - 2;
    }
  }
  return {stuck, excess, size};
}

// ALGQE_TRACE=1 logs every elimination step to stderr.
bool trace_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("ALGQE_TRACE");
    return v != nullptr && *v != '\0' && *v != '0';
  }();
  return on;
}

ClauseSet run_vs(const ClauseSet& s, Var x, unsigned max_degree, QeStats* stats) {
  ClauseSet out;
  for (const auto& c : s) {
    const RealAtom* offender = nullptr;
    unsigned deg = vs_degree(c, x, &offender);
    if (max_degree == 1) {
      for (const auto& a : c)
        if (a.poly.degree_in(x) > deg) {
          deg = a.poly.degree_in(x);
          offender = &a;
        }
    }
    if (deg > max_degree) throw DegreeTooHigh(x.name(), *offender, deg);
    if (stats) ++(deg <= 1 ? stats->linear_vs : stats->quadratic_vs);
    ClauseSet part = vs_clause(c, x);
    out.insert(out.end(), part.begin(), part.end());
  }
  return simplify_clauses(std::move(out));
}

}  // namespace

EqSubstitution eq_substitute(const QfClause& clause, Var x) {
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (clause[i].rel != Rel::Eq || clause[i].poly.degree_in(x) != 1) continue;
    const Poly lead = clause[i].poly.coeffs_in(x)[1];
    GaussResult g = gauss(clause, i, x);
    EqSubstitution out;
    // The guard is part of every solved branch; report the branches without it.
    QfClause guard;
    if (!lead.constant_value()) guard.push_back({lead, Rel::Ne});
    if (!guard.empty()) {
      auto ng = normalize_clause(guard);
      guard = ng ? *ng : guard;
      for (auto& c : g.solved) {
        QfClause stripped;
        for (auto& a : c)
          if (!std::binary_search(guard.begin(), guard.end(), a)) stripped.push_back(a);
        c = std::move(stripped);
      }
    }
    out.clause = simplify_clauses(std::move(g.solved));
    out.guard = std::move(guard);
    out.degenerate = std::move(g.residual);
    return out;
  }
  throw NotApplicable("no equation linear in " + x.name());
}

ClauseSet linear_vs(const ClauseSet& s, Var x, QeStats* stats) { return run_vs(s, x, 1, stats); }
ClauseSet quadratic_vs(const ClauseSet& s, Var x, QeStats* stats) { return run_vs(s, x, 2, stats); }

namespace {

// Depth-first elimination of one block, clause by clause. Each clause tries
// its ranked steps in turn; a DegreeTooHigh below a step moves on to the
// next step until the backtrack budget is spent.
class BlockSolver {
 public:
  BlockSolver(const std::vector<Var>& block, const QeOptions& opts, QeStats& st)
      : block_(block), opts_(opts), st_(st) {
    for (Var v : block) ids_.insert(v.id());
  }

  const std::set<std::uint32_t>& ids() const { return ids_; }

  ClauseSet solve(const QfClause& c) {
    if (!mentions(c, ids_)) return {c};
    if (auto hit = solved_.find(c); hit != solved_.end()) return hit->second;
    if (auto hit = failed_.find(c); hit != failed_.end()) throw hit->second;
    try {
      ClauseSet out = solve_fresh(c);
      solved_.emplace(c, out);
      return out;
    } catch (const DegreeTooHigh& e) {
      failed_.emplace(c, e);
      throw;
    }
  }

 private:
  ClauseSet solve_all(const ClauseSet& parts) {
    ClauseSet out;
    std::size_t next = kSimplifyEvery;
    for (const auto& p : parts) {
      ClauseSet r = solve(p);
      out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      compact(out, next);
    }
    return out;
  }

  ClauseSet normalized(ClauseSet parts) {
    ClauseSet out;
    for (auto& p : parts)
      if (auto n = normalize_clause(std::move(p))) out.push_back(std::move(*n));
    return out;
  }

  void account(const ClauseSet& produced) {
    made_ += produced.size();
    if (made_ > opts_.max_clauses) throw SizeLimitExceeded("clause", made_, opts_.max_clauses);
    std::size_t mono = 0;
    for (const auto& c : produced) mono += monomials(c);
    if (mono > opts_.max_monomials) throw SizeLimitExceeded("monomial", mono, opts_.max_monomials);
    // Branches whose degrees have grown this far do not come back within
    // the quadratic backend; give up on them early.
    for (const auto& c : produced)
      for (const auto& a : c)
        for (Var x : block_)
          if (const unsigned d = a.poly.degree_in(x); d > opts_.max_degree) throw DegreeTooHigh(x.name(), a, d);
  }

  void trace(const QfClause& c, const Choice& ch) const {
    if (!trace_enabled()) return;
    std::cerr << "[qe] " << from_clauses({c}) << "\n     -> " << ch.var.name() << " via "
              << (ch.method == Method::GaussLinear      ? "linear equation"
                  : ch.method == Method::GaussQuadratic ? "quadratic equation"
                                                        : "test points")
              << (ch.method == Method::Vs ? "" : " " + atom_str(c[ch.eq_index])) << "\n";
  }

  void count(const Choice& ch) {
    switch (ch.method) {
      case Method::GaussLinear: ++st_.eq_subst; break;
      case Method::GaussQuadratic: ++st_.quadratic_vs; break;
      case Method::Vs: ++(ch.vs_deg <= 1 ? st_.linear_vs : st_.quadratic_vs); break;
    }
  }

  ClauseSet solve_fresh(const QfClause& c) {
    if (auto parts = split_products(c)) return solve_all(normalized(std::move(*parts)));
    for (Var x : block_)
      if (auto d = deflate(c, x)) {
        if (trace_enabled()) std::cerr << "[qe] deflate " << x.name() << " in " << from_clauses({c}) << "\n";
        auto n = normalize_clause(std::move(*d));
        return n ? solve(*n) : ClauseSet{};
      }

    std::vector<std::pair<Score, Choice>> options;
    const RealAtom* offender = nullptr;
    Var offending_var;
    unsigned offending_deg = 0;
    auto consider = [&](Var x) {
      if (!std::any_of(c.begin(), c.end(), [&](const RealAtom& a) { return a.poly.contains(x); })) return false;
      auto b = steps_for(c, x, ids_);
      if (b.empty()) {
        const RealAtom* off = nullptr;
        const unsigned d = vs_degree(c, x, &off);
        if (!offender || d > offending_deg) {
          offender = off;
          offending_var = x;
          offending_deg = d;
        }
        return false;
      }
      options.insert(options.end(), b.begin(), b.end());
      return true;
    };
    if (opts_.order == VarOrder::Given) {
      for (auto it = block_.rbegin(); it != block_.rend(); ++it)
        if (consider(*it)) break;
    } else {
      for (Var x : block_) consider(x);
    }
    if (options.empty()) throw DegreeTooHigh(offending_var.name(), *offender, offending_deg);
    std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    {
      std::optional<DegreeTooHigh> blown;
      std::erase_if(options, [&](const auto& o) {
        const unsigned d = estimated_degree(c, o.second, ids_);
        if (d <= opts_.max_degree) return false;
        if (!blown) blown.emplace(o.second.var.name(), o.second.method == Method::Vs ? c.front() : c[o.second.eq_index], d);
        return true;
      });
      if (options.empty()) throw *blown;
    }

    // A constant-coefficient linear equation never branches and is the only
    // step tried. Otherwise the first kLookahead steps are ranked by what
    // they leave behind (stuck clauses, excess degree, size), unless the
    // statically best one already leaves nothing stuck or above degree 2.
    struct Candidate {
      Choice choice;
      ClauseSet produced;
    };
    std::vector<Candidate> ranked;
    ranked.push_back({options[0].second, normalized(apply_step(c, options[0].second))});
    if (std::get<0>(options[0].first) != 0 && options.size() > 1) {
      const auto first_key = lookahead_key(ranked[0].produced, ids_);
      const bool clean = std::get<0>(first_key) == 0 && std::get<1>(first_key) == 0;
      const std::size_t limit = std::min<std::size_t>(options.size(), kLookahead);
      if (clean) {
        for (std::size_t k = 1; k < limit; ++k) ranked.push_back({options[k].second, {}});
      } else {
        std::vector<std::pair<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>> keys{{first_key, 0}};
        for (std::size_t k = 1; k < limit; ++k) {
          ranked.push_back({options[k].second, normalized(apply_step(c, options[k].second))});
          keys.emplace_back(lookahead_key(ranked.back().produced, ids_), k);
        }
        std::stable_sort(keys.begin(), keys.end());
        std::vector<Candidate> sorted;
        for (const auto& [key, k] : keys) sorted.push_back(std::move(ranked[k]));
        ranked = std::move(sorted);
      }
    }

    std::optional<DegreeTooHigh> first_failure;
    for (std::size_t k = 0; k < ranked.size(); ++k) {
      Candidate& cand = ranked[k];
      if (k > 0 && cand.produced.empty()) cand.produced = normalized(apply_step(c, cand.choice));
      trace(c, cand.choice);
      if (trace_enabled()) std::cerr << "     produced " << cand.produced.size() << " clauses\n";
      count(cand.choice);
      try {
        account(cand.produced);
        return solve_all(cand.produced);
      } catch (const DegreeTooHigh& e) {
        if (!first_failure) first_failure = e;
        if (backtracks_ >= opts_.max_backtracks) throw *first_failure;
        ++backtracks_;
        if (trace_enabled()) std::cerr << "[qe] backtrack (" << e.what() << ")\n";
      }
    }
    throw *first_failure;
  }

  const std::vector<Var>& block_;
  const QeOptions& opts_;
  QeStats& st_;
  std::set<std::uint32_t> ids_;
  std::map<QfClause, ClauseSet> solved_;
  std::map<QfClause, DegreeTooHigh> failed_;
  std::size_t backtracks_ = 0;
  std::size_t made_ = 0;
};

}  // namespace

RealFormula eliminate_block(const std::vector<Var>& block, const RealFormula& matrix, const QeOptions& opts,
                            QeStats* stats) {
  QeStats local;
  BlockSolver solver(block, opts, stats ? *stats : local);
  const ClauseSet input = to_clauses(matrix, opts.max_clauses);
  ClauseSet done;
  std::size_t next = kSimplifyEvery;
  for (std::size_t i = 0; i < input.size(); ++i) {
    try {
      ClauseSet r = solver.solve(input[i]);
      done.insert(done.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    } catch (DegreeTooHigh& e) {
      const std::vector<QfClause> open(input.begin() + static_cast<std::ptrdiff_t>(i), input.end());
      e.set_partial(partial_formula(block, open, done));
      throw;
    }
    compact(done, next);
  }
  if (!opts.simplify) return from_clauses(done);
  return from_clauses(simplify_clauses(std::move(done)));
}

RealFormula eliminate_quantifiers(const RealFormula& f, const QeOptions& opts, QeStats* stats) {
  const PrenexForm<RealAtom> pf = prenex_form(f);
  RealFormula current = pf.matrix;
  std::size_t end = pf.prefix.size();
  while (end > 0) {
    const bool exists = pf.prefix[end - 1].exists;
    std::size_t begin = end;
    while (begin > 0 && pf.prefix[begin - 1].exists == exists) --begin;
    std::vector<Var> block;
    for (std::size_t i = begin; i < end; ++i) block.emplace_back(pf.prefix[i].var);
    try {
      if (exists) {
        current = eliminate_block(block, current, opts, stats);
      } else {
        current = RealFormula::negation(eliminate_block(block, RealFormula::negation(current), opts, stats));
      }
    } catch (DegreeTooHigh& e) {
      // Re-wrap the partial result in the outer quantifiers.
      RealFormula partial = exists ? e.partial() : RealFormula::negation(e.partial());
      for (std::size_t i = begin; i-- > 0;)
        partial = pf.prefix[i].exists ? RealFormula::exists(pf.prefix[i].var, partial)
                                      : RealFormula::forall(pf.prefix[i].var, partial);
      e.set_partial(partial);
      throw;
    }
    end = begin;
  }
  return opts.simplify ? simplify(current) : current;
}

}  // namespace algqe
