#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "algqe/errors.hpp"
#include "algqe/real_qe.hpp"

namespace algqe {

namespace {

// Admissible signs of a polynomial as a bit set.
constexpr std::uint8_t kNeg = 1, kZero = 2, kPos = 4, kAny = 7;

std::uint8_t rel_mask(Rel r) {
  switch (r) {
    case Rel::Eq: return kZero;
    case Rel::Ne: return kNeg | kPos;
    case Rel::Le: return kNeg | kZero;
    case Rel::Lt: return kNeg;
  }
  return kAny;
}

std::uint8_t mirror(std::uint8_t m) {
  return static_cast<std::uint8_t>((m & kZero) | ((m & kNeg) ? kPos : 0) | ((m & kPos) ? kNeg : 0));
}

// k with coprime integer coefficients and positive top coefficient in the
// internal monomial order; flip says p is a negative multiple of k.
std::pair<Poly, bool> canonical(const Poly& p) {
  Poly k = p.primitive();
  const bool flip = !k.is_zero() && k.terms().rbegin()->second.sign() < 0;
  if (flip) k = -k;
  return {std::move(k), flip};
}

void emit(const Poly& k, std::uint8_t m, QfClause& out) {
  switch (m) {
    case kZero: out.push_back({k, Rel::Eq}); break;
    case kNeg | kPos: out.push_back({k, Rel::Ne}); break;
    case kNeg | kZero: out.push_back({k, Rel::Le}); break;
    case kZero | kPos: out.push_back({-k, Rel::Le}); break;
    case kNeg: out.push_back({k, Rel::Lt}); break;
    case kPos: out.push_back({-k, Rel::Lt}); break;
    default: break;
  }
}

Monomial monomial_gcd(const Poly& p) {
  std::map<std::uint32_t, std::uint32_t> g;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      for (const auto& [id, e] : m.powers()) g[id] = e;
      first = false;
      continue;
    }
    std::map<std::uint32_t, std::uint32_t> next;
    for (const auto& [id, e] : m.powers())
      if (auto it = g.find(id); it != g.end()) next[id] = std::min(e, it->second);
    g = std::move(next);
    if (g.empty()) break;
  }
  Monomial out;
  for (const auto& [id, e] : g) out = out * Monomial::of(Var::from_id(id), e);
  return out;
}

Poly divide_monomial(const Poly& p, const Monomial& d) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial q;
    for (const auto& [id, e] : m.powers()) {
      const std::uint32_t sub = d.degree_in(Var::from_id(id));
      if (e > sub) q = q * Monomial::of(Var::from_id(id), e - sub);
    }
    out += Poly(q, c);
  }
  return out;
}

bool all_even(const Monomial& m) {
  return std::all_of(m.powers().begin(), m.powers().end(), [](const auto& pw) { return pw.second % 2 == 0; });
}

// Sum of even monomials with positive coefficients: never negative.
bool is_psd(const Poly& k) {
  for (const auto& [m, c] : k.terms())
    if (c.sign() < 0 || !all_even(m)) return false;
  return true;
}

bool pure_powers(const Poly& k) {
  for (const auto& [m, c] : k.terms())
    if (m.powers().size() > 1) return false;
  return true;
}

// v = value when k = a*v + b with a, b constants.
std::optional<std::pair<Var, Rational>> constant_binding(const Poly& k) {
  if (k.degree() != 1 || k.size() > 2 || (k.size() == 2 && k.constant_term().is_zero())) return std::nullopt;
  std::optional<Var> v;
  Rational a, b;
  for (const auto& [m, c] : k.terms()) {
    if (m.is_one()) {
      b = c;
    } else {
      v = Var::from_id(m.powers().front().first);
      a = c;
    }
  }
  if (!v) return std::nullopt;
  return std::make_pair(*v, -b / a);
}

}  // namespace

std::optional<QfClause> normalize_clause(QfClause c) {
  std::deque<RealAtom> pending(std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  std::map<Poly, std::uint8_t> masks;
  std::set<std::uint32_t> propagated;

  for (;;) {
    while (!pending.empty()) {
      RealAtom a = std::move(pending.front());
      pending.pop_front();
      if (auto v = a.poly.constant_value()) {
        if (!holds(a.rel, v->sign())) return std::nullopt;
        continue;
      }
      auto [k, flip] = canonical(a.poly);
      std::uint8_t m = rel_mask(a.rel);
      if (flip) m = mirror(m);

      const Monomial g = monomial_gcd(k);
      if (!g.is_one()) {
        // v^e has the sign of v^(e odd ? 1 : 2); lower the content exponents.
        Monomial reduced;
        bool lowered = false;
        for (const auto& [id, e] : g.powers()) {
          const std::uint32_t r = e % 2 == 1 ? 1 : 2;
          lowered = lowered || r != e;
          reduced = reduced * Monomial::of(Var::from_id(id), r);
        }
        if (lowered) {
          Poly q = divide_monomial(k, g) * Poly(reduced, Rational(1));
          pending.push_back({flip ? -q : q, a.rel});
          continue;
        }
      }
      if (!g.is_one() && !(k.size() == 1 && k.degree() == 1)) {
        const bool nonzero_only = m == (kNeg | kPos);
        const bool strict_even = (m == kNeg || m == kPos) && all_even(g);
        if (nonzero_only || strict_even) {
          // sign(k) = sign(g) sign(q); both factors must be nonzero.
          Poly q = divide_monomial(k, g);
          if (nonzero_only) pending.push_back({q, Rel::Ne});
          else pending.push_back({m == kNeg ? q : -q, Rel::Lt});
          for (const auto& [id, e] : g.powers()) pending.push_back({Poly(Var::from_id(id)), Rel::Ne});
          continue;
        }
      }

      if (is_psd(k)) {
        const std::uint8_t possible = k.constant_term().sign() > 0 ? kPos : (kZero | kPos);
        m &= possible;
        if (m == 0) return std::nullopt;
        if (m == possible) continue;
        if (m == kZero && pure_powers(k)) {
          for (const auto& [mono, coef] : k.terms())
            pending.push_back({Poly(Var::from_id(mono.powers().front().first)), Rel::Eq});
          continue;
        }
      }

      auto [it, fresh] = masks.emplace(std::move(k), m);
      if (!fresh) it->second &= m;
      if (it->second == 0) return std::nullopt;
    }

    // Substitute v = value from equations of that shape into the rest.
    std::optional<std::pair<Var, Rational>> binding;
    for (const auto& [k, m] : masks) {
      if (m != kZero) continue;
      auto b = constant_binding(k);
      if (!b || propagated.contains(b->first.id())) continue;
      const bool elsewhere = std::any_of(masks.begin(), masks.end(), [&](const auto& e) {
        return !(e.first == k) && e.first.contains(b->first);
      });
      if (!elsewhere) continue;
      binding = b;
      break;
    }
    if (!binding) break;
    propagated.insert(binding->first.id());
    QfClause atoms;
    for (const auto& [k, m] : masks) emit(k, m, atoms);
    masks.clear();
    Point pt{{binding->first.id(), binding->second}};
    for (auto& a : atoms) {
      if (a.rel == Rel::Eq && constant_binding(a.poly) &&
          constant_binding(a.poly)->first == binding->first) {
        pending.push_back(std::move(a));
        continue;
      }
      pending.push_back({a.poly.partial_eval(pt), a.rel});
    }
  }

  QfClause out;
  for (const auto& [k, m] : masks) emit(k, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClauseSet> split_products(const QfClause& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const RealAtom& a = c[i];
    if (a.rel != Rel::Eq && a.rel != Rel::Le) continue;
    const Monomial g = monomial_gcd(a.poly);
    if (g.is_one() || (a.poly.size() == 1 && a.poly.degree() == 1)) continue;
    if (a.rel == Rel::Le && !all_even(g)) continue;
    // g q rel 0 with g = 0 on the union of its variables' zero sets.
    QfClause rest = c;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    ClauseSet out;
    for (const auto& [id, e] : g.powers()) {
      QfClause b = rest;
      b.push_back({Poly(Var::from_id(id)), Rel::Eq});
      out.push_back(std::move(b));
    }
    QfClause b = rest;
    b.push_back({divide_monomial(a.poly, g), a.rel});
    out.push_back(std::move(b));
    return out;
  }
  return std::nullopt;
}

ClauseSet conj(const ClauseSet& a, const ClauseSet& b) {
  ClauseSet out;
  out.reserve(a.size() * b.size());
  for (const auto& ca : a)
    for (const auto& cb : b) {
      QfClause c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      out.push_back(std::move(c));
    }
  return out;
}

namespace {

// Drop duplicates and clauses containing another clause.
ClauseSet remove_subsumed(ClauseSet s) {
  std::sort(s.begin(), s.end(), [](const QfClause& a, const QfClause& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.front().empty()) return {QfClause{}};
  constexpr std::size_t kQuadraticLimit = 4000;
  if (s.size() > kQuadraticLimit) return s;
  ClauseSet kept;
  for (auto& c : s) {
    const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const QfClause& k) {
      return k.size() < c.size() && std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!subsumed) kept.push_back(std::move(c));
  }
  return kept;
}

// Clauses equal up to the sign condition on one polynomial are merged:
// (A & k < 0) | (A & k = 0) becomes A & k <= 0, a full sign cover becomes A.
bool merge_pass(ClauseSet& s) {
  struct Group {
    std::vector<std::size_t> members;
    std::uint8_t mask = 0;
  };
  std::map<std::pair<QfClause, Poly>, Group> groups;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const QfClause& c = s[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto [k, flip] = canonical(c[j].poly);
      std::uint8_t m = rel_mask(c[j].rel);
      if (flip) m = mirror(m);
      QfClause rest;
      rest.reserve(c.size() - 1);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (t != j) rest.push_back(c[t]);
      Group& g = groups[{std::move(rest), std::move(k)}];
      g.members.push_back(i);
      g.mask |= m;
    }
  }
  std::vector<bool> dead(s.size(), false);
  ClauseSet added;
  for (auto& [key, g] : groups) {
    if (g.members.size() < 2) continue;
    if (std::any_of(g.members.begin(), g.members.end(), [&](std::size_t i) { return dead[i]; })) continue;
    QfClause merged = key.first;
    emit(key.second, g.mask, merged);
    for (std::size_t i : g.members) dead[i] = true;
    added.push_back(std::move(merged));
  }
  if (added.empty()) return false;
  ClauseSet next;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!dead[i]) next.push_back(std::move(s[i]));
  for (auto& c : added) next.push_back(std::move(c));
  s = std::move(next);
  return true;
}

}  // namespace

ClauseSet simplify_clauses(ClauseSet s) {
  ClauseSet normalized;
  normalized.reserve(s.size());
  for (auto& c : s)
    if (auto n = normalize_clause(std::move(c))) normalized.push_back(std::move(*n));
  normalized = remove_subsumed(std::move(normalized));
  constexpr std::size_t kMergeLimit = 20000;
  for (int round = 0; round < 8 && normalized.size() > 1 && normalized.size() <= kMergeLimit; ++round) {
    if (!merge_pass(normalized)) break;
    ClauseSet again;
    for (auto& c : normalized)
      if (auto n = normalize_clause(std::move(c))) again.push_back(std::move(*n));
    normalized = remove_subsumed(std::move(again));
  }
  return normalized;
}

namespace {

RealAtom negate_atom(const RealAtom& a) {
  switch (a.rel) {
    case Rel::Eq: return {a.poly, Rel::Ne};
    case Rel::Ne: return {a.poly, Rel::Eq};
    case Rel::Le: return {-a.poly, Rel::Lt};
    case Rel::Lt: return {-a.poly, Rel::Le};
  }
  return a;
}

ClauseSet clauses_of(const RealFormula& f, bool negate, std::size_t max_clauses) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::True: return negate ? ClauseSet{} : ClauseSet{QfClause{}};
    case K::False: return negate ? ClauseSet{QfClause{}} : ClauseSet{};
    case K::Atom: return {QfClause{negate ? negate_atom(f.atom()) : f.atom()}};
    case K::Not: return clauses_of(f.lhs(), !negate, max_clauses);
    case K::And:
    case K::Or:
    case K::Implies: {
      const bool lhs_neg = f.kind() == K::Implies ? !negate : negate;
      const bool is_and = (f.kind() == K::And) != negate;
      ClauseSet a = clauses_of(f.lhs(), lhs_neg, max_clauses);
      ClauseSet b = clauses_of(f.rhs(), negate, max_clauses);
      if (f.kind() == K::Implies) {
        // not a or b; negated: a and not b
        if (negate) {
          if (a.size() * b.size() > max_clauses)
            throw SizeLimitExceeded("DNF clause", a.size() * b.size(), max_clauses);
          return simplify_clauses(conj(a, b));
        }
        a.insert(a.end(), b.begin(), b.end());
        if (a.size() > max_clauses) throw SizeLimitExceeded("DNF clause", a.size(), max_clauses);
        return a;
      }
      if (is_and) {
        if (a.size() * b.size() > max_clauses)
          throw SizeLimitExceeded("DNF clause", a.size() * b.size(), max_clauses);
        return simplify_clauses(conj(a, b));
      }
      // Disjunctions only concatenate; long or-chains would otherwise be
      // re-simplified at every node. Products and the caller simplify.
      a.insert(a.end(), b.begin(), b.end());
      if (a.size() > max_clauses) throw SizeLimitExceeded("DNF clause", a.size(), max_clauses);
      return a;
    }
    default: throw std::invalid_argument("to_clauses: formula has quantifiers");
  }
}

}  // namespace

ClauseSet to_clauses(const RealFormula& quantifier_free, std::size_t max_clauses) {
  return simplify_clauses(clauses_of(quantifier_free, false, max_clauses));
}

RealFormula from_clauses(const ClauseSet& s) {
  std::vector<RealFormula> ds;
  ds.reserve(s.size());
  for (const auto& c : s) {
    std::vector<RealFormula> as;
    as.reserve(c.size());
    for (const auto& a : c) as.push_back(RealFormula::atom(a));
    ds.push_back(RealFormula::conj_all(as));
  }
  return RealFormula::disj_all(ds);
}

namespace {

RealFormula simplify_structural(const RealFormula& f) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom: {
      auto n = normalize_clause({f.atom()});
      if (!n) return RealFormula::falsity();
      return from_clauses({*n});
    }
    case K::Not: {
      RealFormula a = simplify_structural(f.lhs());
      if (a.kind() == K::True) return RealFormula::falsity();
      if (a.kind() == K::False) return RealFormula::truth();
      if (a.kind() == K::Not) return a.lhs();
      return RealFormula::negation(a);
    }
    case K::And:
    case K::Or: {
      const bool is_and = f.kind() == K::And;
      RealFormula a = simplify_structural(f.lhs());
      RealFormula b = simplify_structural(f.rhs());
      const K absorbing = is_and ? K::False : K::True;
      const K neutral = is_and ? K::True : K::False;
      if (a.kind() == absorbing || b.kind() == absorbing) return is_and ? RealFormula::falsity() : RealFormula::truth();
      if (a.kind() == neutral) return b;
      if (b.kind() == neutral || a == b) return a;
      return is_and ? RealFormula::conj(a, b) : RealFormula::disj(a, b);
    }
    case K::Implies:
      return simplify_structural(RealFormula::disj(RealFormula::negation(f.lhs()), f.rhs()));
    case K::Exists:
    case K::Forall: {
      RealFormula body = simplify(f.body());
      if (body.kind() == K::True || body.kind() == K::False) return body;
      return f.kind() == K::Exists ? RealFormula::exists(f.var(), body) : RealFormula::forall(f.var(), body);
    }
  }
  return f;
}

}  // namespace

RealFormula simplify(const RealFormula& f) {
  if (f.quantifier_free()) {
    constexpr std::size_t kDnfLimit = 5000;
    try {
      return from_clauses(simplify_clauses(to_clauses(f, kDnfLimit)));
    } catch (const SizeLimitExceeded&) {
      return simplify_structural(f);
    }
  }
  return simplify_structural(f);
}

}  // namespace algqe
