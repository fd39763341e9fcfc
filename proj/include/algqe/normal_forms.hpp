#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "algqe/errors.hpp"
#include "algqe/formula.hpp"

namespace algqe {

template <class Atom>
void collect_free_vars(const Formula<Atom>& f, std::set<std::string>& bound,
                       std::vector<std::string>& out) {
  using K = typename Formula<Atom>::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return;
    case K::Atom: {
      std::set<std::string> vs;
      atom_vars(f.atom(), vs);
      for (const auto& v : vs)
        if (!bound.contains(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      return;
    }
    case K::Exists:
    case K::Forall: {
      const bool fresh = bound.insert(f.var()).second;
      collect_free_vars(f.body(), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
    case K::Not: collect_free_vars(f.lhs(), bound, out); return;
    default:
      collect_free_vars(f.lhs(), bound, out);
      collect_free_vars(f.rhs(), bound, out);
  }
}

// Free variables in order of first occurrence.
template <class Atom>
std::vector<std::string> free_vars(const Formula<Atom>& f) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  collect_free_vars(f, bound, out);
  return out;
}

template <class Atom>
void all_vars(const Formula<Atom>& f, std::set<std::string>& out) {
  using K = typename Formula<Atom>::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return;
    case K::Atom: atom_vars(f.atom(), out); return;
    case K::Exists:
    case K::Forall:
      out.insert(f.var());
      all_vars(f.body(), out);
      return;
    case K::Not: all_vars(f.lhs(), out); return;
    default:
      all_vars(f.lhs(), out);
      all_vars(f.rhs(), out);
  }
}

inline std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  for (int k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

// Capture-avoiding substitution of a term for the free occurrences of var.
template <class Atom, class Term>
Formula<Atom> substitute(const Formula<Atom>& f, const std::string& var, const Term& value) {
  using F = Formula<Atom>;
  using K = typename F::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom: return F::atom(atom_substitute(f.atom(), var, value));
    case K::Not: return F::negation(substitute(f.lhs(), var, value));
    case K::And: return F::conj(substitute(f.lhs(), var, value), substitute(f.rhs(), var, value));
    case K::Or: return F::disj(substitute(f.lhs(), var, value), substitute(f.rhs(), var, value));
    case K::Implies: return F::implies(substitute(f.lhs(), var, value), substitute(f.rhs(), var, value));
    case K::Exists:
    case K::Forall: {
      if (f.var() == var) return f;
      const auto body_free = free_vars(f.body());
      if (std::find(body_free.begin(), body_free.end(), var) == body_free.end()) return f;
      std::set<std::string> value_vars;
      term_vars(value, value_vars);
      std::string binder = f.var();
      F body = f.body();
      if (value_vars.contains(binder)) {
        std::set<std::string> used = value_vars;
        all_vars(f.body(), used);
        used.insert(var);
        binder = fresh_name(f.var(), used);
        body = substitute(body, f.var(), var_term(static_cast<const Atom*>(nullptr), binder));
      }
      body = substitute(body, var, value);
      return f.kind() == K::Exists ? F::exists(binder, body) : F::forall(binder, body);
    }
  }
  return f;
}

// Renames bound variables so that every binder is distinct and no bound
// name coincides with a free one.
template <class Atom>
Formula<Atom> rename_apart(const Formula<Atom>& f, std::set<std::string>& used) {
  using F = Formula<Atom>;
  using K = typename F::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Atom: return f;
    case K::Not: return F::negation(rename_apart(f.lhs(), used));
    case K::And: {
      auto a = rename_apart(f.lhs(), used);
      return F::conj(a, rename_apart(f.rhs(), used));
    }
    case K::Or: {
      auto a = rename_apart(f.lhs(), used);
      return F::disj(a, rename_apart(f.rhs(), used));
    }
    case K::Implies: {
      auto a = rename_apart(f.lhs(), used);
      return F::implies(a, rename_apart(f.rhs(), used));
    }
    case K::Exists:
    case K::Forall: {
      std::string binder = f.var();
      F body = f.body();
      if (used.contains(binder)) {
        binder = fresh_name(f.var(), used);
        body = substitute(body, f.var(), var_term(static_cast<const Atom*>(nullptr), binder));
      }
      used.insert(binder);
      body = rename_apart(body, used);
      return f.kind() == K::Exists ? F::exists(binder, body) : F::forall(binder, body);
    }
  }
  return f;
}

template <class Atom>
Formula<Atom> rename_apart(const Formula<Atom>& f) {
  auto fv = free_vars(f);
  std::set<std::string> used(fv.begin(), fv.end());
  return rename_apart(f, used);
}

struct QuantifierPrefixEntry {
  bool exists;
  std::string var;
  friend bool operator==(const QuantifierPrefixEntry&, const QuantifierPrefixEntry&) = default;
};

template <class Atom>
struct PrenexForm {
  std::vector<QuantifierPrefixEntry> prefix;  // outermost first
  Formula<Atom> matrix;

  Formula<Atom> formula() const {
    Formula<Atom> out = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
      out = it->exists ? Formula<Atom>::exists(it->var, out) : Formula<Atom>::forall(it->var, out);
    return out;
  }
};

namespace detail {

inline void flip(std::vector<QuantifierPrefixEntry>& p) {
  for (auto& q : p) q.exists = !q.exists;
}

template <class Atom>
PrenexForm<Atom> pull_quantifiers(const Formula<Atom>& f) {
  using F = Formula<Atom>;
  using K = typename F::Kind;
  switch (f.kind()) {
    case K::Exists:
    case K::Forall: {
      auto inner = pull_quantifiers(f.body());
      inner.prefix.insert(inner.prefix.begin(), {f.kind() == K::Exists, f.var()});
      return inner;
    }
    case K::Not: {
      auto inner = pull_quantifiers(f.lhs());
      flip(inner.prefix);
      return {inner.prefix, F::negation(inner.matrix)};
    }
    case K::And:
    case K::Or:
    case K::Implies: {
      auto a = pull_quantifiers(f.lhs());
      auto b = pull_quantifiers(f.rhs());
      if (f.kind() == K::Implies) flip(a.prefix);
      std::vector<QuantifierPrefixEntry> prefix = a.prefix;
      prefix.insert(prefix.end(), b.prefix.begin(), b.prefix.end());
      F m = f.kind() == K::And ? F::conj(a.matrix, b.matrix)
            : f.kind() == K::Or ? F::disj(a.matrix, b.matrix)
                                : F::implies(a.matrix, b.matrix);
      return {prefix, m};
    }
    default: return {{}, f};
  }
}

}  // namespace detail

// Prenex form: bound variables renamed apart, quantifiers pulled to the
// front (negation and the antecedent of -> flip them). The quantifier-free
// matrix keeps its connective structure.
template <class Atom>
PrenexForm<Atom> prenex_form(const Formula<Atom>& f) {
  if (f.quantifier_free()) return {{}, f};
  return detail::pull_quantifiers(rename_apart(f));
}

template <class Atom>
Formula<Atom> prenex(const Formula<Atom>& f) {
  return prenex_form(f).formula();
}

// Negation normal form of a quantifier-free formula: negations only directly
// above atoms, no implications.
template <class Atom>
Formula<Atom> nnf(const Formula<Atom>& f, bool negate = false) {
  using F = Formula<Atom>;
  using K = typename F::Kind;
  switch (f.kind()) {
    case K::True: return negate ? F::falsity() : f;
    case K::False: return negate ? F::truth() : f;
    case K::Atom: return negate ? F::negation(f) : f;
    case K::Not: return nnf(f.lhs(), !negate);
    case K::And:
      return negate ? F::disj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : F::conj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::Or:
      return negate ? F::conj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : F::disj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::Implies:
      return negate ? F::conj(nnf(f.lhs(), false), nnf(f.rhs(), true))
                    : F::disj(nnf(f.lhs(), true), nnf(f.rhs(), false));
    default: throw std::invalid_argument("nnf: formula has quantifiers");
  }
}

// A literal is an atom or a negated atom.
template <class Atom>
using Clause = std::vector<Formula<Atom>>;

template <class Atom>
struct Dnf {
  std::vector<Clause<Atom>> clauses;  // empty: false; an empty clause: true

  std::size_t literal_count() const {
    std::size_t n = 0;
    for (const auto& c : clauses) n += c.size();
    return n;
  }

  Formula<Atom> formula() const {
    std::vector<Formula<Atom>> ds;
    ds.reserve(clauses.size());
    for (const auto& c : clauses) ds.push_back(Formula<Atom>::conj_all(c));
    return Formula<Atom>::disj_all(ds);
  }
};

namespace detail {

template <class Atom>
Dnf<Atom> dnf_of_nnf(const Formula<Atom>& f, std::size_t max_clauses) {
  using K = typename Formula<Atom>::Kind;
  switch (f.kind()) {
    case K::True: return {{{}}};
    case K::False: return {};
    case K::Atom:
    case K::Not: return {{{f}}};
    case K::Or: {
      auto a = dnf_of_nnf(f.lhs(), max_clauses);
      auto b = dnf_of_nnf(f.rhs(), max_clauses);
      a.clauses.insert(a.clauses.end(), b.clauses.begin(), b.clauses.end());
      if (a.clauses.size() > max_clauses) throw SizeLimitExceeded("DNF clause", a.clauses.size(), max_clauses);
      return a;
    }
    case K::And: {
      auto a = dnf_of_nnf(f.lhs(), max_clauses);
      auto b = dnf_of_nnf(f.rhs(), max_clauses);
      const std::size_t n = a.clauses.size() * b.clauses.size();
      if (n > max_clauses) throw SizeLimitExceeded("DNF clause", n, max_clauses);
      Dnf<Atom> out;
      out.clauses.reserve(n);
      for (const auto& ca : a.clauses)
        for (const auto& cb : b.clauses) {
          auto c = ca;
          c.insert(c.end(), cb.begin(), cb.end());
          out.clauses.push_back(std::move(c));
        }
      return out;
    }
    default: throw std::invalid_argument("to_dnf: formula has quantifiers");
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultMaxClauses = 100000;

template <class Atom>
Dnf<Atom> to_dnf(const Formula<Atom>& f, std::size_t max_clauses = kDefaultMaxClauses) {
  return detail::dnf_of_nnf(nnf(f), max_clauses);
}

}  // namespace algqe
