#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "algqe/algebra.hpp"
#include "algqe/poly.hpp"
#include "algqe/realify.hpp"
#include "algqe/semantics.hpp"
#include "algqe/term.hpp"

namespace algqe {

// Leaf-labelled binary tree: a nonassociative word in the letters 1..m.
class WordTree {
 public:
  static WordTree leaf(int letter);
  static WordTree node(WordTree left, WordTree right);

  bool is_leaf() const { return node_->letter > 0; }
  int letter() const { return node_->letter; }
  const WordTree& left() const { return node_->kids[0]; }
  const WordTree& right() const { return node_->kids[1]; }
  int length() const { return node_->length; }

  // "1", "(1.2)", "((1.2).1)"
  std::string str() const;
  AlgTerm term(std::span<const AlgTerm> letters) const;

  template <class E>
  E eval(std::span<const E> letters) const {
    if (is_leaf()) return letters[letter() - 1];
    return left().eval(letters) * right().eval(letters);
  }

 private:
  struct Node {
    int letter = 0;
    int length = 1;
    std::vector<WordTree> kids;
  };
  explicit WordTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// All words with at most maxlen letters, ordered by length, then shape
// (split point of the root, recursively), then leaf labels lexicographically.
std::vector<WordTree> enum_words(int m, int maxlen = 4);

// m + m^2 + 2m^3 + 5m^4 for maxlen 4; general maxlen sums Catalan(n-1) m^n.
std::size_t word_count(int m, int maxlen = 4);

struct InvariantEntry {
  std::string label;
  AlgTerm term;  // central-valued term over the scheme variables
  Poly poly;     // coordinate 0 of realify(term)
};

struct InvariantScheme {
  Algebra algebra = Algebra::Quaternion;
  std::vector<std::string> vars;  // the tuple v_1..v_m
  std::vector<InvariantEntry> entries;

  int arity() const { return static_cast<int>(vars.size()); }
  std::size_t size() const { return entries.size(); }
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> default_tuple_vars(int m);  // v1..vm

// tau1[i] = v_i + conj(v_i)
// tau2[i,j] = u + conj(u), u = (v_i - conj v_i)(v_j - conj v_j)
// tau3[i,j,k] = w + conj(w), w = (d_i d_j) d_k with d = v - conj(v)
// Diagonal entries are kept: m + m^2 + m^3 entries.
InvariantScheme quat_scheme(const std::vector<std::string>& vars);
InvariantScheme quat_scheme(int m);

// One entry per word: tau_w = w(v) + conj(w(v)).
InvariantScheme oct_scheme(const std::vector<std::string>& vars, bool dedup = false);
InvariantScheme oct_scheme(int m, bool dedup = false);

InvariantScheme make_scheme(Algebra a, const std::vector<std::string>& vars, bool dedup = false);

// Drops entries whose polynomial equals an earlier entry's polynomial.
InvariantScheme dedup_scheme(InvariantScheme s);

// "label\tterm\tpoly" per entry.
std::string dump_scheme(const InvariantScheme& s);

// Central values Re(tau(tuple)) in entry order.
template <class E>
std::vector<Rational> eval_scheme(const InvariantScheme& s, std::span<const E> tuple) {
  if (tuple.size() != s.vars.size())
    throw ArityMismatch("eval_scheme: tuple has " + std::to_string(tuple.size()) +
                        " elements, scheme arity is " + std::to_string(s.vars.size()));
  Assignment<E> env;
  for (std::size_t i = 0; i < tuple.size(); ++i) env[s.vars[i]] = tuple[i];
  std::vector<Rational> out;
  out.reserve(s.entries.size());
  for (const auto& e : s.entries) {
    const E value = eval_term(e.term, env);
    if (!value.is_central()) throw std::logic_error("invariant " + e.label + " is not central");
    out.push_back(value.re());
  }
  return out;
}

}  // namespace algqe
