#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "algqe/rational.hpp"

namespace algqe {

// Term over the signature (+, -, *, 0, 1, conj). Immutable, shared subtrees.
class AlgTerm {
 public:
  enum class Kind { Var, Zero, One, Neg, Add, Sub, Mul, Conj };

  AlgTerm();  // Zero

  static AlgTerm var(std::string name);
  static AlgTerm zero();
  static AlgTerm one();
  static AlgTerm neg(AlgTerm t);
  static AlgTerm add(AlgTerm a, AlgTerm b);
  static AlgTerm sub(AlgTerm a, AlgTerm b);
  static AlgTerm mul(AlgTerm a, AlgTerm b);
  static AlgTerm conj(AlgTerm t);
  // Non-negative integer literal in its canonical expansion into 1 and +
  // (blocks of sixteen joined by *). The printer folds exactly this shape
  // back into a numeral.
  static AlgTerm literal(const Integer& n);

  Kind kind() const;
  const std::string& name() const;
  const AlgTerm& lhs() const;  // also the operand of Neg and Conj
  const AlgTerm& rhs() const;

  // Value n when this term is structurally literal(n).
  std::optional<Integer> as_literal() const;

  void collect_vars(std::set<std::string>& out) const;
  std::size_t size() const;
  std::size_t degree() const;  // multiplicative degree, conj counts as degree-preserving

  AlgTerm substitute(const std::string& var, const AlgTerm& value) const;

  friend bool operator==(const AlgTerm& a, const AlgTerm& b);
  friend bool operator<(const AlgTerm& a, const AlgTerm& b) { return a.str() < b.str(); }

  std::string str() const;

  // Address of the shared node; equal for copies of the same subtree.
  const void* identity() const { return node_.get(); }

 private:
  struct Node;
  explicit AlgTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  void print(std::string& out, int context) const;
  std::shared_ptr<const Node> node_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgTerm& t) { return os << t.str(); }

}  // namespace algqe
