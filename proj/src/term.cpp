#include "algqe/term.hpp"

#include <stdexcept>

namespace algqe {

struct AlgTerm::Node {
  Kind kind;
  std::string name;
  AlgTerm a;
  AlgTerm b;
};

AlgTerm::AlgTerm() : AlgTerm(zero()) {}

AlgTerm AlgTerm::var(std::string name) {
  return AlgTerm(std::make_shared<Node>(Node{Kind::Var, std::move(name), AlgTerm(nullptr), AlgTerm(nullptr)}));
}

AlgTerm AlgTerm::zero() {
  static const AlgTerm z = [] {
    auto n = std::make_shared<Node>(Node{Kind::Zero, {}, AlgTerm(nullptr), AlgTerm(nullptr)});
    return AlgTerm(std::move(n));
  }();
  return z;
}

AlgTerm AlgTerm::one() {
  static const AlgTerm o = [] {
    auto n = std::make_shared<Node>(Node{Kind::One, {}, AlgTerm(nullptr), AlgTerm(nullptr)});
    return AlgTerm(std::move(n));
  }();
  return o;
}

AlgTerm AlgTerm::neg(AlgTerm t) { return AlgTerm(std::make_shared<Node>(Node{Kind::Neg, {}, std::move(t), AlgTerm(nullptr)})); }
AlgTerm AlgTerm::conj(AlgTerm t) { return AlgTerm(std::make_shared<Node>(Node{Kind::Conj, {}, std::move(t), AlgTerm(nullptr)})); }
AlgTerm AlgTerm::add(AlgTerm a, AlgTerm b) { return AlgTerm(std::make_shared<Node>(Node{Kind::Add, {}, std::move(a), std::move(b)})); }
AlgTerm AlgTerm::sub(AlgTerm a, AlgTerm b) { return AlgTerm(std::make_shared<Node>(Node{Kind::Sub, {}, std::move(a), std::move(b)})); }
AlgTerm AlgTerm::mul(AlgTerm a, AlgTerm b) { return AlgTerm(std::make_shared<Node>(Node{Kind::Mul, {}, std::move(a), std::move(b)})); }

AlgTerm AlgTerm::literal(const Integer& n) {
  if (n < 0) throw std::invalid_argument("literal must be non-negative");
  if (n == 0) return zero();
  if (n <= 16) {
    AlgTerm t = one();
    for (Integer i = 1; i < n; ++i) t = add(t, one());
    return t;
  }
  const Integer q = n / 16;
  const Integer r = n % 16;
  AlgTerm head = mul(literal(16), literal(q));
  return r == 0 ? head : add(head, literal(r));
}

AlgTerm::Kind AlgTerm::kind() const { return node_->kind; }
const std::string& AlgTerm::name() const { return node_->name; }
const AlgTerm& AlgTerm::lhs() const { return node_->a; }
const AlgTerm& AlgTerm::rhs() const { return node_->b; }

namespace {

std::optional<Integer> closed_value(const AlgTerm& t) {
  switch (t.kind()) {
    case AlgTerm::Kind::Zero: return Integer(0);
    case AlgTerm::Kind::One: return Integer(1);
    case AlgTerm::Kind::Add:
    case AlgTerm::Kind::Mul: {
      auto a = closed_value(t.lhs());
      if (!a) return std::nullopt;
      auto b = closed_value(t.rhs());
      if (!b) return std::nullopt;
      return t.kind() == AlgTerm::Kind::Add ? Integer(*a + *b) : Integer(*a * *b);
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<Integer> AlgTerm::as_literal() const {
  const Kind k = kind();
  if (k != Kind::Zero && k != Kind::One && k != Kind::Add && k != Kind::Mul) return std::nullopt;
  auto v = closed_value(*this);
  if (!v || !(literal(*v) == *this)) return std::nullopt;
  return v;
}

void AlgTerm::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Var: out.insert(name()); return;
    case Kind::Zero:
    case Kind::One: return;
    case Kind::Neg:
    case Kind::Conj: lhs().collect_vars(out); return;
    default:
      lhs().collect_vars(out);
      rhs().collect_vars(out);
  }
}

std::size_t AlgTerm::size() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Zero:
    case Kind::One: return 1;
    case Kind::Neg:
    case Kind::Conj: return 1 + lhs().size();
    default: return 1 + lhs().size() + rhs().size();
  }
}

std::size_t AlgTerm::degree() const {
  switch (kind()) {
    case Kind::Var: return 1;
    case Kind::Zero:
    case Kind::One: return 0;
    case Kind::Neg:
    case Kind::Conj: return lhs().degree();
    case Kind::Mul: return lhs().degree() + rhs().degree();
    default: return std::max(lhs().degree(), rhs().degree());
  }
}

AlgTerm AlgTerm::substitute(const std::string& var, const AlgTerm& value) const {
  switch (kind()) {
    case Kind::Var: return name() == var ? value : *this;
    case Kind::Zero:
    case Kind::One: return *this;
    case Kind::Neg: return neg(lhs().substitute(var, value));
    case Kind::Conj: return conj(lhs().substitute(var, value));
    case Kind::Add: return add(lhs().substitute(var, value), rhs().substitute(var, value));
    case Kind::Sub: return sub(lhs().substitute(var, value), rhs().substitute(var, value));
    case Kind::Mul: return mul(lhs().substitute(var, value), rhs().substitute(var, value));
  }
  return *this;
}

bool operator==(const AlgTerm& a, const AlgTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case AlgTerm::Kind::Var: return a.name() == b.name();
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::One: return true;
    case AlgTerm::Kind::Neg:
    case AlgTerm::Kind::Conj: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// Precedence contexts: 1 additive operand, 2 right of +/- or left of *,
// 3 right of * and operand of unary minus.
void AlgTerm::print(std::string& out, int context) const {
  if (auto lit = as_literal()) {
    out += lit->get_str();
    return;
  }
  int own = 0;
  switch (kind()) {
    case Kind::Var: out += name(); return;
    case Kind::Zero: out += "0"; return;
    case Kind::One: out += "1"; return;
    case Kind::Conj:
      out += "conj(";
      lhs().print(out, 0);
      out += ")";
      return;
    case Kind::Neg: own = 3; break;
    case Kind::Add:
    case Kind::Sub: own = 1; break;
    case Kind::Mul: own = 2; break;
  }
  const bool parens = own < context;
  if (parens) out += "(";
  switch (kind()) {
    case Kind::Neg:
      out += "-";
      lhs().print(out, 3);
      break;
    case Kind::Add:
    case Kind::Sub:
      lhs().print(out, 1);
      out += kind() == Kind::Add ? " + " : " - ";
      rhs().print(out, 2);
      break;
    case Kind::Mul:
      lhs().print(out, 2);
      out += "*";
      rhs().print(out, 3);
      break;
    default: break;
  }
  if (parens) out += ")";
}

std::string AlgTerm::str() const {
  std::string out;
  print(out, 0);
  return out;
}

}  // namespace algqe
