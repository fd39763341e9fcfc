#include "algqe/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace algqe {

std::string_view to_string(Algebra a) { return a == Algebra::Quaternion ? "quat" : "oct"; }

Algebra parse_algebra(std::string_view name) {
  if (name == "quat" || name == "H") return Algebra::Quaternion;
  if (name == "oct" || name == "O") return Algebra::Octonion;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "' (expected quat or oct)");
}

std::string_view basis_name(int index) {
  static constexpr std::array<std::string_view, 8> kNames{"1", "i", "j", "k", "l", "il", "jl", "kl"};
  return kNames.at(index);
}

namespace {

template <class E>
std::string format_element(const E& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < E::kDim; ++i) {
    const Rational& c = x[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.abs();
    if (i == 0) {
      os << a;
    } else {
      if (a != Rational(1)) os << a << "*";
      os << basis_name(i);
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

// --- Quaternion ---

Quaternion::Quaternion(std::span<const Rational> coords) {
  if (coords.size() != 4) throw std::invalid_argument("quaternion needs 4 coordinates");
  for (int i = 0; i < 4; ++i) c_[i] = coords[i];
}

Quaternion Quaternion::basis(int index) {
  Quaternion q;
  q.c_.at(index) = 1;
  return q;
}

Rational Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion Quaternion::inverse() const { return conj() * norm().inverse(); }

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  const auto& [a1, b1, c1, d1] = p.c_;
  const auto& [a2, b2, c2, d2] = q.c_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

std::string Quaternion::str() const { return format_element(*this); }

// --- Octonion ---

Octonion::Octonion(std::span<const Rational> coords) {
  if (coords.size() != 8) throw std::invalid_argument("octonion needs 8 coordinates");
  h0_ = Quaternion(coords.subspan(0, 4));
  h1_ = Quaternion(coords.subspan(4, 4));
}

Octonion Octonion::basis(int index) {
  if (index < 0 || index >= 8) throw std::out_of_range("octonion basis index");
  return index < 4 ? Octonion{Quaternion::basis(index), {}} : Octonion{{}, Quaternion::basis(index - 4)};
}

std::vector<Rational> Octonion::coords() const {
  std::vector<Rational> out;
  out.reserve(8);
  for (int i = 0; i < 8; ++i) out.push_back((*this)[i]);
  return out;
}

std::vector<Rational> Octonion::im() const {
  std::vector<Rational> out = h0_.im();
  out.push_back(h1_.re());
  for (const auto& c : h1_.im()) out.push_back(c);
  return out;
}

Octonion Octonion::inverse() const { return conj() * norm().inverse(); }

Octonion& Octonion::operator+=(const Octonion& o) {
  h0_ += o.h0_;
  h1_ += o.h1_;
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  h0_ -= o.h0_;
  h1_ -= o.h1_;
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  h0_ *= s;
  h1_ *= s;
  return *this;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  const Quaternion& a = x.h0_;
  const Quaternion& b = x.h1_;
  const Quaternion& c = y.h0_;
  const Quaternion& d = y.h1_;
  return {a * c - d.conj() * b, d * a + b * c.conj()};
}

std::string Octonion::str() const { return format_element(*this); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }
std::ostream& operator<<(std::ostream& os, const Octonion& x) { return os << x.str(); }

// --- structure constants ---

namespace {

template <class E>
std::vector<BasisProduct> build_table() {
  std::vector<BasisProduct> table;
  table.reserve(E::kDim * E::kDim);
  for (int i = 0; i < E::kDim; ++i) {
    for (int j = 0; j < E::kDim; ++j) {
      const E p = E::basis(i) * E::basis(j);
      BasisProduct entry{-1, 0};
      for (int k = 0; k < E::kDim; ++k) {
        if (p[k].is_zero()) continue;
        if (entry.index >= 0 || (p[k] != Rational(1) && p[k] != Rational(-1)))
          throw std::logic_error("basis product is not a signed basis element");
        entry = {k, p[k].sign()};
      }
      table.push_back(entry);
    }
  }
  return table;
}

}  // namespace

StructureTable::StructureTable(Algebra a) : algebra_(a), dim_(dimension(a)) {
  table_ = a == Algebra::Quaternion ? build_table<Quaternion>() : build_table<Octonion>();
}

const StructureTable& structure_table(Algebra a) {
  static const StructureTable quat(Algebra::Quaternion);
  static const StructureTable oct(Algebra::Octonion);
  return a == Algebra::Quaternion ? quat : oct;
}

}  // namespace algqe
