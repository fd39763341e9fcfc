#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algqe/rational.hpp"

namespace algqe {

enum class Algebra { Quaternion, Octonion };

constexpr int dimension(Algebra a) { return a == Algebra::Quaternion ? 4 : 8; }
std::string_view to_string(Algebra a);
Algebra parse_algebra(std::string_view name);

// Quaternion a + b i + c j + d k, basis order (1, i, j, k).
class Quaternion {
 public:
  static constexpr int kDim = 4;

  Quaternion() = default;
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  explicit Quaternion(std::span<const Rational> coords);

  static Quaternion scalar(Rational a) { return {std::move(a), 0, 0, 0}; }
  static Quaternion one() { return scalar(1); }
  static Quaternion basis(int index);

  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  std::span<const Rational, 4> coords() const { return c_; }

  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  const Rational& re() const { return c_[0]; }
  std::vector<Rational> im() const { return {c_[1], c_[2], c_[3]}; }
  Rational norm() const;
  Quaternion inverse() const;
  bool is_zero() const;
  bool is_central() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

// Octonion h0 + h1 l built by Cayley-Dickson doubling of the quaternions.
// Basis order (1, i, j, k, l, il, jl, kl).
class Octonion {
 public:
  static constexpr int kDim = 8;

  Octonion() = default;
  Octonion(Quaternion h0, Quaternion h1) : h0_(std::move(h0)), h1_(std::move(h1)) {}
  explicit Octonion(std::span<const Rational> coords);

  static Octonion scalar(Rational a) { return {Quaternion::scalar(std::move(a)), {}}; }
  static Octonion one() { return scalar(1); }
  static Octonion basis(int index);

  const Quaternion& h0() const { return h0_; }
  const Quaternion& h1() const { return h1_; }
  const Rational& operator[](int i) const { return i < 4 ? h0_[i] : h1_[i - 4]; }
  Rational& operator[](int i) { return i < 4 ? h0_[i] : h1_[i - 4]; }
  std::vector<Rational> coords() const;

  Octonion conj() const { return {h0_.conj(), -h1_}; }
  const Rational& re() const { return h0_.re(); }
  // (Im(h0), Re(h1), Im(h1))
  std::vector<Rational> im() const;
  Rational norm() const { return h0_.norm() + h1_.norm(); }
  Octonion inverse() const;
  bool is_zero() const { return h0_.is_zero() && h1_.is_zero(); }
  bool is_central() const { return h0_.is_central() && h1_.is_zero(); }

  Octonion operator-() const { return {-h0_, -h1_}; }
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  // (a + b l)(c + d l) = (ac - conj(d) b) + (da + b conj(c)) l
  friend Octonion operator*(const Octonion& x, const Octonion& y);
  friend bool operator==(const Octonion&, const Octonion&) = default;

  std::string str() const;

 private:
  Quaternion h0_, h1_;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Octonion& x);

// Free-function spellings used by generic code.
template <class E> E conj(const E& x) { return x.conj(); }
template <class E> Rational norm(const E& x) { return x.norm(); }
template <class E> Rational re_part(const E& x) { return x.re(); }
template <class E> std::vector<Rational> im_part(const E& x) { return x.im(); }

// e_i e_j = sign * e_index for basis elements of either algebra.
struct BasisProduct {
  int index;
  int sign;
};

// Multiplication table derived from the algebra's product on basis elements.
class StructureTable {
 public:
  explicit StructureTable(Algebra a);
  Algebra algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const BasisProduct& operator()(int i, int j) const { return table_[i * dim_ + j]; }

 private:
  Algebra algebra_;
  int dim_;
  std::vector<BasisProduct> table_;
};

const StructureTable& structure_table(Algebra a);

// Name of a basis element: 1, i, j, k, l, il, jl, kl.
std::string_view basis_name(int index);

}  // namespace algqe
