#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algqe/rational.hpp"

namespace algqe {

// Interned real variable. Ids are process-wide and assigned on first use;
// ordering by id is an internal storage order only, every printed or
// canonical form orders variables by name.
class Var {
 public:
  Var() = default;
  explicit Var(std::string_view name);
  static Var from_id(std::uint32_t id) {
    Var v;
    v.id_ = id;
    return v;
  }

  std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_ = 0;
};

// Strict weak order on variables by name.
struct VarNameLess {
  bool operator()(Var a, Var b) const { return a != b && a.name() < b.name(); }
};

class Monomial {
 public:
  using Power = std::pair<std::uint32_t, std::uint32_t>;  // (var id, exponent)
  using Storage = boost::container::small_vector<Power, 4>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);

  bool is_one() const { return powers_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree_in(Var v) const;
  const Storage& powers() const { return powers_; }

  Monomial without(Var v) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }
  // graded lex over variable ids
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::string str() const;
  // graded lex over variable names
  static bool name_less(const Monomial& a, const Monomial& b);

 private:
  Storage powers_;
};

using Point = std::unordered_map<std::uint32_t, Rational>;

// Sparse multivariate polynomial with rational coefficients; zero
// coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(Rational c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(Var v);
  Poly(const Monomial& m, Rational c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;

  std::uint32_t degree() const;
  std::uint32_t degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> vars() const;  // sorted by name

  // p = sum_i coeffs[i] * v^i
  std::vector<Poly> coeffs_in(Var v) const;
  static Poly from_coeffs(Var v, const std::vector<Poly>& coeffs);

  Poly derivative(Var v) const;
  Poly substitute(Var v, const Poly& value) const;
  Rational eval(const Point& point) const;
  Poly partial_eval(const Point& point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  // Leading term under graded lex over variable names.
  const Terms::value_type* leading_term() const;
  // Positive rational c such that c * p has coprime integer coefficients.
  Rational primitive_scale() const;
  // c * p scaled by primitive_scale().
  Poly primitive() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace algqe
