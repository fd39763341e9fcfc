#pragma once

// Exact univariate real algebra used as an independent oracle for the
// elimination backend: dense rational polynomials, Sturm sequences and
// root isolation by bisection. Shares nothing with the virtual substitution
// code beyond the Rational type.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "algqe/rational.hpp"

namespace oracle {

using algqe::Rational;

// Dense coefficients, index = power; no trailing zeros (zero poly is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int sign_at(const Rational& x) const { return eval(x).sign(); }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }

  // a = q b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
      const Rational f = rem[static_cast<std::size_t>(k)] / b.lead();
      q[static_cast<std::size_t>(k - db)] = f;
      if (f.is_zero()) continue;
      for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> m = c_;
    const Rational l = lead();
    for (auto& x : m) x = x / l;
    return UPoly(std::move(m));
  }

  // Same roots, each simple.
  UPoly squarefree() const {
    if (degree() < 1) return *this;
    return divmod(*this, gcd(*this, derivative())).first.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Sturm chain of a squarefree polynomial.
class Sturm {
 public:
  explicit Sturm(const UPoly& f) {
    chain_.push_back(f);
    if (f.degree() < 1) return;
    chain_.push_back(f.derivative());
    while (chain_.back().degree() > 0) {
      UPoly r = UPoly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      std::vector<Rational> neg;
      for (const auto& x : r.coeffs()) neg.push_back(-x);
      chain_.emplace_back(std::move(neg));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = p.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (a, b]; a < b.
  int roots_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> chain_;
};

// A real root: either exact, or the unique root in the open interval (lo, hi)
// of the isolated polynomial, whose endpoints are not roots.
struct Root {
  std::optional<Rational> exact;
  Rational lo, hi;

  Rational left() const { return exact ? *exact : lo; }
  Rational right() const { return exact ? *exact : hi; }
};

inline Rational cauchy_bound(const UPoly& f) {
  Rational m;
  for (int i = 0; i < f.degree(); ++i) {
    const Rational r = (f.coeffs()[static_cast<std::size_t>(i)] / f.lead()).abs();
    if (m < r) m = r;
  }
  return m + Rational(1);
}

// Sorted, pairwise disjoint isolating data for the real roots of f.
inline std::vector<Root> isolate(const UPoly& f) {
  std::vector<Root> out;
  const UPoly s = f.squarefree();
  if (s.degree() < 1) return out;
  const Sturm st(s);
  const Rational bound = cauchy_bound(s);
  // Work list of half-open intervals (lo, hi] with lo, hi not roots.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int n = st.roots_in(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({std::nullopt, lo, hi});
      continue;
    }
    const Rational mid = (lo + hi) / Rational(2);
    if (s.sign_at(mid) == 0) {
      out.push_back({mid, mid, mid});
      // Shrink around mid until neither side touches a root at its end.
      Rational eps = (hi - lo) / Rational(4);
      while (s.sign_at(mid - eps) == 0 || s.sign_at(mid + eps) == 0 || st.roots_in(mid - eps, mid + eps) != 1)
        eps = eps / Rational(2);
      work.emplace_back(lo, mid - eps);
      work.emplace_back(mid + eps, hi);
    } else {
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.left() < b.left(); });
  return out;
}

}  // namespace oracle
