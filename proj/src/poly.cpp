#include "algqe/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace algqe {

namespace {

class Interner {
 public:
  Interner() { intern("<unset>"); }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = ids_.emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  const std::string& name(std::uint32_t id) {
    std::shared_lock lock(mu_);
    return names_.at(id);
  }

 private:
  std::shared_mutex mu_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Var::Var(std::string_view name) : id_(interner().intern(name)) {}

const std::string& Var::name() const { return interner().name(id_); }

// --- Monomial ---

Monomial Monomial::of(Var v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.powers_.emplace_back(v.id(), exp);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : powers_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(Var v) const {
  for (const auto& [id, e] : powers_)
    if (id == v.id()) return e;
  return 0;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& p : powers_)
    if (p.first != v.id()) m.powers_.push_back(p);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      m.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      m.powers_.push_back(*j++);
    } else {
      m.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // lex: the exponent of the smallest variable id is most significant
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  for (; i != a.powers_.end() && j != b.powers_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first > j->first;
    if (i->second != j->second) return i->second < j->second;
  }
  return i == a.powers_.end() && j != b.powers_.end();
}

namespace {

std::vector<std::pair<std::string, std::uint32_t>> named_powers(const Monomial& m) {
  std::vector<std::pair<std::string, std::uint32_t>> out;
  out.reserve(m.powers().size());
  for (const auto& [id, e] : m.powers()) out.emplace_back(Var::from_id(id).name(), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool Monomial::name_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto na = named_powers(a);
  const auto nb = named_powers(b);
  auto i = na.begin();
  auto j = nb.begin();
  for (; i != na.end() && j != nb.end(); ++i, ++j) {
    if (i->first != j->first) return i->first > j->first;
    if (i->second != j->second) return i->second < j->second;
  }
  return i == na.end() && j != nb.end();
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [name, e] : named_powers(*this)) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// --- Poly ---

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly::Poly(Var v) { terms_.emplace(Monomial::of(v), Rational(1)); }

Poly::Poly(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Rational Poly::constant_term() const {
  if (auto it = terms_.find(Monomial{}); it != terms_.end()) return it->second;
  return 0;
}

std::uint32_t Poly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::vector<Var> Poly::vars() const {
  std::vector<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m.powers()) out.push_back(Var::from_id(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), VarNameLess{});
  return out;
}

std::vector<Poly> Poly::coeffs_in(Var v) const {
  std::vector<Poly> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) out[m.degree_in(v)].add_term(m.without(v), c);
  return out;
}

Poly Poly::from_coeffs(Var v, const std::vector<Poly>& coeffs) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial vi = Monomial::of(v, static_cast<std::uint32_t>(i));
    for (const auto& [m, c] : coeffs[i].terms_) out.add_term(m * vi, c);
  }
  return out;
}

Poly Poly::derivative(Var v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const auto e = m.degree_in(v);
    if (e == 0) continue;
    out.add_term(m.without(v) * Monomial::of(v, e - 1), c * Rational(static_cast<long>(e)));
  }
  return out;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  const auto cs = coeffs_in(v);
  if (cs.size() == 1) return *this;
  // Horner
  Poly out = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) out = out * value + cs[i];
  return out;
}

Rational Poly::eval(const Point& point) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [id, e] : m.powers()) {
      auto it = point.find(id);
      if (it == point.end())
        throw std::out_of_range("no value for variable " + Var::from_id(id).name());
      t *= it->second.pow(e);
    }
    sum += t;
  }
  return sum;
}

Poly Poly::partial_eval(const Point& point) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Monomial rest;
    for (const auto& [id, e] : m.powers()) {
      if (auto it = point.find(id); it != point.end()) {
        t *= it->second.pow(e);
      } else {
        rest = rest * Monomial::of(Var::from_id(id), e);
      }
    }
    out.add_term(rest, t);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

const Poly::Terms::value_type* Poly::leading_term() const {
  const Terms::value_type* best = nullptr;
  for (const auto& t : terms_)
    if (best == nullptr || Monomial::name_less(best->first, t.first)) best = &t;
  return best;
}

Rational Poly::primitive_scale() const {
  if (terms_.empty()) return 1;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    den_lcm = lcm(den_lcm, c.denominator());
    num_gcd = gcd(num_gcd, c.numerator());
  }
  return Rational(den_lcm, num_gcd);
}

Poly Poly::primitive() const { return *this * primitive_scale(); }

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return Monomial::name_less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational a = c.abs();
    if (t->first.is_one()) {
      os << a;
    } else {
      if (a != Rational(1)) os << a << "*";
      os << t->first.str();
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace algqe
