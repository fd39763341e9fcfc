#include "algqe/rational.hpp"

#include <stdexcept>

namespace algqe {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return from(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return from(1 / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

bool Rational::perfect_square(Rational* root) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(q_.get_num_mpz_t()) || !mpz_perfect_square_p(q_.get_den_mpz_t()))
    return false;
  if (root != nullptr) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
    *root = Rational(n, d);
  }
  return true;
}

std::size_t Rational::hash() const {
  const std::size_t hn = std::hash<std::string>{}(q_.get_num().get_str(16));
  const std::size_t hd = mpz_get_ui(q_.get_den_mpz_t());
  return hn ^ (hd + 0x9e3779b97f4a7c15ULL + (hn << 6) + (hn >> 2));
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace algqe
