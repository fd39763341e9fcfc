#include <doctest.h>

#include "algqe/algebra.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

namespace {

Quaternion q(long a, long b, long c, long d) { return {a, b, c, d}; }

template <class E>
void check_identities(int pairs, std::uint64_t seed) {
  Rng rng(seed);
  for (int n = 0; n < pairs; ++n) {
    const E x = random_element<E>(rng, 7);
    const E y = random_element<E>(rng, 7);
    const E xy = x * y;
    CHECK(xy.norm() == x.norm() * y.norm());
    CHECK(xy.conj() == y.conj() * x.conj());
    CHECK(x * x.conj() == E::scalar(x.norm()));
    CHECK(x.conj() * x == E::scalar(x.norm()));
    // Alternativity, flexibility.
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
    CHECK((x * y) * x == x * (y * x));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == E::one());
      CHECK(x.inverse() * (x * y) == y);
    }
  }
}

}  // namespace

TEST_CASE("quaternion units multiply as i^2 = j^2 = k^2 = ijk = -1") {
  const Quaternion one = Quaternion::one(), i = Quaternion::basis(1), j = Quaternion::basis(2), k = Quaternion::basis(3);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK((i * j) * k == -one);
}

TEST_CASE("quaternion worked products") {
  CHECK(q(1, 1, 0, 0) * q(1, 0, 1, 0) == q(1, 1, 1, 1));
  CHECK(q(1, 2, 3, 4).norm() == Rational(30));
  CHECK(q(1, 2, 3, 4).conj() == q(1, -2, -3, -4));
  CHECK(q(1, 1, 0, 0).inverse() == Quaternion(Rational(1, 2), Rational(-1, 2), 0, 0));
  CHECK(q(0, 0, 0, 0).is_central());
  CHECK_FALSE(q(3, 0, 0, 1).is_central());
  CHECK_THROWS(q(0, 0, 0, 0).inverse());
}

TEST_CASE("octonion units follow the doubling table") {
  const auto e = [](int n) { return Octonion::basis(n); };
  const Octonion one = Octonion::one();
  for (int n = 1; n < 8; ++n) CHECK(e(n) * e(n) == -one);
  // basis order 1, i, j, k, l, il, jl, kl
  CHECK(e(1) * e(4) == e(5));
  CHECK(e(2) * e(4) == e(6));
  CHECK(e(3) * e(4) == e(7));
  CHECK(e(5) * e(6) == -e(3));  // (il)(jl) = -k
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) CHECK(e(a) * e(b) == -(e(b) * e(a)));
}

TEST_CASE("octonions are not associative") {
  const auto e = [](int n) { return Octonion::basis(n); };
  const Octonion lhs = (e(1) * e(2)) * e(4);
  const Octonion rhs = e(1) * (e(2) * e(4));
  CHECK(lhs == e(7));
  CHECK(rhs == -e(7));
  CHECK(lhs != rhs);
}

TEST_CASE("quaternions embed in the octonions as the first half") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Quaternion a = random_element<Quaternion>(rng, 5), b = random_element<Quaternion>(rng, 5);
    CHECK(Octonion(a, {}) * Octonion(b, {}) == Octonion(a * b, {}));
  }
}

TEST_CASE("norm, conjugation and alternativity identities hold on random pairs") {
  check_identities<Quaternion>(1000, 1);
  check_identities<Octonion>(1000, 2);
}

TEST_CASE("quaternions associate") {
  Rng rng(5);
  for (int n = 0; n < 300; ++n) {
    const auto a = random_element<Quaternion>(rng, 5), b = random_element<Quaternion>(rng, 5),
               c = random_element<Quaternion>(rng, 5);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("algebra names") {
  CHECK(parse_algebra("quat") == Algebra::Quaternion);
  CHECK(parse_algebra("oct") == Algebra::Octonion);
  CHECK(to_string(Algebra::Octonion) == "oct");
  CHECK_THROWS(parse_algebra("sedenion"));
  CHECK(dimension(Algebra::Quaternion) == 4);
  CHECK(dimension(Algebra::Octonion) == 8);
}
