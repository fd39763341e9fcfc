#include <doctest.h>

#include <algorithm>

#include "algqe/invariants.hpp"
#include "algqe/verify.hpp"

using namespace algqe;

namespace {

template <class E>
std::vector<Rational> values(const InvariantScheme& s, std::vector<E> tuple) {
  return eval_scheme<E>(s, tuple);
}

Rational entry(const InvariantScheme& s, const std::vector<Rational>& v, const std::string& label) {
  for (std::size_t i = 0; i < s.entries.size(); ++i)
    if (s.entries[i].label == label) return v[i];
  FAIL("no entry " << label);
  return {};
}

}  // namespace

TEST_CASE("word counts follow m + m^2 + 2m^3 + 5m^4") {
  for (int m = 1; m <= 3; ++m) {
    const std::size_t expected = static_cast<std::size_t>(m + m * m + 2 * m * m * m + 5 * m * m * m * m);
    CHECK(enum_words(m).size() == expected);
    CHECK(word_count(m) == expected);
  }
  CHECK(word_count(1) == 9);
  CHECK(word_count(2) == 102);
  CHECK(word_count(3) == 471);
  CHECK(word_count(1, 5) == 9 + 14);
}

TEST_CASE("words are distinct and have the advertised lengths") {
  const auto ws = enum_words(2);
  std::vector<std::string> names;
  for (const auto& w : ws) {
    CHECK(w.length() >= 1);
    CHECK(w.length() <= 4);
    names.push_back(w.str());
  }
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("quaternion scheme sizes") {
  for (int m = 1; m <= 3; ++m) CHECK(quat_scheme(m).size() == static_cast<std::size_t>(m + m * m + m * m * m));
  CHECK(oct_scheme(2).size() == 102);
}

TEST_CASE("quaternion invariant values on the basis") {
  const InvariantScheme s = quat_scheme(3);
  const Quaternion i = Quaternion::basis(1), j = Quaternion::basis(2), k = Quaternion::basis(3);
  const auto v = values<Quaternion>(s, {i, j, k});
  CHECK(entry(s, v, "L1[1]") == 0);
  CHECK(entry(s, v, "L2[1,1]") == -8);
  CHECK(entry(s, v, "L2[1,2]") == 0);
  CHECK(entry(s, v, "L3[1,2,3]") == -16);
  CHECK(entry(s, v, "L3[2,1,3]") == 16);

  const auto w = values<Quaternion>(s, {i, j, -k});
  CHECK(entry(s, w, "L3[1,2,3]") == 16);
  for (std::size_t n = 0; n < s.size(); ++n)
    if (s.entries[n].label.rfind("L3", 0) != 0) CHECK(v[n] == w[n]);

  const auto scalars = values<Quaternion>(s, {Quaternion::scalar(3), Quaternion::one(), Quaternion{}});
  CHECK(entry(s, scalars, "L1[1]") == 6);
  CHECK(entry(s, scalars, "L2[1,1]") == 0);
}

TEST_CASE("octonion invariant values") {
  const InvariantScheme s = oct_scheme(1);
  const auto l = values<Octonion>(s, {Octonion::basis(4)});
  CHECK(entry(s, l, "W1") == 0);
  CHECK(entry(s, l, "W(1.1)") == -2);
  const auto two = values<Octonion>(s, {Octonion::scalar(2)});
  CHECK(entry(s, two, "W(1.1)") == 8);
}

TEST_CASE("invariants are central and automorphism invariant") {
  Rng rng(41);
  for (Algebra a : {Algebra::Quaternion, Algebra::Octonion}) {
    AutoSampler sampler(a, 42);
    for (int m = 1; m <= 2; ++m) {
      const InvariantScheme s = make_scheme(a, default_tuple_vars(m));
      for (int n = 0; n < 25; ++n) {
        const LinearMap g = sampler.next();
        if (a == Algebra::Quaternion) {
          std::vector<Quaternion> t, gt;
          for (int i = 0; i < m; ++i) {
            t.push_back(random_element<Quaternion>(rng, 5));
            gt.push_back(g.apply(t.back()));
          }
          CHECK(values(s, t) == values(s, gt));
        } else {
          std::vector<Octonion> t, gt;
          for (int i = 0; i < m; ++i) {
            t.push_back(random_element<Octonion>(rng, 5));
            gt.push_back(g.apply(t.back()));
          }
          CHECK(values(s, t) == values(s, gt));
        }
      }
    }
  }
}

TEST_CASE("arity mismatch is reported") {
  const InvariantScheme s = quat_scheme(2);
  CHECK_THROWS_AS(values<Quaternion>(s, {Quaternion::one()}), ArityMismatch);
}

TEST_CASE("dedup drops repeated polynomials") {
  const InvariantScheme raw = oct_scheme(1);
  const InvariantScheme d = oct_scheme(1, true);
  CHECK(d.size() < raw.size());
  CHECK(d.size() == 4);  // one polynomial per degree 1..4 for a single letter
}
