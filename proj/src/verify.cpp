#include "algqe/verify.hpp"

#include <algorithm>
#include <set>

#include "algqe/normal_forms.hpp"

namespace algqe {

std::uint64_t random_below(Rng& rng, std::uint64_t n) { return rng() % n; }

Rational random_rational(Rng& rng, int bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const long p = static_cast<long>(random_below(rng, 2 * b + 1)) - bound;
  const long q = static_cast<long>(random_below(rng, b)) + 1;
  return Rational(p, q);
}

LinearMap::LinearMap(Algebra a) : algebra_(a), dim_(dimension(a)), m_(static_cast<std::size_t>(dim_ * dim_)) {
  for (int i = 0; i < dim_; ++i) at(i, i) = 1;
}

LinearMap LinearMap::after(const LinearMap& first) const {
  if (first.algebra_ != algebra_) throw std::invalid_argument("LinearMap::after: algebra mismatch");
  LinearMap out(algebra_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      Rational s;
      for (int k = 0; k < dim_; ++k)
        if (!at(r, k).is_zero() && !first.at(k, c).is_zero()) s += at(r, k) * first.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

nlohmann::json LinearMap::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < dim_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < dim_; ++c) row.push_back(at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

namespace {

template <class E>
bool is_automorphism_of(const LinearMap& g) {
  if (g.apply(E::one()) != E::one()) return false;
  std::vector<E> images;
  for (int i = 0; i < E::kDim; ++i) images.push_back(g.apply(E::basis(i)));
  for (int i = 0; i < E::kDim; ++i)
    for (int j = 0; j < E::kDim; ++j)
      if (g.apply(E::basis(i) * E::basis(j)) != images[i] * images[j]) return false;
  return true;
}

// Signed unit as (index, sign); products through the structure table.
struct Unit {
  int index;
  int sign;
};

Unit times(const StructureTable& t, Unit a, Unit b) {
  const BasisProduct& p = t(a.index, b.index);
  return {p.index, p.sign * a.sign * b.sign};
}

LinearMap from_units(const std::array<Unit, 8>& images) {
  LinearMap g(Algebra::Octonion);
  for (int c = 0; c < 8; ++c) {
    for (int r = 0; r < 8; ++r) g.at(r, c) = 0;
    g.at(images[c].index, c) = images[c].sign;
  }
  return g;
}

std::vector<LinearMap> search_table_symmetries() {
  const StructureTable& t = structure_table(Algebra::Octonion);
  std::vector<LinearMap> out;
  // An automorphism permuting signed units is fixed by the images of i, j
  // and l; k, il, jl, kl follow from the products.
  for (int u = 1; u < 8; ++u)
    for (int su : {1, -1})
      for (int v = 1; v < 8; ++v)
        for (int sv : {1, -1}) {
          if (v == u) continue;
          const Unit gi{u, su}, gj{v, sv};
          const Unit gk = times(t, gi, gj);
          for (int w = 1; w < 8; ++w)
            for (int sw : {1, -1}) {
              if (w == u || w == v || w == gk.index) continue;
              const Unit gl{w, sw};
              const std::array<Unit, 8> images{Unit{0, 1}, gi, gj, gk, gl, times(t, gi, gl), times(t, gj, gl),
                                               times(t, gk, gl)};
              std::set<int> seen;
              for (const auto& im : images) seen.insert(im.index);
              if (seen.size() != 8) continue;
              LinearMap g = from_units(images);
              if (is_automorphism(g)) out.push_back(std::move(g));
            }
        }
  return out;
}

template <class E>
PrintedAssignment print(const Assignment<E>& env) {
  PrintedAssignment out;
  for (const auto& [k, v] : env) out.emplace(k, v.str());
  return out;
}

// Leading block of like quantifiers; the rest must be quantifier free.
struct Shape {
  bool quantified = false;
  bool exists = true;
  std::vector<std::string> bound;
  AlgFormula matrix;
};

Shape shape_of(const AlgFormula& f) {
  Shape s;
  AlgFormula cur = f;
  while (cur.is_quantifier()) {
    const bool ex = cur.kind() == AlgFormula::Kind::Exists;
    if (s.quantified && ex != s.exists) throw UnsupportedShape("check_equivalence: quantifier alternation");
    s.quantified = true;
    s.exists = ex;
    if (std::find(s.bound.begin(), s.bound.end(), cur.var()) == s.bound.end()) s.bound.push_back(cur.var());
    cur = cur.body();
  }
  if (!cur.quantifier_free()) throw UnsupportedShape("check_equivalence: quantifier below the prefix");
  s.matrix = cur;
  return s;
}

template <class E>
void add_unique(std::vector<E>& pool, const E& x) {
  if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
}

// Candidates built from the structured values and the assigned ones.
template <class E>
std::vector<E> witness_pool(const Assignment<E>& env) {
  std::vector<E> pool = structured_elements<E>();
  std::vector<E> values;
  for (const auto& [k, a] : env) values.push_back(a);
  const Rational half(1, 2);
  for (const E& a : values) {
    const E c = a.conj();
    for (const E& x : {a, c, -a, -c, a * half, c * half, a - c, (a - c) * half, a + c, (a + c) * half})
      add_unique(pool, x);
    if (!a.is_zero()) {
      add_unique(pool, a.inverse());
      add_unique(pool, -a.inverse());
    }
  }
  for (const E& a : values)
    for (const E& b : values) {
      add_unique(pool, a * b);
      add_unique(pool, a - b);
      add_unique(pool, a + b);
      if (!b.is_zero()) add_unique(pool, a * b.inverse());
    }
  return pool;
}

// First assignment values: every variable equal to one structured element,
// then random values with some structured ones mixed in.
template <class E>
Assignment<E> sample_assignment(std::size_t s, const std::vector<std::string>& vars, Rng& rng, int bound) {
  static const std::vector<E> structured = structured_elements<E>();
  Assignment<E> env;
  for (const auto& v : vars) {
    if (s < structured.size()) env[v] = structured[s];
    else if (random_below(rng, 8) == 0) env[v] = structured[random_below(rng, structured.size())];
    else env[v] = random_element<E>(rng, bound);
  }
  return env;
}

template <class E>
EquivalenceReport check_typed(Algebra a, const AlgFormula& original, const AlgFormula& eliminated,
                              const CheckOptions& opts) {
  if (!eliminated.quantifier_free()) throw UnsupportedShape("check_equivalence: eliminated formula has quantifiers");
  const Shape shape = shape_of(original);
  std::vector<std::string> vars = free_vars(original);
  for (const auto& v : free_vars(eliminated))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);

  EquivalenceReport rep;
  rep.algebra = a;
  rep.seed = opts.seed;
  rep.bound = opts.bound;
  rep.witness_bound = opts.witness_bound;
  Rng rng(opts.seed);

  for (std::size_t s = 0; s < opts.samples; ++s) {
    Assignment<E> env = sample_assignment<E>(s, vars, rng, opts.bound);
    const bool elim = eval_formula(eliminated, env);
    ++rep.samples;
    std::optional<bool> orig;
    if (!shape.quantified) {
      orig = eval_formula(shape.matrix, env);
    } else {
      // Search for a witness (exists) or a counterexample (forall).
      const std::vector<E> pool = witness_pool(env);
      const std::size_t k = shape.bound.size();
      const std::size_t random_tail = opts.witness_bound / 4;
      const std::size_t structured_budget = opts.witness_bound - random_tail;
      std::vector<std::size_t> idx(k, 0);
      Assignment<E> ext = env;
      bool found = false;
      auto probe = [&] {
        const bool m = eval_formula(shape.matrix, ext);
        return shape.exists ? m : !m;
      };
      for (std::size_t tried = 0; tried < structured_budget && !found; ++tried) {
        for (std::size_t b = 0; b < k; ++b) ext[shape.bound[b]] = pool[idx[b]];
        found = probe();
        std::size_t b = 0;
        while (b < k && ++idx[b] == pool.size()) idx[b++] = 0;
        if (b == k) break;
      }
      for (std::size_t tried = 0; tried < random_tail && !found; ++tried) {
        for (const auto& v : shape.bound) ext[v] = random_element<E>(rng, opts.bound);
        found = probe();
      }
      if (found) orig = shape.exists;
      else if (elim != shape.exists) {
        ++rep.agreements;  // no witness and the eliminated formula concurs
        continue;
      }
    }
    if (!orig) {
      ++rep.inconclusive;
    } else if (*orig == elim) {
      ++rep.agreements;
    } else {
      if (++rep.disagreement_count <= EquivalenceReport::kKeptCounterexamples)
        rep.disagreements.push_back({print(env), *orig, elim});
    }
  }
  return rep;
}

template <class E>
OrbitReport orbit_typed(Algebra a, const AlgFormula& phi, std::size_t n, std::uint64_t seed, int bound) {
  if (!phi.quantifier_free()) throw UnsupportedShape("check_orbit_invariance: formula has quantifiers");
  OrbitReport rep;
  rep.algebra = a;
  rep.seed = seed;
  rep.bound = bound;
  AutoSampler sampler(a, seed, bound);
  const std::vector<std::string> vars = free_vars(phi);
  for (std::size_t s = 0; s < n; ++s) {
    Assignment<E> env = sample_assignment<E>(s, vars, sampler.rng(), bound);
    const LinearMap g = sampler.next();
    Assignment<E> moved;
    for (const auto& [k, v] : env) moved[k] = g.apply(v);
    const bool before = eval_formula(phi, env);
    const bool after = eval_formula(phi, moved);
    ++rep.samples;
    if (before != after) rep.violations.push_back({print(env), g.to_json(), before, after});
  }
  return rep;
}

nlohmann::json assignment_json(const PrintedAssignment& a) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : a) out[k] = v;
  return out;
}

}  // namespace

bool is_automorphism(const LinearMap& g) {
  return g.algebra() == Algebra::Quaternion ? is_automorphism_of<Quaternion>(g) : is_automorphism_of<Octonion>(g);
}

LinearMap conjugation_map(const Quaternion& q) {
  if (q.is_zero()) throw std::invalid_argument("conjugation_map: q = 0");
  const Quaternion inv = q.inverse();
  LinearMap g(Algebra::Quaternion);
  for (int c = 0; c < 4; ++c) {
    const Quaternion image = q * Quaternion::basis(c) * inv;
    for (int r = 0; r < 4; ++r) g.at(r, c) = image[r];
  }
  return g;
}

LinearMap octonion_lift(const LinearMap& phi) {
  if (phi.algebra() != Algebra::Quaternion) throw std::invalid_argument("octonion_lift: expects a quaternion map");
  LinearMap g(Algebra::Octonion);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      g.at(r, c) = phi.at(r, c);
      g.at(r + 4, c + 4) = phi.at(r, c);
    }
  return g;
}

const std::vector<LinearMap>& octonion_table_symmetries() {
  static const std::vector<LinearMap> all = search_table_symmetries();
  return all;
}

std::string automorphism_family(Algebra a) {
  return a == Algebra::Quaternion ? "inner conjugations v -> q v q^-1, q rational"
                                  : "subgroup generated by quaternion lifts and signed table symmetries";
}

AutoSampler::AutoSampler(Algebra a, std::uint64_t seed, int bound)
    : algebra_(a), seed_(seed), bound_(bound), rng_(seed ^ 0x9e3779b97f4a7c15ULL) {}

Quaternion AutoSampler::nonzero_quaternion() {
  for (;;) {
    Quaternion q = random_element<Quaternion>(rng_, bound_);
    if (!q.is_zero()) return q;
  }
}

LinearMap AutoSampler::next() {
  LinearMap g(algebra_);
  if (algebra_ == Algebra::Quaternion) {
    g = conjugation_map(nonzero_quaternion());
  } else {
    const auto& sym = octonion_table_symmetries();
    for (int round = 0; round < 2; ++round) {
      g = octonion_lift(conjugation_map(nonzero_quaternion())).after(g);
      g = sym[random_below(rng_, sym.size())].after(g);
    }
  }
  if (!is_automorphism(g)) throw std::logic_error("AutoSampler: produced map is not an automorphism");
  return g;
}

nlohmann::json EquivalenceReport::to_json() const {
  nlohmann::json dis = nlohmann::json::array();
  for (const auto& d : disagreements)
    dis.push_back({{"assignment", assignment_json(d.assignment)}, {"original", d.original}, {"eliminated", d.eliminated}});
  return {
      {"kind", "equivalence"},
      {"algebra", std::string(to_string(algebra))},
      {"samples", samples},
      {"agreements", agreements},
      {"disagreements", dis},
      {"disagreement_count", disagreement_count},
      {"inconclusive", inconclusive},
      {"seed", seed},
      {"bound", bound},
      {"witness_bound", witness_bound},
  };
}

nlohmann::json OrbitReport::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations)
    vs.push_back({{"assignment", assignment_json(v.assignment)}, {"map", v.map}, {"before", v.before}, {"after", v.after}});
  return {
      {"kind", "orbit"},
      {"algebra", std::string(to_string(algebra))},
      {"automorphisms", automorphism_family(algebra)},
      {"samples", samples},
      {"violations", vs},
      {"seed", seed},
      {"bound", bound},
  };
}

EquivalenceReport check_equivalence(Algebra a, const AlgFormula& original, const AlgFormula& eliminated,
                                    const CheckOptions& opts) {
  return a == Algebra::Quaternion ? check_typed<Quaternion>(a, original, eliminated, opts)
                                  : check_typed<Octonion>(a, original, eliminated, opts);
}

OrbitReport check_orbit_invariance(Algebra a, const AlgFormula& phi, std::size_t n, std::uint64_t seed, int bound) {
  return a == Algebra::Quaternion ? orbit_typed<Quaternion>(a, phi, n, seed, bound)
                                  : orbit_typed<Octonion>(a, phi, n, seed, bound);
}

AlgTerm random_term(Rng& rng, const std::vector<std::string>& vars, int depth, const GenOptions& g) {
  if (depth <= 0 || random_below(rng, 4) == 0) {
    const std::uint64_t pick = random_below(rng, vars.empty() ? 3 : 6);
    if (pick >= 3) return AlgTerm::var(vars[random_below(rng, vars.size())]);
    if (pick == 0) return AlgTerm::zero();
    if (pick == 1) return AlgTerm::one();
    return AlgTerm::literal(Integer(static_cast<long>(random_below(rng, static_cast<std::uint64_t>(g.literal_bound) + 1))));
  }
  switch (random_below(rng, 5)) {
    case 0: return AlgTerm::add(random_term(rng, vars, depth - 1, g), random_term(rng, vars, depth - 1, g));
    case 1: return AlgTerm::sub(random_term(rng, vars, depth - 1, g), random_term(rng, vars, depth - 1, g));
    case 2: return AlgTerm::mul(random_term(rng, vars, depth - 1, g), random_term(rng, vars, depth - 1, g));
    case 3: return AlgTerm::neg(random_term(rng, vars, depth - 1, g));
    default: return AlgTerm::conj(random_term(rng, vars, depth - 1, g));
  }
}

AlgFormula random_qf_formula(Rng& rng, const std::vector<std::string>& vars, int depth, const GenOptions& g) {
  if (depth <= 0 || random_below(rng, 3) == 0) {
    const int term_depth = std::max(1, g.max_depth - 1);
    AlgTerm l = random_term(rng, vars, term_depth, g);
    AlgTerm r = random_term(rng, vars, term_depth, g);
    return g.use_le && random_below(rng, 2) == 0 ? le(std::move(l), std::move(r)) : eq(std::move(l), std::move(r));
  }
  switch (random_below(rng, 4)) {
    case 0: return AlgFormula::negation(random_qf_formula(rng, vars, depth - 1, g));
    case 1: return AlgFormula::conj(random_qf_formula(rng, vars, depth - 1, g), random_qf_formula(rng, vars, depth - 1, g));
    case 2: return AlgFormula::disj(random_qf_formula(rng, vars, depth - 1, g), random_qf_formula(rng, vars, depth - 1, g));
    default:
      return AlgFormula::implies(random_qf_formula(rng, vars, depth - 1, g), random_qf_formula(rng, vars, depth - 1, g));
  }
}

}  // namespace algqe
