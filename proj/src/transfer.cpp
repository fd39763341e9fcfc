#include "algqe/transfer.hpp"

#include <chrono>
#include <map>

#include "algqe/realify.hpp"

namespace algqe {

nlohmann::json TransferReport::to_json() const {
  return {
      {"algebra", std::string(to_string(algebra))},
      {"m", m},
      {"l", l},
      {"r", r},
      {"quantified_real_vars", quantified_real_vars},
      {"atoms_pre_qe", atoms_pre_qe},
      {"atoms_post_qe", atoms_post_qe},
      {"total_vars", total_vars},
      {"backend_steps",
       {{"eq_subst", steps.eq_subst}, {"linear_vs", steps.linear_vs}, {"quadratic_vs", steps.quadratic_vs}}},
      {"conjunctive", conjunctive},
      {"status", status},
      {"wall_ms", wall_ms},
  };
}

TransferJob make_job(const AlgFormula& phi, Algebra algebra, const TransferOptions& options) {
  TransferJob job;
  job.algebra = algebra;
  job.options = options;
  job.input = prenex_form(phi);
  job.free = free_vars(job.input.formula());
  job.scheme = make_scheme(algebra, job.free, options.dedup);
  for (std::size_t i = 1; i <= job.scheme.size(); ++i) job.z.emplace_back("z" + std::to_string(i));
  return job;
}

RealFormula build_image_formula(const TransferJob& job) {
  const Realification ctx{job.algebra, job.options.simplify};
  std::vector<RealFormula> parts{realify_formula(job.input.matrix, ctx)};
  for (std::size_t i = 0; i < job.z.size(); ++i)
    parts.push_back(real_atom(Poly(job.z[i]) - job.scheme.entries[i].poly, Rel::Eq));
  RealFormula out = RealFormula::conj_all(parts);
  for (auto it = job.input.prefix.rbegin(); it != job.input.prefix.rend(); ++it) {
    const auto cs = ctx.coords(it->var);
    for (auto c = cs.rbegin(); c != cs.rend(); ++c)
      out = it->exists ? RealFormula::exists(c->name(), out) : RealFormula::forall(c->name(), out);
  }
  for (auto v = job.free.rbegin(); v != job.free.rend(); ++v) {
    const auto cs = ctx.coords(*v);
    for (auto c = cs.rbegin(); c != cs.rend(); ++c) out = RealFormula::exists(c->name(), out);
  }
  return out;
}

namespace {

// Integer-coefficient polynomial over z as a central algebra term.
class TermBuilder {
 public:
  explicit TermBuilder(const TransferJob& job) {
    for (std::size_t i = 0; i < job.z.size(); ++i) tau_.emplace(job.z[i].id(), job.scheme.entries[i].term);
  }

  AlgTerm term(const Monomial& m, const Integer& c) const {
    std::optional<AlgTerm> prod;
    for (const auto& [id, e] : m.powers()) {
      auto it = tau_.find(id);
      if (it == tau_.end()) throw std::logic_error("pullback: variable " + Var::from_id(id).name() + " is not a z");
      for (std::uint32_t k = 0; k < e; ++k) prod = prod ? AlgTerm::mul(*prod, it->second) : it->second;
    }
    if (!prod) return AlgTerm::literal(c);
    return c == 1 ? *prod : AlgTerm::mul(AlgTerm::literal(c), *prod);
  }

  // Sum of the monomials whose coefficient has the given sign, with |c|.
  AlgTerm side(const Poly& p, int sign) const {
    std::optional<AlgTerm> sum;
    for (const auto& [m, c] : p.terms()) {
      if (c.sign() != sign) continue;
      if (!c.is_integer()) throw std::logic_error("pullback: non-integer coefficient " + c.str());
      AlgTerm t = term(m, c.abs().numerator());
      sum = sum ? AlgTerm::add(*sum, t) : t;
    }
    return sum ? *sum : AlgTerm::zero();
  }

 private:
  std::map<std::uint32_t, AlgTerm> tau_;
};

AlgFormula pull_atom(const RealAtom& a, const TermBuilder& b) {
  const Poly p = a.poly.primitive();
  const AlgTerm lhs = b.side(p, 1);
  const AlgTerm rhs = b.side(p, -1);
  switch (a.rel) {
    case Rel::Eq: return eq(lhs, rhs);
    case Rel::Le: return le(lhs, rhs);
    case Rel::Lt: return AlgFormula::conj(le(lhs, rhs), AlgFormula::negation(eq(lhs, rhs)));
    case Rel::Ne: return AlgFormula::negation(eq(lhs, rhs));
  }
  return AlgFormula::truth();
}

AlgFormula pull(const RealFormula& f, const TermBuilder& b) {
  using K = RealFormula::Kind;
  switch (f.kind()) {
    case K::True: return AlgFormula::truth();
    case K::False: return AlgFormula::falsity();
    case K::Atom: return pull_atom(f.atom(), b);
    case K::Not: return AlgFormula::negation(pull(f.lhs(), b));
    case K::And: return AlgFormula::conj(pull(f.lhs(), b), pull(f.rhs(), b));
    case K::Or: return AlgFormula::disj(pull(f.lhs(), b), pull(f.rhs(), b));
    case K::Implies: return AlgFormula::implies(pull(f.lhs(), b), pull(f.rhs(), b));
    default: throw std::invalid_argument("pullback: formula has quantifiers");
  }
}

bool is_conjunction_of_atoms(const AlgFormula& f) {
  using K = AlgFormula::Kind;
  if (f.kind() == K::Atom) return true;
  if (f.kind() == K::And) return is_conjunction_of_atoms(f.lhs()) && is_conjunction_of_atoms(f.rhs());
  return false;
}

TransferReport base_report(const TransferJob& job, const RealFormula& image) {
  TransferReport r;
  r.algebra = job.algebra;
  r.m = job.m();
  r.l = job.l();
  r.r = job.input.matrix.atom_count();
  r.quantified_real_vars = static_cast<std::size_t>(dimension(job.algebra)) * (r.m + r.l);
  r.atoms_pre_qe = image.atom_count();
  r.total_vars = r.quantified_real_vars + job.z.size();
  r.conjunctive = is_conjunction_of_atoms(job.input.matrix);
  return r;
}

}  // namespace

AlgFormula pullback(const RealFormula& psi, const TransferJob& job) { return pull(psi, TermBuilder(job)); }

TransferResult run_transfer(const AlgFormula& phi, Algebra algebra, const TransferOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  const TransferJob job = make_job(phi, algebra, options);
  const RealFormula image = build_image_formula(job);
  TransferReport report = base_report(job, image);
  QeOptions qe = options.qe;
  qe.simplify = options.simplify;
  RealFormula psi;
  // A matrix that realifies to a constant needs no elimination; the
  // quantifiers range over a nonempty structure.
  const RealFormula matrix = realify_formula(job.input.matrix, Realification{algebra, options.simplify});
  const bool constant = matrix.kind() == RealFormula::Kind::True || matrix.kind() == RealFormula::Kind::False;
  try {
    psi = constant ? matrix : eliminate_quantifiers(image, qe, &report.steps);
  } catch (const DegreeTooHigh& e) {
    report.status = "degree_too_high";
    report.wall_ms = elapsed();
    throw TransferFailure(e.what(), report, e.partial());
  } catch (const SizeLimitExceeded& e) {
    report.status = "size_limit";
    report.wall_ms = elapsed();
    throw TransferFailure(e.what(), report, image);
  }
  report.atoms_post_qe = psi.atom_count();
  TransferResult out{pullback(psi, job), psi, report};
  out.report.wall_ms = elapsed();
  return out;
}

TransferReport stats(const AlgFormula& phi, Algebra algebra) {
  const auto start = std::chrono::steady_clock::now();
  TransferOptions opts;
  opts.simplify = false;
  const TransferJob job = make_job(phi, algebra, opts);
  TransferReport r = base_report(job, build_image_formula(job));
  r.status = r.conjunctive ? "ok" : "shape_not_conjunctive";
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

AlgFormula synthetic_conjunction(int r, int m, int l) {
  std::vector<AlgTerm> vars;
  for (int i = 1; i <= m; ++i) vars.push_back(AlgTerm::var("x" + std::to_string(i)));
  for (int i = 1; i <= l; ++i) vars.push_back(AlgTerm::var("y" + std::to_string(i)));
  std::vector<AlgFormula> atoms;
  for (int k = 1; k <= r; ++k) {
    std::optional<AlgTerm> prod;
    for (const auto& v : vars) prod = prod ? AlgTerm::mul(*prod, v) : v;
    const AlgTerm rhs = AlgTerm::literal(Integer(k));
    atoms.push_back(eq(prod ? *prod : rhs, rhs));
  }
  AlgFormula f = AlgFormula::conj_all(atoms);
  for (int i = l; i >= 1; --i) f = AlgFormula::exists("y" + std::to_string(i), f);
  return f;
}

}  // namespace algqe
