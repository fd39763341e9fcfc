#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algqe/formula.hpp"
#include "algqe/invariants.hpp"
#include "algqe/normal_forms.hpp"
#include "algqe/real_qe.hpp"

namespace algqe {

struct TransferOptions {
  QeOptions qe;
  bool simplify = true;  // realification and backend cleanup
  bool dedup = false;    // drop invariants with repeated polynomials
};

struct TransferJob {
  Algebra algebra = Algebra::Quaternion;
  PrenexForm<AlgAtom> input;        // prenex form of the formula
  std::vector<std::string> free;    // x_1..x_m, first occurrence order
  InvariantScheme scheme;           // arity m over `free`
  std::vector<Var> z;               // one per scheme entry
  TransferOptions options;

  int m() const { return static_cast<int>(free.size()); }
  int l() const { return static_cast<int>(input.prefix.size()); }
};

TransferJob make_job(const AlgFormula& phi, Algebra algebra, const TransferOptions& options = {});

struct TransferReport {
  Algebra algebra = Algebra::Quaternion;
  int m = 0;
  int l = 0;
  std::size_t r = 0;  // atoms of the prenex matrix
  std::size_t quantified_real_vars = 0;
  std::size_t atoms_pre_qe = 0;
  std::size_t atoms_post_qe = 0;
  std::size_t total_vars = 0;  // quantified real variables plus z variables
  QeStats steps;
  bool conjunctive = true;  // matrix is a conjunction of atoms
  std::string status = "ok";
  double wall_ms = 0;

  nlohmann::json to_json() const;
};

// Exists (free coordinates) Q (bound coordinates).
//   realify(matrix) && z_i - s_i = 0
RealFormula build_image_formula(const TransferJob& job);

// z_i -> tau_i in a quantifier-free formula over the z variables.
AlgFormula pullback(const RealFormula& psi, const TransferJob& job);

struct TransferResult {
  AlgFormula formula;  // quantifier free, same free variables
  RealFormula real;    // the eliminated formula over z
  TransferReport report;
};

// Raised when the backend stops; carries the report and the partially
// eliminated real formula.
class TransferFailure : public std::runtime_error {
 public:
  TransferFailure(const std::string& what, TransferReport report, RealFormula partial)
      : std::runtime_error(what), report_(std::move(report)), partial_(std::move(partial)) {}
  const TransferReport& report() const { return report_; }
  const RealFormula& partial() const { return partial_; }

 private:
  TransferReport report_;
  RealFormula partial_;
};

TransferResult run_transfer(const AlgFormula& phi, Algebra algebra, const TransferOptions& options = {});

// Dry run with simplification off: counts only, no elimination.
TransferReport stats(const AlgFormula& phi, Algebra algebra);

// Conjunction of r atoms over free x1..xm with l existential y's in front.
AlgFormula synthetic_conjunction(int r, int m, int l);

}  // namespace algqe
