// algqe: quantifier elimination over the quaternions and octonions by
// transfer to the real field.
//
// Exit codes: 0 success, 1 usage or parse error, 2 backend limit (partial
// result printed), 3 verification disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algqe/errors.hpp"
#include "algqe/invariants.hpp"
#include "algqe/parser.hpp"
#include "algqe/realify.hpp"
#include "algqe/transfer.hpp"
#include "algqe/verify.hpp"

namespace {

using namespace algqe;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kLimit = 2, kDisagree = 3 };

struct RunConfig {
  std::string command;
  std::string algebra = "quat";
  std::vector<std::string> exprs;
  std::vector<std::string> files;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t witness_bound = 256;
  bool no_simplify = false;
  std::string order = "auto";
  std::size_t max_clauses = 100000;
  std::size_t max_monomials = 1000000;
  bool dedup = false;
  int r = 1, m = 1, l = 1;
  int maxlen = 4;

  bool json_out() const { return format == "json"; }

  json to_json() const {
    return {{"command", command},         {"algebra", algebra},
            {"expr", exprs},              {"file", files},
            {"format", format},           {"seed", seed},
            {"samples", samples},         {"witness_bound", witness_bound},
            {"simplify", !no_simplify},   {"order", order},
            {"max_clauses", max_clauses}, {"max_monomials", max_monomials},
            {"dedup", dedup}};
  }

  TransferOptions transfer() const {
    TransferOptions t;
    t.simplify = !no_simplify;
    t.dedup = dedup;
    t.qe.order = order == "given" ? VarOrder::Given : VarOrder::Auto;
    t.qe.max_clauses = max_clauses;
    t.qe.max_monomials = max_monomials;
    return t;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline expressions first, then files, in command-line order per kind.
std::vector<std::string> inputs(const RunConfig& c) {
  std::vector<std::string> out = c.exprs;
  for (const auto& f : c.files) out.push_back(read_file(f));
  return out;
}

std::string single_input(const RunConfig& c) {
  auto in = inputs(c);
  if (in.size() != 1) throw UsageError(c.command + ": expects exactly one formula (-e or -f)");
  return in.front();
}

void emit(const RunConfig& c, const json& doc, const std::string& text) {
  if (c.json_out()) std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

int cmd_eliminate(const RunConfig& c) {
  const Algebra a = parse_algebra(c.algebra);
  const AlgFormula phi = parse_alg_formula(single_input(c));
  try {
    const TransferResult res = run_transfer(phi, a, c.transfer());
    json doc{{"config", c.to_json()},
             {"input", to_string(phi)},
             {"output", to_string(res.formula)},
             {"real", to_string(res.real)},
             {"report", res.report.to_json()}};
    emit(c, doc, to_string(res.formula) + "\n" + res.report.to_json().dump() + "\n");
    return kOk;
  } catch (const TransferFailure& e) {
    json doc{{"config", c.to_json()},
             {"input", to_string(phi)},
             {"error", e.what()},
             {"partial", to_string(e.partial())},
             {"report", e.report().to_json()}};
    emit(c, doc, std::string("error: ") + e.what() + "\npartial: " + to_string(e.partial()) + "\n" +
                     e.report().to_json().dump() + "\n");
    return kLimit;
  }
}

int cmd_check(const RunConfig& c) {
  const Algebra a = parse_algebra(c.algebra);
  const auto in = inputs(c);
  if (in.empty() || in.size() > 2) throw UsageError("check: expects the original and optionally the eliminated formula");
  const AlgFormula original = parse_alg_formula(in[0]);
  AlgFormula eliminated;
  if (in.size() == 2) {
    eliminated = parse_alg_formula(in[1]);
  } else {
    try {
      eliminated = run_transfer(original, a, c.transfer()).formula;
    } catch (const TransferFailure& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kLimit;
    }
  }
  CheckOptions opts;
  opts.samples = c.samples;
  opts.seed = c.seed;
  opts.witness_bound = c.witness_bound;
  const EquivalenceReport eq = check_equivalence(a, original, eliminated, opts);
  const OrbitReport orbit = check_orbit_invariance(a, eliminated, c.samples, c.seed);
  json doc{{"config", c.to_json()},
           {"original", to_string(original)},
           {"eliminated", to_string(eliminated)},
           {"equivalence", eq.to_json()},
           {"orbit", orbit.to_json()}};
  std::ostringstream text;
  text << "equivalence: " << eq.agreements << " agree, " << eq.disagreement_count << " disagree, "
       << eq.inconclusive << " inconclusive of " << eq.samples << "\n"
       << "orbit (" << automorphism_family(a) << "): " << orbit.violations.size() << " violations of "
       << orbit.samples << "\n";
  for (std::size_t i = 0; i < eq.disagreements.size() && i < 10; ++i) {
    const auto& d = eq.disagreements[i];
    text << "  counterexample:";
    for (const auto& [k, v] : d.assignment) text << " " << k << "=" << v;
    text << " original=" << d.original << " eliminated=" << d.eliminated << "\n";
  }
  emit(c, doc, text.str());
  return eq.ok() && orbit.ok() ? kOk : kDisagree;
}

int cmd_invariants(const RunConfig& c) {
  const InvariantScheme s = make_scheme(parse_algebra(c.algebra), default_tuple_vars(c.m), c.dedup);
  json entries = json::array();
  for (const auto& e : s.entries)
    entries.push_back({{"label", e.label}, {"term", e.term.str()}, {"poly", e.poly.str()}});
  emit(c, {{"config", c.to_json()}, {"m", c.m}, {"count", s.size()}, {"entries", entries}}, dump_scheme(s));
  return kOk;
}

int cmd_words(const RunConfig& c) {
  const auto words = enum_words(c.m, c.maxlen);
  json list = json::array();
  std::string text;
  for (const auto& w : words) {
    list.push_back(w.str());
    text += w.str() + "\n";
  }
  emit(c, {{"m", c.m}, {"maxlen", c.maxlen}, {"count", words.size()}, {"words", list}}, text);
  return kOk;
}

int cmd_realify(const RunConfig& c) {
  const Realification ctx{parse_algebra(c.algebra), !c.no_simplify};
  const AlgFormula phi = parse_alg_formula(single_input(c));
  const RealFormula out = realify_formula(phi, ctx);
  emit(c, {{"config", c.to_json()}, {"input", to_string(phi)}, {"output", to_string(out)}, {"atoms", out.atom_count()}},
       to_string(out) + "\n");
  return kOk;
}

int cmd_stats(const RunConfig& c) {
  const Algebra a = parse_algebra(c.algebra);
  const auto in = inputs(c);
  const AlgFormula phi = in.empty() ? synthetic_conjunction(c.r, c.m, c.l) : parse_alg_formula(in.front());
  const TransferReport r = stats(phi, a);
  json doc = r.to_json();
  doc["quantified"] = r.quantified_real_vars;
  doc["atoms"] = r.atoms_pre_qe;
  std::ostringstream text;
  text << "quantified: " << r.quantified_real_vars << "\natoms: " << r.atoms_pre_qe
       << "\ntotal_vars: " << r.total_vars << "\nstatus: " << r.status << "\n";
  emit(c, doc, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Quantifier elimination over the quaternions and octonions"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool formula, bool backend) {
    sub->add_option("--algebra", cfg.algebra, "quat or oct")->check(CLI::IsMember({"quat", "oct"}));
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (formula) {
      sub->add_option("-e,--expr", cfg.exprs, "formula text");
      sub->add_option("-f,--file", cfg.files, "file holding one formula")->check(CLI::ExistingFile);
    }
    if (backend) {
      sub->add_flag("--no-simplify", cfg.no_simplify, "keep raw realified atoms");
      sub->add_option("--order", cfg.order, "auto or given")->check(CLI::IsMember({"auto", "given"}));
      sub->add_option("--max-clauses", cfg.max_clauses);
      sub->add_option("--max-monomials", cfg.max_monomials);
      sub->add_flag("--dedup", cfg.dedup, "drop invariants with repeated polynomials");
    }
  };

  auto* elim = app.add_subcommand("eliminate", "eliminate the quantifiers of a formula");
  common(elim, true, true);
  auto* check = app.add_subcommand("check", "compare a formula with its (given or computed) elimination");
  common(check, true, true);
  check->add_option("--seed", cfg.seed);
  check->add_option("--samples", cfg.samples);
  check->add_option("--witness-bound", cfg.witness_bound);
  auto* inv = app.add_subcommand("invariants", "dump the invariant scheme for m-tuples");
  common(inv, false, false);
  inv->add_option("-m", cfg.m, "arity")->check(CLI::Range(1, 16));
  inv->add_flag("--dedup", cfg.dedup);
  auto* words = app.add_subcommand("words", "list bracketed words");
  words->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  words->add_option("-m", cfg.m, "letters")->check(CLI::Range(1, 16));
  words->add_option("--maxlen", cfg.maxlen, "maximum length")->check(CLI::Range(1, 8));
  auto* real = app.add_subcommand("realify", "print the coordinate expansion");
  common(real, true, false);
  real->add_flag("--no-simplify", cfg.no_simplify);
  auto* st = app.add_subcommand("stats", "dry-run reduction counts");
  common(st, true, false);
  st->add_option("-r", cfg.r, "atoms")->check(CLI::Range(1, 64));
  st->add_option("-m", cfg.m, "free variables")->check(CLI::Range(0, 16));
  st->add_option("-l", cfg.l, "bound variables")->check(CLI::Range(0, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "eliminate") return cmd_eliminate(cfg);
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "invariants") return cmd_invariants(cfg);
    if (cfg.command == "words") return cmd_words(cfg);
    if (cfg.command == "realify") return cmd_realify(cfg);
    if (cfg.command == "stats") return cmd_stats(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
