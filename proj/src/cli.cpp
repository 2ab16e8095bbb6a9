#include "hkas/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "hkas/checkers.hpp"
#include "hkas/entropy_expr.hpp"
#include "hkas/error.hpp"
#include "hkas/generators.hpp"
#include "hkas/io.hpp"
#include "hkas/theorem_harness.hpp"

namespace hkas::cli {

namespace {

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", round_for_report(x));
  return buffer;
}

std::string braced(const ClassSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : set) {
    if (!first) out += ",";
    out += c.label;
    first = false;
  }
  return out + "}";
}

std::string parenthesized(const ClassSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += seq[i].label;
  }
  return out + ")";
}

Json labels(const auto& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(c.label);
  return arr;
}

std::size_t max_support_from_env() {
  const char* raw = std::getenv("HKAS_MAX_SUPPORT");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxSupport;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw Error(ErrorCode::InvalidParameter, "HKAS_MAX_SUPPORT must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

Scheme load_with_warnings(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Scheme s = load_scheme_file(path, &warnings, max_support_from_env());
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return s;
}

// --- check -----------------------------------------------------------------

struct CheckOptions {
  std::string scheme;
  std::string mode = "all";
  bool exhaustive = false;
  bool json = false;
};

void print_report(const CheckReport& r, std::ostream& out) {
  out << to_string(r.kind) << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& w : r.witnesses) {
    out << "  class " << w.target.label << ": secrets " << braced(w.secrets) << " keys "
        << braced(w.keys) << ": " << w.reason << " (H=" << fmt(w.h_key)
        << ", H|coalition=" << fmt(w.h_key_given) << ")\n";
  }
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const Scheme s = load_with_warnings(opt.scheme, err);
  std::vector<CheckReport> reports;
  const bool all = opt.mode == "all";
  if (all || opt.mode == "correctness") reports.push_back(check_correctness(s));
  if (all || opt.mode == "ki") reports.push_back(check_ki(s, opt.exhaustive));
  if (all || opt.mode == "ski") reports.push_back(check_ski(s, opt.exhaustive));
  if (all || opt.mode == "key-indep") reports.push_back(check_key_independence(s));

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;

  if (opt.json) {
    Json doc;
    doc["passed"] = passed;
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return passed ? kExitOk : kExitCheckFailed;
}

// --- graph analyze ---------------------------------------------------------

struct AnalyzeOptions {
  std::string graph;
  std::optional<std::string> cls;
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const AccessGraph g = load_graph_file(opt.graph);
  std::vector<ClassId> targets = g.classes();
  if (opt.cls) {
    g.index_of(*opt.cls);
    targets = {ClassId(*opt.cls)};
  }

  const ClassSequence topo = topological_sort(g);
  const ClassSequence well = well_ordered_all(g);
  if (opt.json) {
    Json doc;
    doc["classes"] = labels(g.classes());
    doc["topological_sort"] = labels(topo);
    doc["well_ordered"] = labels(well);
    doc["per_class"] = Json::object();
    for (const auto& u : targets) {
      Json entry;
      entry["accessible"] = labels(accessible_set(g, u));
      entry["forbidden"] = labels(forbidden_set(g, u));
      entry["ancestors"] = labels(ancestor_set(g, u));
      entry["partition"] = partition_check(g, u);
      entry["theorem_sequence"] = labels(theorem_sequence(g, u));
      doc["per_class"][u.label] = std::move(entry);
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "classes: " << parenthesized(g.classes()) << "\n";
  out << "topological sort: " << parenthesized(topo) << "\n";
  out << "well-ordered: " << parenthesized(well) << "\n";
  for (const auto& u : targets) {
    out << "A_" << u.label << "=" << braced(accessible_set(g, u)) << "\n";
    out << "F_" << u.label << "=" << braced(forbidden_set(g, u)) << "\n";
    out << "C_" << u.label << "=" << braced(ancestor_set(g, u)) << "\n";
    out << "partition(" << u.label << "): " << (partition_check(g, u) ? "ok" : "BROKEN") << "\n";
    out << "theorem sequence(" << u.label << "): " << parenthesized(theorem_sequence(g, u)) << "\n";
  }
  return kExitOk;
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::string graph;
  std::string kind;
  std::uint64_t q = 2;
  std::uint64_t seed = 0;
  std::optional<std::string> target;
  std::optional<std::string> leaker;
  std::optional<std::string> pair;
  std::string output;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
  const AccessGraph g = load_graph_file(opt.graph);
  GenSpec spec;
  spec.q = opt.q;
  spec.seed = opt.seed;
  if (opt.kind == "trivial") {
    spec.kind = GenKind::Trivial;
  } else if (opt.kind == "leaky") {
    spec.kind = GenKind::Leaky;
    if (opt.target) spec.target = ClassId(*opt.target);
    if (opt.leaker) spec.leaker = ClassId(*opt.leaker);
  } else if (opt.kind == "correlated") {
    spec.kind = GenKind::Correlated;
    if (opt.pair) {
      auto comma = opt.pair->find(',');
      if (comma == std::string::npos) {
        throw Error(ErrorCode::InvalidParameter, "--pair expects '<u>,<w>'");
      }
      spec.pair.emplace(ClassId(opt.pair->substr(0, comma)), ClassId(opt.pair->substr(comma + 1)));
    }
  } else {
    spec.kind = GenKind::RandomCorrect;
  }

  const std::string text = serialize_scheme(generate(g, spec, max_support_from_env()));
  if (opt.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + opt.output + "'");
  file << text;
  return kExitOk;
}

// --- entropy ---------------------------------------------------------------

struct EntropyOptions {
  std::string scheme;
  std::string expr;
  bool json = false;
};

int run_entropy(const EntropyOptions& opt, std::ostream& out, std::ostream& err) {
  const EntropyExpr expr = parse_entropy_expr(opt.expr);
  const Scheme s = load_with_warnings(opt.scheme, err);
  const double bits = evaluate(expr, s);
  if (opt.json) {
    Json doc;
    doc["expr"] = expr.to_string();
    doc["bits"] = round_for_report(bits);
    out << doc.dump(2) << "\n";
  } else {
    out << expr.to_string() << " = " << fmt(bits) << "\n";
  }
  return kExitOk;
}

// --- validate --------------------------------------------------------------

struct ValidateOptions {
  std::string graph;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t q = 2;
  bool json = false;
};

int run_validate(const ValidateOptions& opt, std::ostream& out) {
  const AccessGraph g = load_graph_file(opt.graph);
  const std::size_t max_support = max_support_from_env();
  SplitMix64 seeds(opt.seed);
  std::vector<Scheme> corpus;
  corpus.reserve(opt.trials);
  for (std::size_t i = 0; i < opt.trials; ++i) {
    corpus.push_back(gen_random_correct(g, opt.q, seeds.next(), max_support));
  }
  const HarnessSummary summary = validate_corpus(corpus);

  if (opt.json) {
    Json doc;
    doc["schemes"] = summary.schemes;
    doc["ki_pass"] = summary.ki_pass;
    doc["ki_fail"] = summary.ki_fail;
    doc["discrepancies"] = summary.discrepancies;
    doc["key_independence_failures"] = summary.key_independence_failures;
    doc["identity_checks"] = summary.identity_checks;
    doc["identity_failures"] = summary.identity_failures;
    doc["max_abs_err"] = round_for_report(summary.max_abs_err);
    out << doc.dump(2) << "\n";
  } else {
    out << "schemes: " << summary.schemes << "\n"
        << "ki pass / fail: " << summary.ki_pass << " / " << summary.ki_fail << "\n"
        << "ki/ski discrepancies: " << summary.discrepancies << "\n"
        << "key-independence failures: " << summary.key_independence_failures << "\n"
        << "identity checks: " << summary.identity_checks << " (" << summary.identity_failures
        << " failed)\n"
        << "max abs error: " << fmt(summary.max_abs_err) << "\n";
  }
  return summary.clean() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify hierarchical key assignment schemes", "hkas"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Run correctness and security checks on a scheme");
  check->add_option("--scheme", check_opt.scheme, "Scheme JSON file")->required();
  check->add_option("--mode", check_opt.mode, "Which check to run")
      ->check(CLI::IsMember({"correctness", "ki", "ski", "key-indep", "all"}));
  check->add_flag("--exhaustive", check_opt.exhaustive, "Enumerate every coalition");
  check->add_flag("--json", check_opt.json, "Machine-readable output");

  auto* graph = app.add_subcommand("graph", "Access graph utilities");
  graph->require_subcommand(1);
  AnalyzeOptions analyze_opt;
  auto* analyze = graph->add_subcommand("analyze", "Print A/F/C sets and class sequences");
  analyze->add_option("--graph", analyze_opt.graph, "Graph JSON file")->required();
  analyze->add_option("--class", analyze_opt.cls, "Restrict per-class output to one class");
  analyze->add_flag("--json", analyze_opt.json, "Machine-readable output");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a scheme over a graph");
  gen->add_option("--graph", gen_opt.graph, "Graph JSON file")->required();
  gen->add_option("--kind", gen_opt.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"trivial", "leaky", "correlated", "random"}));
  gen->add_option("--q", gen_opt.q, "Key space size")->required();
  gen->add_option("--seed", gen_opt.seed, "Seed for --kind random");
  gen->add_option("--target", gen_opt.target, "Leaky: class whose key leaks");
  gen->add_option("--leaker", gen_opt.leaker, "Leaky: class receiving the leaked key");
  gen->add_option("--pair", gen_opt.pair, "Correlated: '<u>,<w>', K_u forced equal to K_w");
  gen->add_option("-o,--output", gen_opt.output, "Output file, '-' for stdout")->required();

  EntropyOptions entropy_opt;
  auto* ent = app.add_subcommand("entropy", "Evaluate an entropy expression on a scheme");
  ent->add_option("--scheme", entropy_opt.scheme, "Scheme JSON file")->required();
  ent->add_option("--expr", entropy_opt.expr, "e.g. \"H(K:a|S:b,S:c)\"")->required();
  ent->add_flag("--json", entropy_opt.json, "Machine-readable output");

  ValidateOptions validate_opt;
  auto* validate = app.add_subcommand("validate", "Check the KI/SKI equivalence on a random corpus");
  validate->add_option("--graph", validate_opt.graph, "Graph JSON file")->required();
  validate->add_option("--trials", validate_opt.trials, "Number of schemes")->required();
  validate->add_option("--seed", validate_opt.seed, "Corpus seed")->required();
  validate->add_option("--q", validate_opt.q, "Key space size")->required();
  validate->add_flag("--json", validate_opt.json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_opt, out, err);
    if (*analyze) return run_analyze(analyze_opt, out);
    if (*gen) return run_gen(gen_opt, out);
    if (*ent) return run_entropy(entropy_opt, out, err);
    if (*validate) return run_validate(validate_opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TheoremViolation ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hkas::cli
