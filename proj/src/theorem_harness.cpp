#include "hkas/theorem_harness.hpp"

#include <algorithm>
#include <cmath>

#include "hkas/checkers.hpp"
#include "hkas/error.hpp"
#include "hkas/io.hpp"

namespace hkas {

bool IdentityReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

double IdentityReport::max_abs_err() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.abs_err);
  return worst;
}

namespace {

std::string join(const ClassSequence& seq, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ",";
    out += seq[i].label;
  }
  return out;
}

IdentityCheck make_check(std::string name, double lhs, double rhs, std::optional<bool> exact) {
  return {std::move(name), lhs, rhs, std::abs(lhs - rhs), exact};
}

VarSet keys_of(const ClassSequence& seq, std::size_t begin, std::size_t end) {
  VarSet out;
  for (std::size_t i = begin; i < end; ++i) out.insert(VarId::key(seq[i].label));
  return out;
}

VarSet secrets_of(const ClassSequence& seq, std::size_t begin, std::size_t end) {
  VarSet out;
  for (std::size_t i = begin; i < end; ++i) out.insert(VarId::secret(seq[i].label));
  return out;
}

double sum_of_key_entropies(const JointDistribution& d, const ClassSequence& seq, std::size_t begin,
                            std::size_t end) {
  double total = 0.0;
  for (std::size_t i = begin; i < end; ++i) total += entropy(d, {VarId::key(seq[i].label)});
  return total;
}

// Groups {K_i} for i in [begin, end) plus `rest` when non-empty.
std::vector<VarSet> singleton_groups(const ClassSequence& seq, std::size_t begin, std::size_t end,
                                     const VarSet& rest) {
  std::vector<VarSet> groups;
  for (std::size_t i = begin; i < end; ++i) groups.push_back({VarId::key(seq[i].label)});
  if (!rest.empty()) groups.push_back(rest);
  return groups;
}

void require_ki_and_order(const Scheme& s, const ClassSequence& seq) {
  if (!check_ki(s).passed) {
    throw Error(ErrorCode::PreconditionFailed, "scheme is not KI-secure");
  }
  if (seq.empty() || !is_well_ordered(s.graph(), seq)) {
    throw Error(ErrorCode::PreconditionFailed, "sequence is not well ordered");
  }
}

IdentityReport independence_sum_unchecked(const Scheme& s, const ClassSequence& seq) {
  const auto& d = s.dist();
  IdentityReport report;
  report.checks.push_back(make_check("independence-sum(" + join(seq, 0, seq.size()) + ")",
                                     entropy(d, keys_of(seq, 0, seq.size())),
                                     sum_of_key_entropies(d, seq, 0, seq.size()),
                                     is_mutually_independent(d, singleton_groups(seq, 0, seq.size(), {}))));
  return report;
}

IdentityReport conditional_identities_unchecked(const Scheme& s, const ClassSequence& seq, std::size_t n,
                                                std::size_t m) {
  const auto& d = s.dist();
  IdentityReport report;
  const std::size_t target_index = n - 1;
  const VarId target_key = VarId::key(seq[target_index].label);
  const VarSet prefix_secrets = secrets_of(seq, 0, target_index);
  const VarSet suffix_keys = keys_of(seq, n, n + m);
  const std::string tag = "(" + join(seq, 0, seq.size()) + "; n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ")";

  if (m > 0) {
    const double sum = sum_of_key_entropies(d, seq, n, n + m);

    VarSet given = prefix_secrets;
    given.insert(target_key);
    report.checks.push_back(make_check("suffix-keys-given-target" + tag,
                                       conditional_entropy(d, suffix_keys, given), sum,
                                       is_mutually_independent(d, singleton_groups(seq, n, n + m, given))));

    report.checks.push_back(
        make_check("suffix-keys-given-prefix" + tag, conditional_entropy(d, suffix_keys, prefix_secrets), sum,
                   is_mutually_independent(d, singleton_groups(seq, n, n + m, prefix_secrets))));
  }

  VarSet others = prefix_secrets;
  others.insert(suffix_keys.begin(), suffix_keys.end());
  report.checks.push_back(make_check("target-key-unaffected" + tag, conditional_entropy(d, {target_key}, others),
                                     entropy(d, {target_key}),
                                     others.empty() ? std::optional<bool>{}
                                                    : is_independent(d, {target_key}, others)));

  for (std::size_t j = 2; j <= n; ++j) {
    const VarSet keys = keys_of(seq, 0, j - 1);
    const VarSet secrets = secrets_of(seq, 0, j - 1);
    report.checks.push_back(make_check("prefix-keys-determined(j=" + std::to_string(j) + ")" + tag,
                                       conditional_entropy(d, keys, secrets), 0.0,
                                       is_functionally_determined(d, keys, secrets)));
  }
  return report;
}

IdentityReport main_theorem_unchecked(const Scheme& s, const ClassId& u) {
  const auto& g = s.graph();
  const auto& d = s.dist();
  const ClassSet forbidden = forbidden_set(g, u);
  const ClassSet ancestors = ancestor_set(g, u);
  const ClassSequence seq = theorem_sequence(g, u);

  IdentityReport report = conditional_identities_unchecked(s, seq, forbidden.size() + 1, ancestors.size());

  const VarId key = VarId::key(u.label);
  VarSet coalition = secret_vars(forbidden);
  VarSet leaked = key_vars(ancestors);
  coalition.insert(leaked.begin(), leaked.end());
  report.checks.push_back(make_check("ski-maximal(" + u.label + ")", conditional_entropy(d, {key}, coalition),
                                     entropy(d, {key}),
                                     coalition.empty() ? std::optional<bool>{}
                                                       : is_independent(d, {key}, coalition)));
  return report;
}

void absorb(HarnessSummary& summary, const IdentityReport& report) {
  summary.identity_checks += report.checks.size();
  for (const auto& c : report.checks) {
    if (!c.holds()) ++summary.identity_failures;
  }
  summary.max_abs_err = std::max(summary.max_abs_err, report.max_abs_err());
}

}  // namespace

IdentityReport verify_independence_sum(const Scheme& s, const ClassSequence& seq) {
  require_ki_and_order(s, seq);
  return independence_sum_unchecked(s, seq);
}

IdentityReport verify_conditional_identities(const Scheme& s, const ClassSequence& seq, std::size_t n,
                                             std::size_t m) {
  if (n < 1 || seq.size() != n + m) {
    throw Error(ErrorCode::PreconditionFailed, "sequence length must equal n + m with n >= 1");
  }
  require_ki_and_order(s, seq);
  return conditional_identities_unchecked(s, seq, n, m);
}

IdentityReport verify_main_theorem_sequence(const Scheme& s, const ClassId& u) {
  s.graph().index_of(u);
  if (!check_ki(s).passed) {
    throw Error(ErrorCode::PreconditionFailed, "scheme is not KI-secure");
  }
  return main_theorem_unchecked(s, u);
}

HarnessSummary verify_equivalence(std::span<const Scheme> corpus) {
  HarnessSummary summary;
  for (const auto& s : corpus) {
    ++summary.schemes;
    const bool ki = check_ki(s).passed;
    const bool ski = check_ski(s).passed;
    ki ? ++summary.ki_pass : ++summary.ki_fail;
    if (ki != ski) {
      ++summary.discrepancies;
      throw Error(ErrorCode::TheoremViolation,
                  std::string("KI verdict ") + (ki ? "pass" : "fail") + " but SKI verdict " +
                      (ski ? "pass" : "fail") + " for scheme:\n" + serialize_scheme(s));
    }
  }
  return summary;
}

HarnessSummary validate_corpus(std::span<const Scheme> corpus) {
  HarnessSummary summary = verify_equivalence(corpus);
  for (const auto& s : corpus) {
    if (!check_ki(s).passed) continue;
    if (!check_key_independence(s).passed) ++summary.key_independence_failures;

    const ClassSequence seq = well_ordered_all(s.graph());
    absorb(summary, independence_sum_unchecked(s, seq));
    for (std::size_t n = 1; n <= seq.size(); ++n) {
      absorb(summary, conditional_identities_unchecked(s, seq, n, seq.size() - n));
    }
    for (const auto& u : s.graph().classes()) {
      const ClassSequence theorem_seq = theorem_sequence(s.graph(), u);
      absorb(summary, independence_sum_unchecked(s, theorem_seq));
      absorb(summary, main_theorem_unchecked(s, u));
    }
  }
  return summary;
}

}  // namespace hkas
