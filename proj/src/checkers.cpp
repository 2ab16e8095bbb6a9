#include "hkas/checkers.hpp"

#include <bit>
#include <cstdint>
#include <optional>

#include "hkas/error.hpp"

namespace hkas {

namespace {

std::string braced(const VarSet& vars) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : vars) {
    if (!first) out += ",";
    out += v.to_string();
    first = false;
  }
  return out + "}";
}

struct Coalition {
  ClassSet secrets;
  ClassSet keys;

  VarSet variables() const {
    VarSet vars = secret_vars(secrets);
    VarSet k = key_vars(keys);
    vars.insert(k.begin(), k.end());
    return vars;
  }
};

// Shortlex key: fewer classes first, then secrets, then keys by label.
bool shortlex_less(const Coalition& a, const Coalition& b) {
  auto size_a = a.secrets.size() + a.keys.size();
  auto size_b = b.secrets.size() + b.keys.size();
  if (size_a != size_b) return size_a < size_b;
  if (a.secrets != b.secrets) {
    return std::lexicographical_compare(a.secrets.begin(), a.secrets.end(), b.secrets.begin(),
                                        b.secrets.end());
  }
  return std::lexicographical_compare(a.keys.begin(), a.keys.end(), b.keys.begin(), b.keys.end());
}

Coalition coalition_from_mask(std::uint64_t mask, const std::vector<ClassId>& pool_secrets,
                              const std::vector<ClassId>& pool_keys) {
  Coalition c;
  for (std::size_t i = 0; i < pool_secrets.size(); ++i) {
    if (mask >> i & 1U) c.secrets.insert(pool_secrets[i]);
  }
  for (std::size_t i = 0; i < pool_keys.size(); ++i) {
    if (mask >> (pool_secrets.size() + i) & 1U) c.keys.insert(pool_keys[i]);
  }
  return c;
}

// Enumerates coalitions level by level (by size) and returns the
// shortlex-smallest one whose variables are not independent of K_target.
std::optional<Coalition> smallest_failing(const JointDistribution& d, const VarId& target_key,
                                          const ClassSet& secret_pool, const ClassSet& key_pool) {
  const std::vector<ClassId> secrets(secret_pool.begin(), secret_pool.end());
  const std::vector<ClassId> keys(key_pool.begin(), key_pool.end());
  const std::size_t bits = secrets.size() + keys.size();
  const std::uint64_t limit = std::uint64_t{1} << bits;

  for (std::size_t level = 1; level <= bits; ++level) {
    std::optional<Coalition> best;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != level) continue;
      Coalition c = coalition_from_mask(mask, secrets, keys);
      if (best && !shortlex_less(c, *best)) continue;
      if (!is_independent(d, {target_key}, c.variables())) best = std::move(c);
    }
    if (best) return best;
  }
  return std::nullopt;
}

Witness make_witness(const JointDistribution& d, const ClassId& target, Coalition c) {
  Witness w;
  w.target = target;
  const VarId key = VarId::key(target.label);
  const VarSet givens = c.variables();
  w.h_key = entropy(d, {key});
  w.h_key_given = conditional_entropy(d, {key}, givens);
  w.reason = key.to_string() + " is not independent of " + braced(givens);
  w.secrets = std::move(c.secrets);
  w.keys = std::move(c.keys);
  return w;
}

// Shared driver for KI (empty key pool) and SKI.
CheckReport check_indistinguishability(const Scheme& s, bool exhaustive, bool strong) {
  CheckReport report;
  report.kind = strong ? CheckKind::SKI : CheckKind::KI;
  report.exhaustive = exhaustive;
  const auto& g = s.graph();
  const auto& d = s.dist();

  for (const auto& u : g.classes()) {
    const ClassSet secret_pool = forbidden_set(g, u);
    const ClassSet key_pool = strong ? ancestor_set(g, u) : ClassSet{};
    const std::size_t bits = secret_pool.size() + key_pool.size();
    if (bits == 0) continue;  // vacuous

    if (exhaustive && bits > kMaxCoalitionBits) {
      throw Error(ErrorCode::CoalitionSpaceTooLarge,
                  "class '" + u.label + "' has " + std::to_string(bits) + " coalition bits");
    }

    const VarId key = VarId::key(u.label);
    std::optional<Coalition> failing;
    if (exhaustive) {
      failing = smallest_failing(d, key, secret_pool, key_pool);
    } else {
      Coalition maximal{secret_pool, key_pool};
      if (!is_independent(d, {key}, maximal.variables())) {
        failing = bits <= kMaxCoalitionBits ? smallest_failing(d, key, secret_pool, key_pool)
                                            : std::optional<Coalition>(std::move(maximal));
        // Unreachable: the search includes the maximal coalition.
        if (!failing) failing = Coalition{secret_pool, key_pool};
      }
    }
    if (failing) report.witnesses.push_back(make_witness(d, u, std::move(*failing)));
  }
  report.passed = report.witnesses.empty();
  return report;
}

}  // namespace

CheckReport check_correctness(const Scheme& s) {
  CheckReport report;
  report.kind = CheckKind::Correctness;
  const auto& g = s.graph();
  const auto& d = s.dist();
  for (const auto& v : g.classes()) {
    const VarId secret = VarId::secret(v.label);
    for (const auto& u : accessible_set(g, v)) {
      const VarId key = VarId::key(u.label);
      if (is_functionally_determined(d, {key}, {secret})) continue;
      Witness w;
      w.target = u;
      w.secrets = {v};
      w.h_key = entropy(d, {key});
      w.h_key_given = conditional_entropy(d, {key}, {secret});
      w.reason = key.to_string() + " is not determined by " + secret.to_string();
      report.witnesses.push_back(std::move(w));
    }
  }
  report.passed = report.witnesses.empty();
  return report;
}

CheckReport check_ki(const Scheme& s, bool exhaustive) {
  return check_indistinguishability(s, exhaustive, false);
}

CheckReport check_ski(const Scheme& s, bool exhaustive) {
  return check_indistinguishability(s, exhaustive, true);
}

CheckReport check_key_independence(const Scheme& s) {
  CheckReport report;
  report.kind = CheckKind::KeyIndependence;
  const auto& g = s.graph();
  const auto& d = s.dist();

  std::vector<VarSet> singletons;
  for (const auto& c : g.classes()) singletons.push_back({VarId::key(c.label)});
  if (is_mutually_independent(d, singletons)) return report;

  report.passed = false;
  ClassSet dependent(g.classes().begin(), g.classes().end());
  const std::vector<ClassId> sorted(dependent.begin(), dependent.end());
  if (sorted.size() <= kMaxCoalitionBits) {
    const std::uint64_t limit = std::uint64_t{1} << sorted.size();
    std::optional<ClassSet> best;
    for (std::size_t level = 2; level <= sorted.size() && !best; ++level) {
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != level) continue;
        ClassSet subset;
        std::vector<VarSet> groups;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
          if (mask >> i & 1U) {
            subset.insert(sorted[i]);
            groups.push_back({VarId::key(sorted[i].label)});
          }
        }
        if (best && !std::lexicographical_compare(subset.begin(), subset.end(), best->begin(),
                                                  best->end())) {
          continue;
        }
        if (!is_mutually_independent(d, groups)) best = std::move(subset);
      }
    }
    if (best) dependent = std::move(*best);
  }

  // With every proper subset independent, K_first depends on the rest.
  Witness w;
  w.target = *dependent.begin();
  dependent.erase(dependent.begin());
  w.keys = dependent;
  const VarId key = VarId::key(w.target.label);
  const VarSet rest = key_vars(w.keys);
  w.h_key = entropy(d, {key});
  w.h_key_given = conditional_entropy(d, {key}, rest);
  w.reason = key.to_string() + " is not independent of " + braced(rest);
  report.witnesses.push_back(std::move(w));
  return report;
}

}  // namespace hkas
