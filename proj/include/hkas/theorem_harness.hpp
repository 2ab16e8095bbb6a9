#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkas/scheme.hpp"

namespace hkas {

/// Absolute tolerance for every floating entropy equality.
inline constexpr double kEntropyTolerance = 1e-9;

/// One entropy equality lhs = rhs. Where the equality has an exact
/// characterization (independence or functional dependency), `exact` holds
/// its verdict, which is authoritative.
struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  std::optional<bool> exact;

  bool holds() const { return abs_err < kEntropyTolerance && exact.value_or(true); }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool holds() const;
  double max_abs_err() const;
};

/// H(K_{u_1..u_n}) = sum_j H(K_{u_j}) and exact mutual independence of the
/// keys along a well-ordered sequence. Throws PreconditionFailed unless the
/// scheme is KI-secure and the sequence well ordered.
IdentityReport verify_independence_sum(const Scheme& s, const ClassSequence& seq);

/// For a well-ordered sequence of length n + m (1-based, target u_n):
///   H(K_{n+1..n+m} | K_n, S_{1..n-1}) = sum_j H(K_{n+j})
///   H(K_{n+1..n+m} | S_{1..n-1})      = sum_j H(K_{n+j})
///   H(K_n | K_{n+1..n+m}, S_{1..n-1}) = H(K_n)
/// plus H(K_{1..j-1} | S_{1..j-1}) = 0 for 2 <= j <= n. With m = 0 the two
/// sums are empty and only the last two kinds of check are made.
IdentityReport verify_conditional_identities(const Scheme& s, const ClassSequence& seq, std::size_t n,
                                             std::size_t m);

/// Runs the conditional identities on theorem_sequence(u) with n = |F_u| + 1
/// and m = |C_u|, then checks H(K_u | K_{C_u}, S_{F_u}) = H(K_u) against the
/// exact independence predicate.
IdentityReport verify_main_theorem_sequence(const Scheme& s, const ClassId& u);

struct HarnessSummary {
  std::size_t schemes = 0;
  std::size_t ki_pass = 0;
  std::size_t ki_fail = 0;
  std::size_t discrepancies = 0;
  std::size_t key_independence_failures = 0;  // KI passed but keys dependent
  std::size_t identity_checks = 0;
  std::size_t identity_failures = 0;
  double max_abs_err = 0.0;

  bool clean() const {
    return discrepancies == 0 && key_independence_failures == 0 && identity_failures == 0;
  }
};

/// Compares the KI and SKI verdicts (maximal mode) scheme by scheme. The
/// first mismatch throws TheoremViolation carrying the serialized scheme.
HarnessSummary verify_equivalence(std::span<const Scheme> corpus);

/// verify_equivalence plus, for every KI-secure scheme: key independence,
/// the identities along the reversed topological sort (every split n), and
/// the main-theorem sequence of every class.
HarnessSummary validate_corpus(std::span<const Scheme> corpus);

}  // namespace hkas
