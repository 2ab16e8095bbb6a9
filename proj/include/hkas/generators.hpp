#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "hkas/io.hpp"
#include "hkas/scheme.hpp"

namespace hkas {

/// splitmix64. Fixed so that a seed reproduces the same scheme bytes everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// All generators take values k in {0, ..., q-1} for each key and set
// S_u = [[v, k_v] for v in A_u], sorted by label. Supports larger than
// `max_support` raise SupportTooLarge; q < 2 raises InvalidParameter.

/// Independent uniform keys; passes correctness, KI and SKI.
Scheme gen_trivial(const AccessGraph& g, std::uint64_t q, std::size_t max_support = kDefaultMaxSupport);

/// gen_trivial with k_target also stored in S_leaker. Requires leaker in
/// F_target (InvalidLeak otherwise).
Scheme gen_leaky(const AccessGraph& g, std::uint64_t q, const ClassId& target, const ClassId& leaker,
                 std::size_t max_support = kDefaultMaxSupport);

/// gen_trivial with K_u forced equal to K_w. Requires u != w (InvalidPair).
Scheme gen_correlated(const AccessGraph& g, std::uint64_t q, const ClassId& u, const ClassId& w,
                      std::size_t max_support = kDefaultMaxSupport);

/// Random key law with secrets as in gen_trivial; always correct.
///
/// The first draw picks uniform independent keys (half the time). Otherwise
/// a second draw picks either a product of random marginals (integer weights
/// in [1, 64] per key value) or an arbitrary joint law (integer weights in
/// [0, 64] per key tuple, zero-weight tuples dropped).
Scheme gen_random_correct(const AccessGraph& g, std::uint64_t q, std::uint64_t seed,
                          std::size_t max_support = kDefaultMaxSupport);

enum class GenKind { Trivial, Leaky, Correlated, RandomCorrect };

struct GenSpec {
  GenKind kind = GenKind::Trivial;
  std::uint64_t q = 2;
  std::uint64_t seed = 0;
  std::optional<ClassId> target;  // leaky
  std::optional<ClassId> leaker;  // leaky
  std::optional<std::pair<ClassId, ClassId>> pair;  // correlated
};

/// Dispatches on spec.kind; missing kind-specific parameters raise InvalidParameter.
Scheme generate(const AccessGraph& g, const GenSpec& spec, std::size_t max_support = kDefaultMaxSupport);

}  // namespace hkas
