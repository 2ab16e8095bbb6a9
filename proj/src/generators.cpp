#include "hkas/generators.hpp"

#include <map>

#include "hkas/error.hpp"

namespace hkas {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

using KeyTuple = std::vector<std::uint64_t>;

// q^n, or throws SupportTooLarge once it exceeds max_support.
std::size_t support_count(std::uint64_t q, std::size_t n, std::size_t max_support) {
  if (q < 2) throw Error(ErrorCode::InvalidParameter, "key space size q must be at least 2");
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > max_support / q) {
      throw Error(ErrorCode::SupportTooLarge, "q^|V| exceeds the support limit " + std::to_string(max_support));
    }
    count *= q;
  }
  if (count > max_support) {
    throw Error(ErrorCode::SupportTooLarge, "q^|V| exceeds the support limit " + std::to_string(max_support));
  }
  return count;
}

// Every tuple in {0..q-1}^n, first coordinate most significant.
std::vector<KeyTuple> all_tuples(std::uint64_t q, std::size_t n, std::size_t max_support) {
  const std::size_t count = support_count(q, n, max_support);
  std::vector<KeyTuple> tuples;
  tuples.reserve(count);
  KeyTuple current(n, 0);
  for (std::size_t i = 0; i < count; ++i) {
    tuples.push_back(current);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++current[pos] < q) break;
      current[pos] = 0;
    }
  }
  return tuples;
}

// Secret contents per class: the classes whose keys S_u lists.
using SecretLayout = std::vector<ClassSet>;

SecretLayout trivial_layout(const AccessGraph& g) {
  SecretLayout layout;
  for (const auto& c : g.classes()) layout.push_back(accessible_set(g, c));
  return layout;
}

std::vector<VarId> scheme_variables(const AccessGraph& g) {
  std::vector<VarId> vars;
  for (const auto& c : g.classes()) {
    vars.push_back(VarId::key(c.label));
    vars.push_back(VarId::secret(c.label));
  }
  return vars;
}

JointDistribution::Outcome make_outcome(const AccessGraph& g, const SecretLayout& layout,
                                        const KeyTuple& keys, Rational weight) {
  JointDistribution::Outcome o;
  o.values.reserve(2 * g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    o.values.emplace_back(static_cast<std::int64_t>(keys[i]));
    Value::List secret;
    for (const auto& member : layout[i]) {
      secret.push_back(Value::List{Value(member.label),
                                   Value(static_cast<std::int64_t>(keys[g.index_of(member)]))});
    }
    o.values.emplace_back(std::move(secret));
  }
  o.p = std::move(weight);
  return o;
}

Scheme build(const AccessGraph& g, const SecretLayout& layout, const std::vector<KeyTuple>& tuples,
             std::vector<Rational> weights) {
  std::vector<JointDistribution::Outcome> outcomes;
  outcomes.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    outcomes.push_back(make_outcome(g, layout, tuples[t], std::move(weights[t])));
  }
  return Scheme(g, JointDistribution::from_weights(scheme_variables(g), std::move(outcomes)));
}

Scheme uniform_scheme(const AccessGraph& g, const SecretLayout& layout, std::uint64_t q,
                      std::size_t max_support) {
  auto tuples = all_tuples(q, g.size(), max_support);
  return build(g, layout, tuples, std::vector<Rational>(tuples.size(), Rational(1)));
}

}  // namespace

Scheme gen_trivial(const AccessGraph& g, std::uint64_t q, std::size_t max_support) {
  return uniform_scheme(g, trivial_layout(g), q, max_support);
}

Scheme gen_leaky(const AccessGraph& g, std::uint64_t q, const ClassId& target, const ClassId& leaker,
                 std::size_t max_support) {
  if (!forbidden_set(g, target).count(leaker)) {
    g.index_of(leaker);
    throw Error(ErrorCode::InvalidLeak,
                "'" + leaker.label + "' is not in the forbidden set of '" + target.label + "'");
  }
  SecretLayout layout = trivial_layout(g);
  layout[g.index_of(leaker)].insert(target);
  return uniform_scheme(g, layout, q, max_support);
}

Scheme gen_correlated(const AccessGraph& g, std::uint64_t q, const ClassId& u, const ClassId& w,
                      std::size_t max_support) {
  const std::size_t ui = g.index_of(u);
  const std::size_t wi = g.index_of(w);
  if (ui == wi) throw Error(ErrorCode::InvalidPair, "correlated pair needs two distinct classes");

  auto free_tuples = all_tuples(q, g.size() - 1, max_support);
  std::vector<KeyTuple> tuples;
  tuples.reserve(free_tuples.size());
  for (const auto& free : free_tuples) {
    // Drop coordinate ui from the free tuple, then copy k_w into it.
    KeyTuple keys(g.size());
    for (std::size_t i = 0, j = 0; i < g.size(); ++i) {
      if (i != ui) keys[i] = free[j++];
    }
    keys[ui] = keys[wi];
    tuples.push_back(std::move(keys));
  }
  return build(g, trivial_layout(g), tuples, std::vector<Rational>(tuples.size(), Rational(1)));
}

Scheme gen_random_correct(const AccessGraph& g, std::uint64_t q, std::uint64_t seed,
                          std::size_t max_support) {
  SplitMix64 rng(seed);
  auto tuples = all_tuples(q, g.size(), max_support);
  std::vector<Rational> weights;
  weights.reserve(tuples.size());

  if ((rng.next() >> 63) == 0) {
    weights.assign(tuples.size(), Rational(1));
  } else if ((rng.next() >> 63) == 0) {
    std::vector<std::vector<std::int64_t>> marginal(g.size(), std::vector<std::int64_t>(q));
    for (auto& per_key : marginal) {
      for (auto& m : per_key) m = static_cast<std::int64_t>(1 + rng.below(64));
    }
    for (const auto& keys : tuples) {
      Rational w(1);
      for (std::size_t i = 0; i < g.size(); ++i) w *= Rational(marginal[i][keys[i]]);
      weights.push_back(std::move(w));
    }
  } else {
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      weights.emplace_back(static_cast<std::int64_t>(rng.below(65)));
    }
    bool any = false;
    for (const auto& w : weights) any = any || !w.is_zero();
    if (!any) weights.front() = Rational(1);
  }
  return build(g, trivial_layout(g), tuples, std::move(weights));
}

Scheme generate(const AccessGraph& g, const GenSpec& spec, std::size_t max_support) {
  switch (spec.kind) {
    case GenKind::Trivial:
      return gen_trivial(g, spec.q, max_support);
    case GenKind::Leaky:
      if (!spec.target || !spec.leaker) {
        throw Error(ErrorCode::InvalidParameter, "leaky generation needs a target and a leaker");
      }
      return gen_leaky(g, spec.q, *spec.target, *spec.leaker, max_support);
    case GenKind::Correlated:
      if (!spec.pair) throw Error(ErrorCode::InvalidParameter, "correlated generation needs a class pair");
      return gen_correlated(g, spec.q, spec.pair->first, spec.pair->second, max_support);
    case GenKind::RandomCorrect:
      return gen_random_correct(g, spec.q, spec.seed, max_support);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown generator kind");
}

}  // namespace hkas
