#include "hkas/scheme.hpp"

#include "hkas/error.hpp"

namespace hkas {

Scheme::Scheme(AccessGraph graph, JointDistribution dist)
    : graph_(std::move(graph)), dist_(std::move(dist)) {
  const ClassSet all(graph_.classes().begin(), graph_.classes().end());
  VarSet expected = key_vars(all);
  VarSet secrets = secret_vars(all);
  expected.insert(secrets.begin(), secrets.end());
  const VarSet actual(dist_.variables().begin(), dist_.variables().end());

  for (const auto& v : expected) {
    if (!actual.count(v)) {
      throw Error(ErrorCode::VariableMismatch, "missing variable '" + v.to_string() + "'");
    }
  }
  for (const auto& v : actual) {
    if (!expected.count(v)) {
      throw Error(ErrorCode::VariableMismatch, "unexpected variable '" + v.to_string() + "'");
    }
  }
}

VarSet key_vars(const ClassSet& classes) {
  VarSet out;
  for (const auto& c : classes) out.insert(VarId::key(c.label));
  return out;
}

VarSet secret_vars(const ClassSet& classes) {
  VarSet out;
  for (const auto& c : classes) out.insert(VarId::secret(c.label));
  return out;
}

void validate_query(const AccessGraph& g, const CoalitionQuery& q) {
  const ClassSet forbidden = forbidden_set(g, q.target);
  const ClassSet ancestors = ancestor_set(g, q.target);
  for (const auto& c : q.secrets_held) {
    g.index_of(c);
    if (!forbidden.count(c)) {
      throw Error(ErrorCode::InvalidCoalition,
                  "'" + c.label + "' is not in the forbidden set of '" + q.target.label + "'");
    }
  }
  for (const auto& c : q.keys_held) {
    g.index_of(c);
    if (!ancestors.count(c)) {
      throw Error(ErrorCode::InvalidCoalition,
                  "'" + c.label + "' is not an ancestor of '" + q.target.label + "'");
    }
  }
}

double scheme_query_entropy(const Scheme& s, const CoalitionQuery& q) {
  validate_query(s.graph(), q);
  VarSet givens = secret_vars(q.secrets_held);
  VarSet keys = key_vars(q.keys_held);
  givens.insert(keys.begin(), keys.end());
  return conditional_entropy(s.dist(), {VarId::key(q.target.label)}, givens);
}

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Correctness: return "correctness";
    case CheckKind::KI: return "ki";
    case CheckKind::SKI: return "ski";
    case CheckKind::KeyIndependence: return "key-indep";
  }
  return "unknown";
}

}  // namespace hkas
