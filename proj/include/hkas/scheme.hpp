#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkas/access_graph.hpp"
#include "hkas/info_theory.hpp"

namespace hkas {

/// A hierarchical key assignment scheme: an access graph together with the
/// joint law of one key K:u and one private-information variable S:u per class.
class Scheme {
 public:
  /// Throws VariableMismatch unless the distribution's variables are exactly
  /// {K:u, S:u : u in classes}.
  Scheme(AccessGraph graph, JointDistribution dist);

  const AccessGraph& graph() const { return graph_; }
  const JointDistribution& dist() const { return dist_; }

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.graph_ == b.graph_ && a.dist_ == b.dist_;
  }

 private:
  AccessGraph graph_;
  JointDistribution dist_;
};

VarSet key_vars(const ClassSet& classes);
VarSet secret_vars(const ClassSet& classes);

/// An attack on the key of `target` by classes pooling private information
/// (`secrets_held`, drawn from F_target) and leaked keys (`keys_held`, drawn
/// from C_target).
struct CoalitionQuery {
  ClassId target;
  ClassSet secrets_held;
  ClassSet keys_held;
};

/// Throws UnknownClass or InvalidCoalition.
void validate_query(const AccessGraph& g, const CoalitionQuery& q);

/// H(K_target | S_secrets, K_keys); H(K_target) when both sets are empty.
double scheme_query_entropy(const Scheme& s, const CoalitionQuery& q);

enum class CheckKind { Correctness, KI, SKI, KeyIndependence };

std::string_view to_string(CheckKind kind);

struct Witness {
  ClassId target;
  ClassSet secrets;
  ClassSet keys;
  std::string reason;
  double h_key = 0.0;        // H(K_target)
  double h_key_given = 0.0;  // H(K_target | S_secrets, K_keys)
};

struct CheckReport {
  CheckKind kind = CheckKind::Correctness;
  bool passed = true;
  bool exhaustive = false;
  std::vector<Witness> witnesses;
};

}  // namespace hkas
