#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkas/rational.hpp"

namespace hkas {

enum class VarKind { Key, Secret, Aux };

/// Random variable name. Serialized as "K:<owner>", "S:<owner>" or "X:<owner>".
struct VarId {
  VarKind kind = VarKind::Key;
  std::string owner;

  static VarId key(std::string owner) { return {VarKind::Key, std::move(owner)}; }
  static VarId secret(std::string owner) { return {VarKind::Secret, std::move(owner)}; }
  static VarId aux(std::string owner) { return {VarKind::Aux, std::move(owner)}; }

  /// Throws Error(ParseError) on anything but the three prefixed forms.
  static VarId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

using VarSet = std::set<VarId>;

/// Outcome value of a single variable: an integer, a text token, or an
/// ordered list of values. Compared structurally.
class Value {
 public:
  using List = std::vector<Value>;

  Value() : data_(std::int64_t{0}) {}
  Value(std::int64_t v) : data_(v) {}                 // NOLINT(google-explicit-constructor)
  Value(int v) : data_(std::int64_t{v}) {}            // NOLINT(google-explicit-constructor)
  Value(std::string v) : data_(std::move(v)) {}       // NOLINT(google-explicit-constructor)
  Value(const char* v) : data_(std::string(v)) {}     // NOLINT(google-explicit-constructor)
  Value(List v) : data_(std::move(v)) {}              // NOLINT(google-explicit-constructor)

  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_list() const { return std::holds_alternative<List>(data_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }
  const List& as_list() const { return std::get<List>(data_); }

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<std::int64_t, std::string, List> data_;
};

/// Finite joint law over named variables with exact probabilities.
///
/// Invariants: every outcome assigns every variable, every probability is
/// strictly positive, probabilities sum to exactly one, outcomes are
/// pairwise distinct. Values are interned per variable, so outcomes are
/// stored as rows of small integer codes.
class JointDistribution {
 public:
  struct Outcome {
    std::vector<Value> values;  // aligned with variables()
    Rational p;
  };

  /// Validating constructor. Throws EmptyVariableSet, VariableMismatch,
  /// ProbabilityError.
  JointDistribution(std::vector<VarId> variables, std::vector<Outcome> support);

  /// Normalizes non-negative weights by their total and drops zero-weight
  /// outcomes. Used by generators; files go through the strict constructor.
  static JointDistribution from_weights(std::vector<VarId> variables,
                                        std::vector<Outcome> weighted);

  const std::vector<VarId>& variables() const { return variables_; }
  std::size_t support_size() const { return probabilities_.size(); }
  const Rational& probability(std::size_t outcome) const { return probabilities_[outcome]; }
  const Value& value(std::size_t outcome, std::size_t var) const {
    return dictionary_[var][code(outcome, var)];
  }
  std::uint32_t code(std::size_t outcome, std::size_t var) const {
    return codes_[outcome * variables_.size() + var];
  }
  std::vector<Outcome> outcomes() const;

  bool has_variable(const VarId& v) const;
  /// Throws UnknownVariable.
  std::size_t index_of(const VarId& v) const;

  /// Same variable set and same law, independent of storage order.
  friend bool operator==(const JointDistribution& a, const JointDistribution& b);

 private:
  JointDistribution() = default;
  void intern(std::vector<Outcome> support);

  std::vector<VarId> variables_;
  std::vector<std::vector<Value>> dictionary_;
  std::vector<std::uint32_t> codes_;
  std::vector<Rational> probabilities_;
};

/// Restriction to `vars`, kept in the distribution's variable order.
/// Throws UnknownVariable, EmptyVariableSet.
JointDistribution marginal(const JointDistribution& d, const VarSet& vars);

/// Shannon entropy in bits of the marginal on `vars`.
double entropy(const JointDistribution& d, const VarSet& vars);

/// H(targets | givens); equals entropy(targets) when givens is empty.
double conditional_entropy(const JointDistribution& d, const VarSet& targets, const VarSet& givens);

/// I(a; b) = H(a) - H(a | b).
double mutual_information(const JointDistribution& d, const VarSet& a, const VarSet& b);

/// I(a; b | c) = H(a | c) - H(a | b, c).
double conditional_mutual_information(const JointDistribution& d, const VarSet& a,
                                      const VarSet& b, const VarSet& c);

// Exact predicates. These never touch floating point.

/// Each positive-probability value of `givens` pins down one value of `targets`.
bool is_functionally_determined(const JointDistribution& d, const VarSet& targets,
                                const VarSet& givens);

/// p(a, b) = p(a) p(b) for every pair of values. Requires disjoint sets.
bool is_independent(const JointDistribution& d, const VarSet& a, const VarSet& b);

/// The joint law of the union factors into the product of group marginals.
bool is_mutually_independent(const JointDistribution& d, const std::vector<VarSet>& groups);

}  // namespace hkas
