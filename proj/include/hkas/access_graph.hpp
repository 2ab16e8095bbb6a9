#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hkas {

/// Label of a security class. Non-empty, no ':' and no whitespace.
struct ClassId {
  std::string label;

  ClassId() = default;
  ClassId(std::string l) : label(std::move(l)) {}  // NOLINT(google-explicit-constructor)
  ClassId(const char* l) : label(l) {}             // NOLINT(google-explicit-constructor)

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

using ClassSet = std::set<ClassId>;
using ClassSequence = std::vector<ClassId>;

/// Unvalidated graph input: an edge {from, to} means `to` is below `from`,
/// i.e. users of `from` may access the data of `to`.
struct GraphDescription {
  std::vector<std::string> classes;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Throws hkas::Error (DuplicateLabel, InvalidLabel, EmptyGraph, SelfLoop,
/// DanglingEdge, DuplicateEdge) or hkas::CycleError.
void validate_graph(const GraphDescription& description);

bool is_valid_label(std::string_view label);

/// Immutable, validated access graph with a precomputed reachability closure.
/// Transitive edges are accepted; only reachability matters.
class AccessGraph {
 public:
  explicit AccessGraph(GraphDescription description);

  std::size_t size() const { return labels_.size(); }
  const std::vector<ClassId>& classes() const { return labels_; }
  const std::vector<std::pair<ClassId, ClassId>>& edges() const { return edges_; }
  bool contains(const ClassId& c) const;

  /// True iff `lower` is reachable from `upper` (reflexive).
  bool reaches(const ClassId& upper, const ClassId& lower) const;

  GraphDescription description() const;

  friend bool operator==(const AccessGraph& a, const AccessGraph& b);

  // Index-level access for the algorithms below.
  std::size_t index_of(const ClassId& c) const;
  const std::vector<std::size_t>& successors(std::size_t i) const { return out_[i]; }
  bool reaches_index(std::size_t upper, std::size_t lower) const {
    return closure_[upper * labels_.size() + lower] != 0;
  }

 private:
  std::vector<ClassId> labels_;
  std::vector<std::pair<ClassId, ClassId>> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<char> closure_;
};

/// A_v: v and every class reachable from v.
ClassSet accessible_set(const AccessGraph& g, const ClassId& v);

/// F_u: classes that cannot reach u.
ClassSet forbidden_set(const AccessGraph& g, const ClassId& u);

/// C_u: classes other than u that reach u.
ClassSet ancestor_set(const AccessGraph& g, const ClassId& u);

/// {u}, F_u, C_u are pairwise disjoint and cover the class set.
bool partition_check(const AccessGraph& g, const ClassId& u);

/// Kahn's algorithm; ties broken by smallest label.
ClassSequence topological_sort(const AccessGraph& g);

/// Topological sort of the subgraph induced by `subset`.
ClassSequence topological_sort(const AccessGraph& g, const ClassSet& subset);

/// Every prefix lies in the forbidden set of the element that follows it.
/// Throws UnknownClass / DuplicateInSequence.
bool is_well_ordered(const AccessGraph& g, const ClassSequence& seq);

/// Reverse of topological_sort(g).
ClassSequence well_ordered_all(const AccessGraph& g);

/// reverse-toposort(F_u) ++ (u) ++ reverse-toposort(C_u).
ClassSequence theorem_sequence(const AccessGraph& g, const ClassId& u);

}  // namespace hkas
