#include "hkas/access_graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>

#include "hkas/error.hpp"

namespace hkas {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char ch) {
    return ch == ':' || std::isspace(static_cast<unsigned char>(ch));
  });
}

namespace {

// Iterative DFS with colors; returns a witness cycle (first label repeated last)
// or an empty vector when the graph is acyclic.
std::vector<std::string> find_cycle(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<std::size_t>>& out) {
  enum Color : char { kWhite, kGray, kBlack };
  std::vector<Color> color(labels.size(), kWhite);
  std::vector<std::size_t> parent(labels.size(), labels.size());

  for (std::size_t root = 0; root < labels.size(); ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == out[node].size()) {
        color[node] = kBlack;
        stack.pop_back();
        continue;
      }
      std::size_t child = out[node][next++];
      if (color[child] == kGray) {
        std::vector<std::string> cycle{labels[child]};
        std::vector<std::string> back;
        for (std::size_t at = node; at != child; at = parent[at]) back.push_back(labels[at]);
        cycle.insert(cycle.end(), back.rbegin(), back.rend());
        cycle.push_back(labels[child]);
        return cycle;
      }
      if (color[child] == kWhite) {
        color[child] = kGray;
        parent[child] = node;
        stack.emplace_back(child, 0);
      }
    }
  }
  return {};
}

}  // namespace

void validate_graph(const GraphDescription& description) {
  const auto& labels = description.classes;
  if (labels.empty()) {
    throw Error(ErrorCode::EmptyGraph, "graph has no classes");
  }
  std::map<std::string, std::size_t> index;
  for (const auto& label : labels) {
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::InvalidLabel, "invalid class label '" + label + "'");
    }
    if (!index.emplace(label, index.size()).second) {
      throw Error(ErrorCode::DuplicateLabel, "class '" + label + "' listed twice");
    }
  }

  std::vector<std::vector<std::size_t>> out(labels.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [from, to] : description.edges) {
    if (from == to) {
      throw Error(ErrorCode::SelfLoop, "self-loop on '" + from + "'");
    }
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end() || t == index.end()) {
      throw Error(ErrorCode::DanglingEdge, "edge " + from + " -> " + to + " names an unknown class");
    }
    if (!seen.emplace(f->second, t->second).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + from + " -> " + to + " listed twice");
    }
    out[f->second].push_back(t->second);
  }

  auto cycle = find_cycle(labels, out);
  if (!cycle.empty()) {
    throw CycleError(std::move(cycle));
  }
}

AccessGraph::AccessGraph(GraphDescription description) {
  validate_graph(description);
  const std::size_t n = description.classes.size();
  labels_.reserve(n);
  for (auto& label : description.classes) labels_.emplace_back(std::move(label));

  out_.resize(n);
  for (auto& [from, to] : description.edges) {
    std::size_t f = index_of(from);
    std::size_t t = index_of(to);
    out_[f].push_back(t);
    edges_.emplace_back(ClassId(std::move(from)), ClassId(std::move(to)));
  }

  closure_.assign(n * n, 0);
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::size_t> stack{src};
    closure_[src * n + src] = 1;
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t next : out_[node]) {
        if (!closure_[src * n + next]) {
          closure_[src * n + next] = 1;
          stack.push_back(next);
        }
      }
    }
  }
}

bool AccessGraph::contains(const ClassId& c) const {
  return std::find(labels_.begin(), labels_.end(), c) != labels_.end();
}

std::size_t AccessGraph::index_of(const ClassId& c) const {
  auto it = std::find(labels_.begin(), labels_.end(), c);
  if (it == labels_.end()) {
    throw Error(ErrorCode::UnknownClass, "unknown class '" + c.label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool AccessGraph::reaches(const ClassId& upper, const ClassId& lower) const {
  return reaches_index(index_of(upper), index_of(lower));
}

GraphDescription AccessGraph::description() const {
  GraphDescription d;
  for (const auto& c : labels_) d.classes.push_back(c.label);
  for (const auto& [from, to] : edges_) d.edges.emplace_back(from.label, to.label);
  return d;
}

bool operator==(const AccessGraph& a, const AccessGraph& b) {
  if (a.labels_ != b.labels_) return false;
  std::set<std::pair<ClassId, ClassId>> ea(a.edges_.begin(), a.edges_.end());
  std::set<std::pair<ClassId, ClassId>> eb(b.edges_.begin(), b.edges_.end());
  return ea == eb;
}

ClassSet accessible_set(const AccessGraph& g, const ClassId& v) {
  const std::size_t vi = g.index_of(v);
  ClassSet result;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.reaches_index(vi, i)) result.insert(g.classes()[i]);
  }
  return result;
}

ClassSet forbidden_set(const AccessGraph& g, const ClassId& u) {
  const std::size_t ui = g.index_of(u);
  ClassSet result;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g.reaches_index(i, ui)) result.insert(g.classes()[i]);
  }
  return result;
}

ClassSet ancestor_set(const AccessGraph& g, const ClassId& u) {
  const std::size_t ui = g.index_of(u);
  ClassSet result;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != ui && g.reaches_index(i, ui)) result.insert(g.classes()[i]);
  }
  return result;
}

bool partition_check(const AccessGraph& g, const ClassId& u) {
  const ClassSet forbidden = forbidden_set(g, u);
  const ClassSet ancestors = ancestor_set(g, u);
  if (forbidden.count(u) || ancestors.count(u)) return false;
  for (const auto& c : forbidden) {
    if (ancestors.count(c)) return false;
  }
  ClassSet all = forbidden;
  all.insert(ancestors.begin(), ancestors.end());
  all.insert(u);
  return all == ClassSet(g.classes().begin(), g.classes().end());
}

ClassSequence topological_sort(const AccessGraph& g, const ClassSet& subset) {
  const std::size_t n = g.size();
  std::vector<char> member(n, 0);
  for (const auto& c : subset) member[g.index_of(c)] = 1;

  std::vector<std::size_t> in_degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!member[i]) continue;
    for (std::size_t j : g.successors(i)) {
      if (member[j]) ++in_degree[j];
    }
  }

  auto later = [&g](std::size_t a, std::size_t b) { return g.classes()[a] > g.classes()[b]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t i = 0; i < n; ++i) {
    if (member[i] && in_degree[i] == 0) ready.push(i);
  }

  ClassSequence order;
  order.reserve(subset.size());
  while (!ready.empty()) {
    std::size_t node = ready.top();
    ready.pop();
    order.push_back(g.classes()[node]);
    for (std::size_t next : g.successors(node)) {
      if (member[next] && --in_degree[next] == 0) ready.push(next);
    }
  }
  // Unreachable for a validated graph.
  if (order.size() != subset.size()) {
    throw Error(ErrorCode::CycleDetected, "induced subgraph is cyclic");
  }
  return order;
}

ClassSequence topological_sort(const AccessGraph& g) {
  return topological_sort(g, ClassSet(g.classes().begin(), g.classes().end()));
}

bool is_well_ordered(const AccessGraph& g, const ClassSequence& seq) {
  std::vector<std::size_t> idx;
  idx.reserve(seq.size());
  std::set<std::size_t> seen;
  for (const auto& c : seq) {
    std::size_t i = g.index_of(c);
    if (!seen.insert(i).second) {
      throw Error(ErrorCode::DuplicateInSequence, "class '" + c.label + "' repeated in sequence");
    }
    idx.push_back(i);
  }
  // u_i in F_{u_j} for all i < j, i.e. no earlier class reaches a later one.
  for (std::size_t j = 1; j < idx.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.reaches_index(idx[i], idx[j])) return false;
    }
  }
  return true;
}

ClassSequence well_ordered_all(const AccessGraph& g) {
  ClassSequence seq = topological_sort(g);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

ClassSequence theorem_sequence(const AccessGraph& g, const ClassId& u) {
  ClassSequence forbidden = topological_sort(g, forbidden_set(g, u));
  ClassSequence ancestors = topological_sort(g, ancestor_set(g, u));
  ClassSequence seq(forbidden.rbegin(), forbidden.rend());
  seq.push_back(u);
  seq.insert(seq.end(), ancestors.rbegin(), ancestors.rend());
  return seq;
}

}  // namespace hkas
