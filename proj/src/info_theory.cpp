#include "hkas/info_theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "hkas/error.hpp"

namespace hkas {

VarId VarId::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') {
    throw Error(ErrorCode::ParseError, "malformed variable name '" + std::string(text) + "'");
  }
  std::string owner(text.substr(2));
  if (owner.find(':') != std::string::npos) {
    throw Error(ErrorCode::ParseError, "malformed variable name '" + std::string(text) + "'");
  }
  switch (text[0]) {
    case 'K': return key(std::move(owner));
    case 'S': return secret(std::move(owner));
    case 'X': return aux(std::move(owner));
    default:
      throw Error(ErrorCode::ParseError, "unknown variable kind in '" + std::string(text) + "'");
  }
}

std::string VarId::to_string() const {
  const char* prefix = kind == VarKind::Key ? "K:" : kind == VarKind::Secret ? "S:" : "X:";
  return prefix + owner;
}

std::string Value::to_string() const {
  if (is_int()) return std::to_string(as_int());
  if (is_text()) return "\"" + as_text() + "\"";
  std::string out = "[";
  for (std::size_t i = 0; i < as_list().size(); ++i) {
    if (i) out += ",";
    out += as_list()[i].to_string();
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return a.data_.index() <=> b.data_.index();
  if (a.is_int()) return a.as_int() <=> b.as_int();
  if (a.is_text()) return a.as_text().compare(b.as_text()) <=> 0;
  const auto& la = a.as_list();
  const auto& lb = b.as_list();
  for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i) {
    if (auto c = la[i] <=> lb[i]; c != 0) return c;
  }
  return la.size() <=> lb.size();
}

// ---------------------------------------------------------------------------
// JointDistribution

JointDistribution::JointDistribution(std::vector<VarId> variables, std::vector<Outcome> support)
    : variables_(std::move(variables)) {
  if (variables_.empty()) {
    throw Error(ErrorCode::EmptyVariableSet, "distribution has no variables");
  }
  if (VarSet(variables_.begin(), variables_.end()).size() != variables_.size()) {
    throw Error(ErrorCode::VariableMismatch, "variable listed twice");
  }
  Rational total;
  for (const auto& o : support) {
    if (!o.p.is_positive()) {
      throw Error(ErrorCode::ProbabilityError, "non-positive probability " + o.p.to_string());
    }
    total += o.p;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::ProbabilityError, "probabilities sum to " + total.to_string());
  }
  intern(std::move(support));
}

JointDistribution JointDistribution::from_weights(std::vector<VarId> variables,
                                                  std::vector<Outcome> weighted) {
  Rational total;
  for (const auto& o : weighted) {
    if (o.p < Rational(0)) {
      throw Error(ErrorCode::ProbabilityError, "negative weight " + o.p.to_string());
    }
    total += o.p;
  }
  if (total.is_zero()) {
    throw Error(ErrorCode::ProbabilityError, "all weights are zero");
  }
  std::vector<Outcome> support;
  support.reserve(weighted.size());
  for (auto& o : weighted) {
    if (o.p.is_zero()) continue;
    o.p /= total;
    support.push_back(std::move(o));
  }
  return JointDistribution(std::move(variables), std::move(support));
}

void JointDistribution::intern(std::vector<Outcome> support) {
  const std::size_t width = variables_.size();
  dictionary_.assign(width, {});
  std::vector<std::map<Value, std::uint32_t>> lookup(width);
  codes_.reserve(support.size() * width);
  probabilities_.reserve(support.size());

  std::set<std::vector<std::uint32_t>> rows;
  for (auto& o : support) {
    if (o.values.size() != width) {
      throw Error(ErrorCode::VariableMismatch, "outcome assigns " + std::to_string(o.values.size()) +
                                                   " values for " + std::to_string(width) +
                                                   " variables");
    }
    std::vector<std::uint32_t> row(width);
    for (std::size_t v = 0; v < width; ++v) {
      auto [it, inserted] =
          lookup[v].emplace(o.values[v], static_cast<std::uint32_t>(dictionary_[v].size()));
      if (inserted) dictionary_[v].push_back(std::move(o.values[v]));
      row[v] = it->second;
    }
    if (!rows.insert(row).second) {
      throw Error(ErrorCode::ProbabilityError, "duplicate outcome in support");
    }
    codes_.insert(codes_.end(), row.begin(), row.end());
    probabilities_.push_back(std::move(o.p));
  }
}

std::vector<JointDistribution::Outcome> JointDistribution::outcomes() const {
  std::vector<Outcome> out;
  out.reserve(support_size());
  for (std::size_t o = 0; o < support_size(); ++o) {
    Outcome row;
    row.values.reserve(variables_.size());
    for (std::size_t v = 0; v < variables_.size(); ++v) row.values.push_back(value(o, v));
    row.p = probabilities_[o];
    out.push_back(std::move(row));
  }
  return out;
}

bool JointDistribution::has_variable(const VarId& v) const {
  return std::find(variables_.begin(), variables_.end(), v) != variables_.end();
}

std::size_t JointDistribution::index_of(const VarId& v) const {
  auto it = std::find(variables_.begin(), variables_.end(), v);
  if (it == variables_.end()) {
    throw Error(ErrorCode::UnknownVariable, "unknown variable '" + v.to_string() + "'");
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

bool operator==(const JointDistribution& a, const JointDistribution& b) {
  if (VarSet(a.variables_.begin(), a.variables_.end()) !=
      VarSet(b.variables_.begin(), b.variables_.end())) {
    return false;
  }
  if (a.support_size() != b.support_size()) return false;
  // Canonical form: values keyed by sorted variable order.
  auto canonical = [](const JointDistribution& d) {
    std::vector<std::size_t> order(d.variables_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&d](std::size_t x, std::size_t y) { return d.variables_[x] < d.variables_[y]; });
    std::map<std::vector<Value>, Rational> law;
    for (std::size_t o = 0; o < d.support_size(); ++o) {
      std::vector<Value> row;
      for (std::size_t v : order) row.push_back(d.value(o, v));
      law.emplace(std::move(row), d.probability(o));
    }
    return law;
  };
  return canonical(a) == canonical(b);
}

// ---------------------------------------------------------------------------
// Operators

namespace {

struct RowHash {
  std::size_t operator()(const std::vector<std::uint32_t>& row) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t x : row) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Partition of the support by the values of a subset of columns.
struct Grouping {
  std::vector<std::size_t> group_of;  // per outcome
  std::vector<Rational> mass;         // per group
  std::vector<std::size_t> first;     // representative outcome per group
};

Grouping group_by(const JointDistribution& d, const std::vector<std::size_t>& columns) {
  Grouping g;
  g.group_of.resize(d.support_size());
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, RowHash> index;
  std::vector<std::uint32_t> key(columns.size());
  for (std::size_t o = 0; o < d.support_size(); ++o) {
    for (std::size_t c = 0; c < columns.size(); ++c) key[c] = d.code(o, columns[c]);
    auto [it, inserted] = index.emplace(key, g.mass.size());
    if (inserted) {
      g.mass.emplace_back();
      g.first.push_back(o);
    }
    g.group_of[o] = it->second;
    g.mass[it->second] += d.probability(o);
  }
  return g;
}

std::vector<std::size_t> columns_of(const JointDistribution& d, const VarSet& vars, bool allow_empty) {
  if (vars.empty() && !allow_empty) {
    throw Error(ErrorCode::EmptyVariableSet, "variable set must not be empty");
  }
  std::vector<std::size_t> cols;
  cols.reserve(vars.size());
  for (const auto& v : vars) cols.push_back(d.index_of(v));
  std::sort(cols.begin(), cols.end());
  return cols;
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

double entropy_of(const std::vector<Rational>& masses) {
  double h = 0.0;
  for (const auto& m : masses) {
    double p = m.to_double();
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

}  // namespace

JointDistribution marginal(const JointDistribution& d, const VarSet& vars) {
  auto cols = columns_of(d, vars, false);
  Grouping g = group_by(d, cols);
  std::vector<VarId> variables;
  for (std::size_t c : cols) variables.push_back(d.variables()[c]);
  std::vector<JointDistribution::Outcome> support;
  support.reserve(g.mass.size());
  for (std::size_t k = 0; k < g.mass.size(); ++k) {
    JointDistribution::Outcome o;
    for (std::size_t c : cols) o.values.push_back(d.value(g.first[k], c));
    o.p = g.mass[k];
    support.push_back(std::move(o));
  }
  return JointDistribution(std::move(variables), std::move(support));
}

double entropy(const JointDistribution& d, const VarSet& vars) {
  return entropy_of(group_by(d, columns_of(d, vars, false)).mass);
}

double conditional_entropy(const JointDistribution& d, const VarSet& targets, const VarSet& givens) {
  columns_of(d, targets, false);
  if (givens.empty()) return entropy(d, targets);
  Grouping given = group_by(d, columns_of(d, givens, false));
  Grouping joint = group_by(d, columns_of(d, set_union(targets, givens), false));
  double h = 0.0;
  for (std::size_t k = 0; k < joint.mass.size(); ++k) {
    const Rational& p_given = given.mass[given.group_of[joint.first[k]]];
    // log of the exact conditional p(t | g) <= 1, so every term is >= 0.
    double cond = (joint.mass[k] / p_given).to_double();
    h -= joint.mass[k].to_double() * std::log2(cond);
  }
  return h < 0.0 ? 0.0 : h;
}

double mutual_information(const JointDistribution& d, const VarSet& a, const VarSet& b) {
  columns_of(d, b, false);
  return entropy(d, a) - conditional_entropy(d, a, b);
}

double conditional_mutual_information(const JointDistribution& d, const VarSet& a,
                                      const VarSet& b, const VarSet& c) {
  columns_of(d, b, false);
  return conditional_entropy(d, a, c) - conditional_entropy(d, a, set_union(b, c));
}

bool is_functionally_determined(const JointDistribution& d, const VarSet& targets,
                                const VarSet& givens) {
  Grouping t = group_by(d, columns_of(d, targets, false));
  Grouping g = group_by(d, columns_of(d, givens, false));
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(g.mass.size(), kUnset);
  for (std::size_t o = 0; o < d.support_size(); ++o) {
    std::size_t& slot = image[g.group_of[o]];
    if (slot == kUnset) {
      slot = t.group_of[o];
    } else if (slot != t.group_of[o]) {
      return false;
    }
  }
  return true;
}

bool is_mutually_independent(const JointDistribution& d, const std::vector<VarSet>& groups) {
  VarSet all;
  std::vector<Grouping> parts;
  parts.reserve(groups.size());
  for (const auto& group : groups) {
    for (const auto& v : group) {
      if (!all.insert(v).second) {
        throw Error(ErrorCode::OverlappingVariableSets,
                    "variable '" + v.to_string() + "' appears in two groups");
      }
    }
    parts.push_back(group_by(d, columns_of(d, group, false)));
  }
  if (groups.size() < 2) return true;

  Grouping joint = group_by(d, columns_of(d, all, false));
  // Every combination of group values must occur, so the joint support has
  // exactly the product size; then each joint mass must equal the product.
  std::size_t combinations = 1;
  for (const auto& part : parts) {
    combinations *= part.mass.size();
    if (combinations > joint.mass.size()) return false;
  }
  if (combinations != joint.mass.size()) return false;

  for (std::size_t k = 0; k < joint.mass.size(); ++k) {
    Rational product(1);
    for (const auto& part : parts) product *= part.mass[part.group_of[joint.first[k]]];
    if (product != joint.mass[k]) return false;
  }
  return true;
}

bool is_independent(const JointDistribution& d, const VarSet& a, const VarSet& b) {
  columns_of(d, a, false);
  columns_of(d, b, false);
  return is_mutually_independent(d, {a, b});
}

}  // namespace hkas
