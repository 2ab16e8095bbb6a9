#include "hkas/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hkas/error.hpp"

namespace hkas {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

GraphDescription graph_description_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array()) {
    throw Error(ErrorCode::ParseError, "graph document needs a \"classes\" array");
  }
  GraphDescription d;
  for (const auto& c : doc["classes"]) {
    if (!c.is_string()) throw Error(ErrorCode::ParseError, "class labels must be strings");
    d.classes.push_back(c.get<std::string>());
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw Error(ErrorCode::ParseError, "each edge must be a [from, to] pair of labels");
      }
      d.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return d;
}

AccessGraph graph_from_json(const Json& doc) { return AccessGraph(graph_description_from_json(doc)); }

Json graph_to_json(const AccessGraph& g) {
  Json doc;
  doc["classes"] = Json::array();
  for (const auto& c : g.classes()) doc["classes"].push_back(c.label);
  doc["edges"] = Json::array();
  for (const auto& [from, to] : g.edges()) doc["edges"].push_back({from.label, to.label});
  return doc;
}

AccessGraph load_graph_file(const std::filesystem::path& path) {
  return graph_from_json(read_json_file(path));
}

Value value_from_json(const Json& doc) {
  if (doc.is_number_integer()) return Value(doc.get<std::int64_t>());
  if (doc.is_string()) return Value(doc.get<std::string>());
  if (doc.is_array()) {
    Value::List items;
    items.reserve(doc.size());
    for (const auto& item : doc) items.push_back(value_from_json(item));
    return Value(std::move(items));
  }
  throw Error(ErrorCode::ParseError, "values must be integers, strings or lists, got " + doc.dump());
}

Json value_to_json(const Value& v) {
  if (v.is_int()) return v.as_int();
  if (v.is_text()) return v.as_text();
  Json items = Json::array();
  for (const auto& item : v.as_list()) items.push_back(value_to_json(item));
  return items;
}

namespace {

Rational probability_from_json(const Json& doc) {
  if (doc.is_number_integer()) return Rational(doc.get<std::int64_t>());
  if (doc.is_string()) {
    try {
      return Rational::parse(doc.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  throw Error(ErrorCode::ParseError, "probability must be \"num/den\" or an integer, got " + doc.dump());
}

JointDistribution distribution_from_json(const Json& support, std::size_t max_support) {
  if (!support.is_array() || support.empty()) {
    throw Error(ErrorCode::ParseError, "\"support\" must be a non-empty array");
  }
  if (support.size() > max_support) {
    throw Error(ErrorCode::SupportTooLarge, "support has " + std::to_string(support.size()) +
                                                " outcomes, limit is " + std::to_string(max_support));
  }

  std::vector<VarId> variables;
  std::map<std::string, std::size_t> column;
  std::vector<JointDistribution::Outcome> outcomes;
  outcomes.reserve(support.size());
  for (const auto& entry : support) {
    if (!entry.is_object() || !entry.contains("assignment") || !entry["assignment"].is_object() ||
        !entry.contains("p")) {
      throw Error(ErrorCode::ParseError, "support entries need \"assignment\" and \"p\"");
    }
    const Json& assignment = entry["assignment"];
    if (variables.empty()) {
      for (const auto& [name, value] : assignment.items()) {
        column.emplace(name, variables.size());
        variables.push_back(VarId::parse(name));
      }
    }
    if (assignment.size() != variables.size()) {
      throw Error(ErrorCode::VariableMismatch, "outcome assigns a different variable set");
    }
    JointDistribution::Outcome o;
    o.values.resize(variables.size());
    for (const auto& [name, value] : assignment.items()) {
      auto it = column.find(name);
      if (it == column.end()) {
        throw Error(ErrorCode::VariableMismatch, "outcome assigns unexpected variable '" + name + "'");
      }
      o.values[it->second] = value_from_json(value);
    }
    o.p = probability_from_json(entry["p"]);
    outcomes.push_back(std::move(o));
  }
  return JointDistribution(std::move(variables), std::move(outcomes));
}

}  // namespace

Scheme load_scheme(const Json& scheme_doc, const Json* graph_doc, std::vector<std::string>* warnings,
                   std::size_t max_support) {
  if (!scheme_doc.is_object()) throw Error(ErrorCode::ParseError, "scheme document must be an object");

  const Json* chosen = nullptr;
  if (scheme_doc.contains("graph")) {
    chosen = &scheme_doc["graph"];
    if (graph_doc != nullptr && *graph_doc != *chosen && warnings != nullptr) {
      warnings->push_back("embedded graph differs from graph_file; using the embedded graph");
    }
  } else if (graph_doc != nullptr) {
    chosen = graph_doc;
  } else {
    throw Error(ErrorCode::ParseError, "scheme document has neither \"graph\" nor a resolved \"graph_file\"");
  }

  GraphDescription description = graph_description_from_json(*chosen);
  std::optional<AccessGraph> graph;
  try {
    graph.emplace(std::move(description));
  } catch (const Error& e) {
    throw Error(ErrorCode::GraphError, e.what());
  }

  if (!scheme_doc.contains("support")) throw Error(ErrorCode::ParseError, "scheme document has no \"support\"");
  return Scheme(std::move(*graph), distribution_from_json(scheme_doc["support"], max_support));
}

Scheme load_scheme_file(const std::filesystem::path& path, std::vector<std::string>* warnings,
                        std::size_t max_support) {
  Json doc = read_json_file(path);
  std::optional<Json> graph_doc;
  if (doc.is_object() && doc.contains("graph_file")) {
    if (!doc["graph_file"].is_string()) throw Error(ErrorCode::ParseError, "\"graph_file\" must be a path");
    std::filesystem::path graph_path = doc["graph_file"].get<std::string>();
    if (graph_path.is_relative()) graph_path = path.parent_path() / graph_path;
    graph_doc = read_json_file(graph_path);
  }
  return load_scheme(doc, graph_doc ? &*graph_doc : nullptr, warnings, max_support);
}

Json scheme_to_json(const Scheme& s) {
  Json doc;
  doc["graph"] = graph_to_json(s.graph());
  Json support = Json::array();
  const auto& d = s.dist();
  for (std::size_t o = 0; o < d.support_size(); ++o) {
    Json assignment = Json::object();
    for (std::size_t v = 0; v < d.variables().size(); ++v) {
      assignment[d.variables()[v].to_string()] = value_to_json(d.value(o, v));
    }
    support.push_back({{"assignment", std::move(assignment)}, {"p", d.probability(o).to_string()}});
  }
  doc["support"] = std::move(support);
  return doc;
}

std::string serialize_scheme(const Scheme& s) { return scheme_to_json(s).dump(2) + "\n"; }

double round_for_report(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  double rounded = std::strtod(buffer, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

Json witness_to_json(const Witness& w) {
  Json doc;
  doc["class"] = w.target.label;
  doc["secrets"] = Json::array();
  for (const auto& c : w.secrets) doc["secrets"].push_back(c.label);
  doc["keys"] = Json::array();
  for (const auto& c : w.keys) doc["keys"].push_back(c.label);
  doc["reason"] = w.reason;
  doc["h_key"] = round_for_report(w.h_key);
  doc["h_key_given"] = round_for_report(w.h_key_given);
  return doc;
}

Json report_to_json(const CheckReport& r) {
  Json doc;
  doc["kind"] = std::string(to_string(r.kind));
  doc["passed"] = r.passed;
  doc["exhaustive"] = r.exhaustive;
  doc["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) doc["witnesses"].push_back(witness_to_json(w));
  return doc;
}

}  // namespace hkas
