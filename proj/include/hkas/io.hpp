#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hkas/access_graph.hpp"
#include "hkas/scheme.hpp"

namespace hkas {

using Json = nlohmann::json;

inline constexpr std::size_t kDefaultMaxSupport = 1'000'000;

/// Reads and parses a JSON file. Throws Error(ParseError).
Json read_json_file(const std::filesystem::path& path);

/// {"classes": [...], "edges": [[from, to], ...]}. Throws Error(ParseError)
/// for shape problems; structural problems surface when the graph is built.
GraphDescription graph_description_from_json(const Json& doc);
AccessGraph graph_from_json(const Json& doc);
Json graph_to_json(const AccessGraph& g);
AccessGraph load_graph_file(const std::filesystem::path& path);

Value value_from_json(const Json& doc);
Json value_to_json(const Value& v);

/// Builds a scheme from a parsed scheme document. The graph comes from the
/// embedded "graph" member, or from `graph_doc` (the resolved "graph_file").
/// When both are present and differ, the embedded graph is used and a
/// message is appended to `warnings`.
///
/// Throws ParseError, VariableMismatch, ProbabilityError, GraphError,
/// SupportTooLarge.
Scheme load_scheme(const Json& scheme_doc, const Json* graph_doc = nullptr,
                   std::vector<std::string>* warnings = nullptr,
                   std::size_t max_support = kDefaultMaxSupport);

/// As load_scheme; "graph_file" is resolved relative to the scheme file.
Scheme load_scheme_file(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr,
                        std::size_t max_support = kDefaultMaxSupport);

/// Self-contained document with the graph embedded.
Json scheme_to_json(const Scheme& s);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string serialize_scheme(const Scheme& s);

/// Rounds to 12 significant digits, the precision of all reported floats.
double round_for_report(double x);

Json witness_to_json(const Witness& w);
Json report_to_json(const CheckReport& r);

}  // namespace hkas
