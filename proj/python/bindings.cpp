#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hkas/checkers.hpp"
#include "hkas/cli.hpp"
#include "hkas/entropy_expr.hpp"
#include "hkas/error.hpp"
#include "hkas/generators.hpp"
#include "hkas/io.hpp"
#include "hkas/theorem_harness.hpp"

namespace py = pybind11;
using namespace hkas;

namespace {

std::vector<std::string> labels(const ClassSet& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(c.label);
  return out;
}

std::vector<std::string> labels(const ClassSequence& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(c.label);
  return out;
}

ClassSequence sequence(const std::vector<std::string>& xs) { return ClassSequence(xs.begin(), xs.end()); }

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string check_json(const Scheme& s, const std::string& mode, bool exhaustive) {
  CheckReport r;
  if (mode == "correctness") r = check_correctness(s);
  else if (mode == "ki") r = check_ki(s, exhaustive);
  else if (mode == "ski") r = check_ski(s, exhaustive);
  else if (mode == "key-indep") r = check_key_independence(s);
  else throw Error(ErrorCode::InvalidParameter, "unknown check mode '" + mode + "'");
  return report_to_json(r).dump();
}

std::string summary_json(const HarnessSummary& s) {
  Json doc;
  doc["schemes"] = s.schemes;
  doc["ki_pass"] = s.ki_pass;
  doc["ki_fail"] = s.ki_fail;
  doc["discrepancies"] = s.discrepancies;
  doc["key_independence_failures"] = s.key_independence_failures;
  doc["identity_checks"] = s.identity_checks;
  doc["identity_failures"] = s.identity_failures;
  doc["max_abs_err"] = round_for_report(s.max_abs_err);
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_hkas, m) {
  // Leaked on purpose: must outlive the interpreter's module teardown.
  static auto* error = new py::exception<Error>(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error->ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error->ptr(), exc.ptr());
    }
  });

  py::class_<AccessGraph>(m, "Graph")
      .def(py::init([](std::vector<std::string> classes, std::vector<std::pair<std::string, std::string>> edges) {
             return AccessGraph(GraphDescription{std::move(classes), std::move(edges)});
           }),
           py::arg("classes"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("load", [](const std::string& path) { return load_graph_file(path); })
      .def_property_readonly("classes", [](const AccessGraph& g) { return labels(g.classes()); })
      .def("accessible", [](const AccessGraph& g, const std::string& v) { return labels(accessible_set(g, v)); })
      .def("forbidden", [](const AccessGraph& g, const std::string& u) { return labels(forbidden_set(g, u)); })
      .def("ancestors", [](const AccessGraph& g, const std::string& u) { return labels(ancestor_set(g, u)); })
      .def("partition_ok", [](const AccessGraph& g, const std::string& u) { return partition_check(g, u); })
      .def("topological_sort", [](const AccessGraph& g) { return labels(topological_sort(g)); })
      .def("well_ordered_all", [](const AccessGraph& g) { return labels(well_ordered_all(g)); })
      .def("theorem_sequence", [](const AccessGraph& g, const std::string& u) { return labels(theorem_sequence(g, u)); })
      .def("is_well_ordered",
           [](const AccessGraph& g, const std::vector<std::string>& seq) { return is_well_ordered(g, sequence(seq)); });

  py::class_<Scheme>(m, "Scheme")
      .def_static("load", [](const std::string& path) { return load_scheme_file(path); })
      .def_static("from_json", [](const std::string& text) {
        Json doc;
        try {
          doc = Json::parse(text);
        } catch (const Json::exception& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        return load_scheme(doc);
      })
      .def("to_json", &serialize_scheme)
      .def_property_readonly("graph", &Scheme::graph)
      .def_property_readonly("support_size", [](const Scheme& s) { return s.dist().support_size(); })
      .def("__eq__", [](const Scheme& a, const Scheme& b) { return a == b; });

  m.def("gen_trivial", [](const AccessGraph& g, std::uint64_t q) { return gen_trivial(g, q); });
  m.def("gen_leaky", [](const AccessGraph& g, std::uint64_t q, const std::string& target,
                        const std::string& leaker) { return gen_leaky(g, q, target, leaker); });
  m.def("gen_correlated", [](const AccessGraph& g, std::uint64_t q, const std::string& u, const std::string& w) {
    return gen_correlated(g, q, u, w);
  });
  m.def("gen_random_correct",
        [](const AccessGraph& g, std::uint64_t q, std::uint64_t seed) { return gen_random_correct(g, q, seed); });

  m.def("_check", &check_json, py::arg("scheme"), py::arg("mode"), py::arg("exhaustive") = false);
  m.def("entropy", [](const Scheme& s, const std::string& expr) { return evaluate(parse_entropy_expr(expr), s); });
  m.def("_validate", [](const std::vector<Scheme>& corpus) { return summary_json(validate_corpus(corpus)); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
