#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieinner/suite/commands.hpp"

namespace py = pybind11;
using namespace lieinner;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
py::tuple wrap(const CommandResult& r) { return py::make_tuple(r.output.dump(), r.passed); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("input is not JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact inner ideal computations";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("CRITERION_COUNT") = kCriterionCount;

  m.def("delta", [](const std::string& type, std::size_t rank, const std::vector<std::int64_t>& weight) {
    return wrap(delta_command(type, rank, weight));
  }, py::arg("type"), py::arg("rank") = 0, py::arg("weight") = std::vector<std::int64_t>{});
  m.def("check_inner", [](const std::string& text) { return wrap(check_inner_command(parse(text))); });
  m.def("classify_sl", [](const std::string& text) { return wrap(classify_sl_command(parse(text))); });
  m.def("analyze_embedding", [](const std::string& text) { return wrap(embed_analyze_command(parse(text))); });
  m.def("finitary_demo", [](std::uint64_t seed, std::size_t samples) {
    CommandResult r;
    {
      py::gil_scoped_release release;
      r = finitary_demo_command(seed, samples);
    }
    return wrap(r);
  }, py::arg("seed"), py::arg("samples") = 20);
  m.def("limit_demo", [](const std::string& signature, std::size_t depth, const std::string& kind, std::size_t cap) {
    return wrap(limit_demo_command(signature, depth, kind, cap));
  }, py::arg("signature"), py::arg("depth") = 4, py::arg("kind") = "plain", py::arg("inner_cap") = 16);
  m.def("verify_suite", [](std::uint64_t seed, bool minimal, const std::vector<int>& only, bool large) {
    RunConfig c = minimal ? minimal_config(seed) : RunConfig{};
    c.seed = seed;
    c.only = only;
    c.large = large;
    CommandResult r;
    {
      py::gil_scoped_release release;
      r = verify_suite_command(c);
    }
    return wrap(r);
  }, py::arg("seed") = RunConfig{}.seed, py::arg("minimal") = false, py::arg("only") = std::vector<int>{},
        py::arg("large") = false);
}
