#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oidal/engine.hpp"

namespace py = pybind11;
using namespace oidal;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
      return d;
    }
    case nlohmann::ordered_json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(json_to_py(v));
      return l;
    }
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

py::dict run(const std::string& command, const std::string& fixture_dir,
             const std::string& mode, const std::string& suite, const std::string& target,
             const std::string& left, const std::string& right, bool strict_iso,
             std::size_t max_size) {
  RunOptions opts;
  opts.fixture_dir = fixture_dir;
  opts.mode = mode;
  opts.suite = suite;
  opts.target = target;
  opts.left = left;
  opts.right = right;
  opts.strict_iso = strict_iso;
  opts.max_size = max_size;
  RunResult res = run_command(command, opts);
  py::dict out;
  out["exit_code"] = res.exit_code;
  out["report"] = json_to_py(res.report);
  return out;
}

}  // namespace

PYBIND11_MODULE(_oidal, m) {
  m.doc() = "Finite-category engine for monoidal monad liftings";

  m.def("run", &run, py::arg("command"), py::arg("fixture_dir") = "fixtures",
        py::arg("mode") = "", py::arg("suite") = "", py::arg("target") = "",
        py::arg("left") = "", py::arg("right") = "", py::arg("strict_iso") = false,
        py::arg("max_size") = 0,
        "Run an engine command (check | em | lift | laws | coeq | report) and "
        "return its exit code and JSON report.");

  m.def(
      "check",
      [](const std::string& dir) { return run("check", dir, "", "", "", "", "", false, 0); },
      py::arg("fixture_dir") = "fixtures");
  m.def(
      "em",
      [](const std::string& dir, const std::string& monad) {
        return run("em", dir, "", "", monad, "", "", false, 0);
      },
      py::arg("fixture_dir") = "fixtures", py::arg("monad") = "");
  m.def(
      "lift",
      [](const std::string& dir, const std::string& mode, const std::string& monad) {
        return run("lift", dir, mode, "", monad, "", "", false, 0);
      },
      py::arg("fixture_dir") = "fixtures", py::arg("mode") = "u", py::arg("monad") = "");
  m.def(
      "laws",
      [](const std::string& dir, const std::string& suite, bool strict_iso) {
        return run("laws", dir, "", suite, "", "", "", strict_iso, 0);
      },
      py::arg("fixture_dir") = "fixtures", py::arg("suite") = "K",
      py::arg("strict_iso") = false);
  m.def(
      "coeq",
      [](const std::string& dir, const std::string& category, const std::string& left,
         const std::string& right) {
        return run("coeq", dir, "", "", category, left, right, false, 0);
      },
      py::arg("fixture_dir") = "fixtures", py::arg("category"), py::arg("left"),
      py::arg("right"));

  m.attr("__version__") = "0.1.0";
}
