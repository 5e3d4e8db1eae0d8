// Thin JSON-text bridge; python/wls/__init__.py converts to and from dicts.

#include <pybind11/pybind11.h>

#include "wls/api.hpp"
#include "wls/oracle.hpp"

namespace py = pybind11;
using wls::io::Json;

namespace {

wls::io::AnyProblem problem_from(const std::string& text) { return wls::io::parse_problem(Json::parse(text)); }

std::string solve(const std::string& problem, const std::string& algorithm, const std::string& degree,
                  const std::string& kind, const std::string& x0, std::size_t max_iterations, bool trace) {
  wls::api::Algorithm a;
  if (algorithm == "greatest") {
    a = wls::api::Algorithm::greatest;
  } else if (algorithm == "preorder") {
    a = wls::api::Algorithm::preorder;
  } else if (algorithm == "equivalence") {
    a = wls::api::Algorithm::equivalence;
  } else {
    throw wls::InvalidArgument("unknown algorithm '" + algorithm + "'");
  }
  if (max_iterations == 0) throw wls::InvalidArgument("max_iter must be positive");
  return wls::api::solve(problem_from(problem), a,
                         {.degree = degree, .kind = kind, .x0 = x0, .max_iterations = max_iterations, .trace = trace})
      .dump();
}

std::string oracle_sweep(const std::string& chain, std::size_t size, std::size_t nodes, std::size_t budget) {
  wls::oracle::SweepOptions opts;
  if (chain == "godel") {
    opts.lattice = wls::FiniteLattice::godel_chain(size);
  } else if (chain == "lukasiewicz") {
    opts.lattice = wls::FiniteLattice::lukasiewicz_chain(size);
  } else {
    throw wls::InvalidArgument("unknown chain '" + chain + "'");
  }
  opts.universe_size = nodes;
  opts.budget = budget;
  const auto r = wls::oracle::exhaustive_sweep(opts);
  return Json{{"solver_cases", r.solver_cases},
              {"solver_mismatches", r.solver_mismatches},
              {"join_closure_checks", r.join_closure_checks},
              {"join_closure_violations", r.join_closure_violations},
              {"agreement_checks", r.agreement_checks},
              {"agreement_violations", r.agreement_violations},
              {"failures", r.failures},
              {"ok", r.ok()}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-text interface to the wls solvers";

  static py::exception<wls::Error> error(m, "WlsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const wls::Error& e) {
      error(e.what());
    } catch (const nlohmann::json::exception& e) {
      error(e.what());
    }
  });

  m.def("solve", &solve, py::arg("problem"), py::arg("algorithm"), py::arg("degree"), py::arg("kind"),
        py::arg("x0"), py::arg("max_iter"), py::arg("trace"));
  m.def(
      "degree",
      [](const std::string& problem, const std::string& relation, int kind) {
        return wls::api::degree(problem_from(problem), relation, kind);
      },
      py::arg("problem"), py::arg("relation"), py::arg("kind"));
  m.def(
      "aggregate",
      [](const std::string& problem, const std::string& degree, const std::string& kind, const std::string& mode,
         std::size_t max_iterations) {
        if (max_iterations == 0) throw wls::InvalidArgument("max_iter must be positive");
        return wls::api::aggregate(problem_from(problem),
                                   {.degree = degree, .kind = kind, .mode = mode, .max_iterations = max_iterations})
            .dump();
      },
      py::arg("problem"), py::arg("degree"), py::arg("kind"), py::arg("mode"), py::arg("max_iter"));
  m.def(
      "canonicalize",
      [](const std::string& problem) { return wls::io::problem_to_json(problem_from(problem)).dump(); },
      py::arg("problem"));
  m.def("oracle_sweep", &oracle_sweep, py::arg("chain"), py::arg("size"), py::arg("nodes"), py::arg("budget"));
}
