#pragma once

// JSON-in, JSON-out entry points shared by the command line and the Python module.

#include <cstddef>
#include <string>

#include "wls/io.hpp"

namespace wls::api {

using io::Json;

enum class Algorithm { greatest, preorder, equivalence };

struct SolveRequest {
  std::string degree;
  std::string kind = "wls3";
  /// Initial relation name; empty means the problem's x0, else "universal".
  std::string x0;
  std::size_t max_iterations = 1000;
  bool trace = false;
};

struct AggregateRequest {
  std::string degree;
  std::string kind = "wls3";
  std::string mode = "preorder";
  std::size_t max_iterations = 1000;
};

/// Solver report (see io::report_to_json).  Its "status" tells whether the cap was hit.
Json solve(const io::AnyProblem& problem, Algorithm algorithm, const SolveRequest& request);

/// Solution degree of a named relation, formatted as a lattice value.
std::string degree(const io::AnyProblem& problem, const std::string& relation, int kind);

/// Solver report plus a "factor" object when the solver stopped before the cap.
Json aggregate(const io::AnyProblem& problem, const AggregateRequest& request);

}  // namespace wls::api
