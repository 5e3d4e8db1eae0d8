#include "wls/api.hpp"

namespace wls::api {

namespace {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::greatest:
      return "greatest";
    case Algorithm::preorder:
      return "preorder";
    case Algorithm::equivalence:
      return "equivalence";
  }
  return "?";
}

}  // namespace

Json solve(const io::AnyProblem& problem, Algorithm algorithm, const SolveRequest& request) {
  const auto kind = parse_system_kind(request.kind);
  return std::visit(
      [&](const auto& p) {
        const auto& lat = p.lattice;
        const std::string x0 = !request.x0.empty() ? request.x0 : p.x0.value_or("universal");
        SolverConfig<typename std::decay_t<decltype(p)>::Value> cfg{
            .degree = io::parse_value_text(lat, request.degree), .bound = p.relation(x0), .kind = kind};
        cfg.max_iterations = request.max_iterations;
        cfg.trace = request.trace;
        const auto family = p.family_relations();
        const auto report = algorithm == Algorithm::greatest   ? solve_greatest(lat, family, cfg)
                            : algorithm == Algorithm::preorder ? solve_preorder(lat, family, cfg)
                                                               : solve_equivalence(lat, family, cfg);
        return io::report_to_json(lat, p.nodes, report, algorithm_name(algorithm), kind, cfg.degree);
      },
      problem);
}

std::string degree(const io::AnyProblem& problem, const std::string& relation, int kind) {
  return std::visit(
      [&](const auto& p) {
        return io::format_value(p.lattice, sd(p.lattice, kind, p.family_relations(), p.relation(relation)));
      },
      problem);
}

Json aggregate(const io::AnyProblem& problem, const AggregateRequest& request) {
  const auto kind = parse_system_kind(request.kind);
  AggregateMode mode;
  if (request.mode == "preorder") {
    mode = AggregateMode::preorder;
  } else if (request.mode == "equivalence") {
    mode = AggregateMode::equivalence;
  } else {
    throw InvalidArgument("unknown mode '" + request.mode + "' (expected preorder or equivalence)");
  }
  return std::visit(
      [&](const auto& p) {
        const auto& lat = p.lattice;
        const auto degree = io::parse_value_text(lat, request.degree);
        const auto res = wls::aggregate(lat, p.network(), degree, kind, mode, request.max_iterations);
        auto j = io::report_to_json(lat, p.nodes, res.report, request.mode, kind, degree);
        if (res.network) j["factor"] = io::factor_to_json(lat, p.nodes, *res.network);
        return j;
      },
      problem);
}

}  // namespace wls::api
