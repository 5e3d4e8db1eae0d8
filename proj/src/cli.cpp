#include "wls/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "wls/api.hpp"
#include "wls/oracle.hpp"

namespace wls::cli {

namespace {

using api::Algorithm;
using io::Json;

struct SolveOptions {
  std::string input;
  std::string output;
  std::string kind = "wls3";
  std::string degree;
  std::string x0;
  std::size_t max_iterations = 1000;
  bool trace = false;
};

struct DegreeOptions {
  std::string input;
  std::string relation;
  int kind = 3;
};

struct AggregateOptions {
  std::string input;
  std::string output;
  std::string kind = "wls3";
  std::string degree;
  std::string mode = "preorder";
  std::size_t max_iterations = 1000;
};

struct OracleOptions {
  std::string lattice = "godel";
  std::size_t size = 3;
  std::size_t nodes = 2;
  std::size_t budget = 1'000'000;
};

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << io::pretty(j) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  file << io::pretty(j) << '\n';
}

bool converged(const Json& report) { return report.at("status") == "converged"; }

int cmd_solve(Algorithm algorithm, const SolveOptions& o, std::ostream& out) {
  const auto j = api::solve(io::load_problem(o.input), algorithm,
                            {.degree = o.degree,
                             .kind = o.kind,
                             .x0 = o.x0,
                             .max_iterations = o.max_iterations,
                             .trace = o.trace});
  emit(j, o.output, out);
  return converged(j) ? ok : not_converged;
}

int cmd_degree(const DegreeOptions& o, std::ostream& out) {
  out << api::degree(io::load_problem(o.input), o.relation, o.kind) << '\n';
  return ok;
}

int cmd_aggregate(const AggregateOptions& o, std::ostream& out) {
  const auto j = api::aggregate(
      io::load_problem(o.input),
      {.degree = o.degree, .kind = o.kind, .mode = o.mode, .max_iterations = o.max_iterations});
  emit(j, o.output, out);
  return j.contains("factor") ? ok : not_converged;
}

int cmd_canonicalize(const std::string& input, const std::string& output, std::ostream& out) {
  emit(io::problem_to_json(io::load_problem(input)), output, out);
  return ok;
}

int cmd_oracle_verify(const OracleOptions& o, std::ostream& out) {
  oracle::SweepOptions opts;
  if (o.lattice == "godel") {
    opts.lattice = FiniteLattice::godel_chain(o.size);
  } else if (o.lattice == "lukasiewicz") {
    opts.lattice = FiniteLattice::lukasiewicz_chain(o.size);
  } else {
    throw InvalidArgument("unknown chain '" + o.lattice + "' (expected godel or lukasiewicz)");
  }
  opts.universe_size = o.nodes;
  opts.budget = o.budget;
  const auto r = oracle::exhaustive_sweep(opts);
  out << "lattice: " << o.lattice << " chain of " << o.size << " elements, " << o.nodes
      << " nodes\n"
      << "solver vs oracle: " << r.solver_cases << " cases, " << r.solver_mismatches
      << " mismatches\n"
      << "join closure: " << r.join_closure_checks << " pairs, " << r.join_closure_violations
      << " violations\n"
      << "membership agreement: " << r.agreement_checks << " checks, " << r.agreement_violations
      << " violations\n";
  for (const auto& f : r.failures) out << "  " << f << '\n';
  out << (r.ok() ? "OK" : "FAILED") << '\n';
  return r.ok() ? ok : input_error;
}

void add_solve_flags(CLI::App& cmd, SolveOptions& o) {
  cmd.add_option("--input", o.input, "Problem file (JSON)")->required();
  cmd.add_option("--output", o.output, "Write the report here instead of stdout");
  cmd.add_option("--kind", o.kind, "System kind: wls1, wls2 or wls3")->capture_default_str();
  cmd.add_option("--degree", o.degree, "Required solution degree, e.g. 4/5")->required();
  cmd.add_option("--x0", o.x0,
                 "Initial relation: identity, universal or a relation name "
                 "(default: the file's x0, else universal)");
  cmd.add_option("--max-iter", o.max_iterations, "Iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--trace", o.trace, "Include every iterate in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly linear systems of fuzzy relation inequalities: solve, measure, aggregate",
               "wls"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Greatest relation meeting the degree");
  add_solve_flags(*solve, solve_opts);
  auto* solve_pre = app.add_subcommand("solve-preorder", "Fuzzy preorder meeting the degree");
  add_solve_flags(*solve_pre, solve_opts);
  auto* solve_eq = app.add_subcommand("solve-equivalence", "Fuzzy equivalence meeting the degree");
  add_solve_flags(*solve_eq, solve_opts);

  DegreeOptions degree_opts;
  auto* degree = app.add_subcommand("degree", "Print the solution degree of a relation");
  degree->add_option("--input", degree_opts.input, "Problem file (JSON)")->required();
  degree->add_option("--relation", degree_opts.relation, "Relation name, identity or universal")
      ->required();
  degree->add_option("--kind", degree_opts.kind, "Degree kind 1..9")
      ->capture_default_str()
      ->check(CLI::Range(1, 9));

  AggregateOptions agg_opts;
  auto* agg = app.add_subcommand("aggregate", "Solve from the universal relation and factor the network");
  agg->add_option("--input", agg_opts.input, "Network file (JSON)")->required();
  agg->add_option("--output", agg_opts.output, "Write the result here instead of stdout");
  agg->add_option("--degree", agg_opts.degree, "Required solution degree")->required();
  agg->add_option("--kind", agg_opts.kind, "System kind: wls1, wls2 or wls3")->capture_default_str();
  agg->add_option("--mode", agg_opts.mode, "preorder or equivalence")->capture_default_str();
  agg->add_option("--max-iter", agg_opts.max_iterations, "Iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string canon_input, canon_output;
  auto* canon = app.add_subcommand("canonicalize", "Rewrite a problem file in canonical form");
  canon->add_option("--input", canon_input, "Problem file (JSON)")->required();
  canon->add_option("--output", canon_output, "Write here instead of stdout");

  OracleOptions oracle_opts;
  auto* verify = app.add_subcommand("oracle-verify",
                                    "Check the solver against brute-force enumeration on a finite chain");
  verify->add_option("--lattice", oracle_opts.lattice, "godel or lukasiewicz")->capture_default_str();
  verify->add_option("--size", oracle_opts.size, "Chain length")
      ->capture_default_str()
      ->check(CLI::Range(2, 16));
  verify->add_option("--nodes", oracle_opts.nodes, "Universe size")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  verify->add_option("--budget", oracle_opts.budget, "Maximum number of relations to enumerate")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*solve) return cmd_solve(Algorithm::greatest, solve_opts, out);
    if (*solve_pre) return cmd_solve(Algorithm::preorder, solve_opts, out);
    if (*solve_eq) return cmd_solve(Algorithm::equivalence, solve_opts, out);
    if (*degree) return cmd_degree(degree_opts, out);
    if (*agg) return cmd_aggregate(agg_opts, out);
    if (*canon) return cmd_canonicalize(canon_input, canon_output, out);
    if (*verify) return cmd_oracle_verify(oracle_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace wls::cli
