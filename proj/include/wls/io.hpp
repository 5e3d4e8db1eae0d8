#pragma once

// JSON formats shared by the CLI and the Python bindings.
//
// Problem file:
//   {
//     "lattice":   "godel" | "product" | "lukasiewicz" | <finite lattice>,
//     "nodes":     ["n1", ...],                 (optional, defaults to n1..nk)
//     "relations": {"R": [["9/10", "0", ...], ...], ...},
//     "family":    ["R", ...],                  (optional, default: every relation but x0)
//     "x0":        "X0"                         (optional)
//   }
//
// Finite lattice:
//   {"chain": "godel" | "lukasiewicz", "size": k}
// or explicit tables
//   {"elements": [...], "order": [[a, b], ...], "otimes": "meet" | [[...]], "residuum": [[...]]}
// where "order" lists pairs a <= b (closed reflexively and transitively).
//
// Unit-interval values are strings "p/q", integers or finite decimals and are
// always written back in reduced "p/q" form ("0" and "1" for the bounds).

#include <filesystem>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "wls/network.hpp"
#include "wls/solver.hpp"

namespace wls::io {

using Json = nlohmann::ordered_json;

using AnyLattice = std::variant<GodelLattice, ProductLattice, LukasiewiczLattice, FiniteLattice>;

/// Throws ParseError / InvalidLattice.
AnyLattice parse_lattice(const Json& j);
Json lattice_to_json(const AnyLattice& lattice);

// ---------------------------------------------------------------------------
// Values and relations.

UnitValue parse_value(const UnitIntervalBase& lat, const Json& j);
FiniteLattice::Element parse_value(const FiniteLattice& lat, const Json& j);
inline std::string format_value(const UnitIntervalBase&, const UnitValue& v) { return v.str(); }
inline std::string format_value(const FiniteLattice& lat, FiniteLattice::Element e) {
  return lat.name_of(e);
}

/// Throws ParseError / UniverseMismatch.
template <ResiduatedLattice L>
ValueOf<L> parse_value_text(const L& lat, const std::string& text) {
  return parse_value(lat, Json(text));
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> parse_relation(const L& lat, const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw ParseError("relation must be an array of rows");
  if (j.size() != expected_size) {
    throw UniverseMismatch("relation has " + std::to_string(j.size()) + " rows, expected " +
                           std::to_string(expected_size));
  }
  std::vector<std::vector<ValueOf<L>>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != expected_size) {
      throw UniverseMismatch("relation row length differs from the number of nodes (" +
                             std::to_string(expected_size) + ")");
    }
    auto& out = rows.emplace_back();
    for (const auto& cell : row) out.push_back(parse_value(lat, cell));
  }
  return FuzzyRelation<ValueOf<L>>::from_rows(rows);
}

template <ResiduatedLattice L>
Json relation_to_json(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  Json out = Json::array();
  for (std::size_t u = 0; u < r.size(); ++u) {
    Json row = Json::array();
    for (std::size_t v = 0; v < r.size(); ++v) row.push_back(format_value(lat, r(u, v)));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Problems.

template <ResiduatedLattice L>
struct Problem {
  using Value = ValueOf<L>;

  L lattice;
  Universe nodes;
  std::vector<std::pair<std::string, FuzzyRelation<Value>>> relations;
  std::vector<std::string> family;
  std::optional<std::string> x0;

  /// Named relation, or the built-ins "identity" and "universal".
  FuzzyRelation<Value> relation(const std::string& name) const {
    if (name == "identity") return identity(lattice, nodes.size());
    if (name == "universal") return universal(lattice, nodes.size());
    for (const auto& [n, r] : relations) {
      if (n == name) return r;
    }
    throw ParseError("no relation named '" + name + "'");
  }

  RelationFamily<Value> family_relations() const {
    RelationFamily<Value> out(nodes.size());
    for (const auto& name : family) out.add(relation(name));
    return out;
  }

  FuzzyNetwork<Value> network() const { return {nodes, family, family_relations()}; }

  friend bool operator==(const Problem&, const Problem&) = default;
};

using AnyProblem = std::variant<Problem<GodelLattice>, Problem<ProductLattice>,
                                Problem<LukasiewiczLattice>, Problem<FiniteLattice>>;

/// Throws ParseError, UniverseMismatch or InvalidLattice on malformed input.
AnyProblem parse_problem(const Json& j);
AnyProblem load_problem(const std::filesystem::path& path);
Json problem_to_json(const AnyProblem& problem);

/// Indented JSON with arrays of scalars (matrix rows, name lists) kept on one line.
std::string pretty(const Json& j);

// ---------------------------------------------------------------------------
// Reports.

template <ResiduatedLattice L>
Json report_to_json(const L& lat, const Universe& nodes, const SolveReport<ValueOf<L>>& report,
                    const std::string& algorithm, SystemKind kind, const ValueOf<L>& degree) {
  Json out;
  out["algorithm"] = algorithm;
  out["kind"] = to_string(kind);
  out["degree"] = format_value(lat, degree);
  out["status"] = to_string(report.status);
  out["iterations"] = report.iterations;
  out["nodes"] = nodes.names();
  out["result"] = relation_to_json(lat, report.result);
  Json eqs = Json::array();
  for (const auto& e : report.step_equalities) eqs.push_back(format_value(lat, e));
  out["step_equalities"] = std::move(eqs);
  out["solution_degree"] = format_value(lat, report.solution_degree);
  if (!report.iterates.empty()) {
    Json trace = Json::array();
    for (const auto& it : report.iterates) trace.push_back(relation_to_json(lat, it));
    out["trace"] = std::move(trace);
  }
  return out;
}

template <ResiduatedLattice L>
Json factor_to_json(const L& lat, const Universe& original, const FactorNetwork<ValueOf<L>>& f) {
  Json out;
  Json blocks = Json::array();
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    Json members = Json::array();
    for (auto u : f.blocks[b]) members.push_back(original.name(u));
    blocks.push_back(Json{{"name", f.nodes.name(b)}, {"members", std::move(members)}});
  }
  out["blocks"] = std::move(blocks);
  Json rels;
  for (std::size_t i = 0; i < f.family.size(); ++i) {
    rels[f.labels[i]] = relation_to_json(lat, f.family[i]);
  }
  out["relations"] = rels.is_null() ? Json::object() : std::move(rels);
  out["preorder"] = relation_to_json(lat, f.preorder);
  return out;
}

}  // namespace wls::io
