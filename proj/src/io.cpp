#include "wls/io.hpp"

#include <algorithm>
#include <fstream>

namespace wls::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

FiniteLattice::Table element_table(const Json& j, const std::vector<std::string>& names,
                                   const char* what) {
  auto index = [&](const Json& cell) -> std::size_t {
    if (!cell.is_string()) throw ParseError(std::string(what) + " entries must be element names");
    const auto s = cell.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == s) return i;
    }
    throw ParseError(std::string(what) + " references unknown element '" + s + "'");
  };
  if (!j.is_array() || j.size() != names.size()) {
    throw ParseError(std::string(what) + " must be a square table over the elements");
  }
  FiniteLattice::Table t;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != names.size()) {
      throw ParseError(std::string(what) + " must be a square table over the elements");
    }
    auto& out = t.emplace_back();
    for (const auto& cell : row) out.push_back(index(cell));
  }
  return t;
}

FiniteLattice parse_finite(const Json& j) {
  if (j.contains("chain")) {
    const auto kind = require(j, "chain").get<std::string>();
    const auto& size = require(j, "size");
    if (!size.is_number_unsigned()) throw ParseError("chain size must be a positive integer");
    const auto n = size.get<std::size_t>();
    if (kind == "godel") return FiniteLattice::godel_chain(n);
    if (kind == "lukasiewicz") return FiniteLattice::lukasiewicz_chain(n);
    throw ParseError("unknown chain kind '" + kind + "'");
  }

  auto names = string_list(require(j, "elements"), "elements");
  const std::size_t n = names.size();
  auto idx = [&](const Json& cell) -> std::size_t {
    const auto s = cell.is_string() ? cell.get<std::string>() : std::string{};
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i] == s) return i;
    }
    throw ParseError("order references unknown element '" + cell.dump() + "'");
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
  const auto& order = require(j, "order");
  if (!order.is_array()) throw ParseError("order must be a list of [a, b] pairs");
  for (const auto& pair : order) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("order must be a list of [a, b] pairs");
    leq[idx(pair[0])][idx(pair[1])] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a][k] && leq[k][b]) leq[a][b] = true;
      }
    }
  }

  FiniteLattice::Table otimes;
  const auto& ot = require(j, "otimes");
  if (ot.is_string()) {
    if (ot.get<std::string>() != "meet") throw ParseError("otimes must be a table or \"meet\"");
    // Greatest lower bounds straight from the order; the constructor re-validates.
    otimes.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::optional<std::size_t> glb;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[c][a] && leq[c][b] && (!glb || leq[*glb][c])) glb = c;
        }
        if (!glb) throw InvalidLattice("elements lack a meet");
        otimes[a][b] = *glb;
      }
    }
  } else {
    otimes = element_table(ot, names, "otimes");
  }

  std::optional<FiniteLattice::Table> residuum;
  if (j.contains("residuum")) residuum = element_table(j.at("residuum"), names, "residuum");
  return FiniteLattice(std::move(names), std::move(leq), std::move(otimes), std::move(residuum));
}

std::vector<std::string> default_node_names(std::size_t n) { return Universe::numbered(n).names(); }

template <ResiduatedLattice L>
Problem<L> parse_problem_on(L lattice, const Json& j) {
  Problem<L> p{std::move(lattice), Universe{}, {}, {}, std::nullopt};
  const auto& rels = require(j, "relations");
  if (!rels.is_object() || rels.empty()) throw ParseError("relations must be a non-empty object");

  std::size_t n = 0;
  if (j.contains("nodes")) {
    p.nodes = Universe(string_list(j.at("nodes"), "nodes"));
    n = p.nodes.size();
  } else {
    const auto& first = rels.begin().value();
    if (!first.is_array() || first.empty()) throw ParseError("relations must be non-empty matrices");
    n = first.size();
    p.nodes = Universe(default_node_names(n));
  }

  for (const auto& [name, matrix] : rels.items()) {
    if (name == "identity" || name == "universal") {
      throw ParseError("'" + name + "' is reserved for the built-in relation");
    }
    try {
      p.relations.emplace_back(name, parse_relation(p.lattice, matrix, n));
    } catch (const Error& e) {
      throw ParseError("relation '" + name + "': " + e.what());
    }
  }

  if (j.contains("x0")) {
    p.x0 = j.at("x0").get<std::string>();
    p.relation(*p.x0);
  }
  if (j.contains("family")) {
    p.family = string_list(j.at("family"), "family");
    for (const auto& name : p.family) p.relation(name);
  } else {
    for (const auto& [name, r] : p.relations) {
      if (!p.x0 || name != *p.x0) p.family.push_back(name);
    }
  }
  return p;
}

}  // namespace

UnitValue parse_value(const UnitIntervalBase&, const Json& j) {
  if (j.is_string()) return UnitValue::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v == 0 || v == 1) return v == 0 ? UnitValue::zero() : UnitValue::one();
  }
  throw ParseError("value " + j.dump() + " is not an exact string such as \"9/10\"");
}

FiniteLattice::Element parse_value(const FiniteLattice& lat, const Json& j) {
  if (!j.is_string()) throw ParseError("value " + j.dump() + " must be an element name");
  return lat.element(j.get<std::string>());
}

AnyLattice parse_lattice(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "godel") return GodelLattice{};
    if (name == "product") return ProductLattice{};
    if (name == "lukasiewicz") return LukasiewiczLattice{};
    throw ParseError("unknown lattice '" + name + "' (expected godel, product or lukasiewicz)");
  }
  if (j.is_object()) return parse_finite(j);
  throw ParseError("lattice must be a name or a finite-lattice object");
}

Json lattice_to_json(const AnyLattice& lattice) {
  return std::visit(
      [](const auto& lat) -> Json {
        using L = std::decay_t<decltype(lat)>;
        if constexpr (std::is_same_v<L, FiniteLattice>) {
          const auto& names = lat.names();
          Json order = Json::array();
          for (auto a : lat.elements()) {
            for (auto b : lat.elements()) {
              if (a != b && lat.leq(a, b)) order.push_back(Json::array({names[a.index], names[b.index]}));
            }
          }
          auto table = [&](const FiniteLattice::Table& t) {
            Json out = Json::array();
            for (const auto& row : t) {
              Json r = Json::array();
              for (auto v : row) r.push_back(names[v]);
              out.push_back(std::move(r));
            }
            return out;
          };
          Json out;
          out["elements"] = names;
          out["order"] = std::move(order);
          out["otimes"] = table(lat.otimes_table());
          out["residuum"] = table(lat.residuum_table());
          return out;
        } else {
          return lat.name();
        }
      },
      lattice);
}

AnyProblem parse_problem(const Json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  auto lattice = parse_lattice(require(j, "lattice"));
  return std::visit([&](auto lat) -> AnyProblem { return parse_problem_on(std::move(lat), j); },
                    std::move(lattice));
}

AnyProblem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_problem(j);
}

namespace {

bool is_flat(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void write_pretty(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  if (j.is_array() && (j.empty() || is_flat(j))) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += ']';
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_pretty(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + ']';
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      write_pretty(out, value, depth + 1);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + '}';
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::string out;
  write_pretty(out, j, 0);
  return out;
}

Json problem_to_json(const AnyProblem& problem) {
  return std::visit(
      [](const auto& p) {
        Json out;
        out["lattice"] = lattice_to_json(AnyLattice(p.lattice));
        out["nodes"] = p.nodes.names();
        Json rels = Json::object();
        for (const auto& [name, r] : p.relations) rels[name] = relation_to_json(p.lattice, r);
        out["relations"] = std::move(rels);
        out["family"] = p.family;
        if (p.x0) out["x0"] = *p.x0;
        return out;
      },
      problem);
}

}  // namespace wls::io
