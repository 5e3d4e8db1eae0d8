#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wls/solver.hpp"

namespace wls {

/// Nodes plus one labelled relation per kind of connection.
template <class V>
struct FuzzyNetwork {
  Universe nodes;
  std::vector<std::string> labels;
  RelationFamily<V> family;

  /// Throws UniverseMismatch if the pieces disagree in size.
  FuzzyNetwork(Universe nodes_, std::vector<std::string> labels_, RelationFamily<V> family_)
      : nodes(std::move(nodes_)), labels(std::move(labels_)), family(std::move(family_)) {
    if (family.universe_size() != nodes.size()) {
      throw UniverseMismatch("network family does not match its node list");
    }
    if (labels.size() != family.size()) throw UniverseMismatch("one label per relation is required");
  }
};

/// Quotient of a network by the value-1 classes of a preorder's natural equivalence.
template <class V>
struct FactorNetwork {
  /// Member indices of each block, in increasing order; blocks ordered by first member.
  std::vector<std::vector<std::size_t>> blocks;
  /// Block of every original node.
  std::vector<std::size_t> block_of;
  /// Block names: sorted member names joined with '+'.
  Universe nodes;
  std::vector<std::string> labels;
  RelationFamily<V> family;
  FuzzyRelation<V> preorder;
  FuzzyRelation<V> natural_equivalence;
};

/// Factor network: blocks are the classes {v : E(u, v) = 1} of the natural
/// equivalence E of `x`, and block labels are (X o R_i o X)(u, v) for any
/// representatives u, v.  Throws InvalidArgument if `x` is not a preorder.
template <ResiduatedLattice L>
FactorNetwork<ValueOf<L>> factor(const L& lat, const FuzzyNetwork<ValueOf<L>>& net,
                                 const FuzzyRelation<ValueOf<L>>& x) {
  using V = ValueOf<L>;
  const std::size_t n = net.nodes.size();
  detail::require_family_universe(net.family, x);
  auto eq = natural_equivalence(lat, x);

  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, unassigned);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t u = 0; u < n; ++u) {
    if (block_of[u] != unassigned) continue;
    std::vector<std::size_t> members;
    for (std::size_t v = u; v < n; ++v) {
      if (eq(u, v) == lat.top()) {
        members.push_back(v);
        block_of[v] = blocks.size();
      }
    }
    blocks.push_back(std::move(members));
  }

  // Value-1 classes coincide with equal aftersets of x.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((block_of[u] == block_of[v]) != (afterset(x, u) == afterset(x, v))) {
        throw Error("factor: natural-equivalence classes disagree with afterset classes");
      }
    }
  }

  std::vector<std::string> names;
  for (const auto& b : blocks) {
    std::vector<std::string> member_names;
    for (auto u : b) member_names.push_back(net.nodes.name(u));
    std::sort(member_names.begin(), member_names.end());
    std::string name;
    for (const auto& m : member_names) name += (name.empty() ? "" : "+") + m;
    names.push_back(std::move(name));
  }

  const std::size_t m = blocks.size();
  RelationFamily<V> factored(m);
  for (const auto& r : net.family) {
    const auto full = compose(lat, x, compose(lat, r, x));
    FuzzyRelation<V> q(m, lat.bottom());
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        q(a, b) = full(blocks[a].front(), blocks[b].front());
        for (auto u : blocks[a]) {
          for (auto v : blocks[b]) {
            if (full(u, v) != q(a, b)) {
              throw Error("factor: block label depends on the chosen representatives");
            }
          }
        }
      }
    }
    factored.add(std::move(q));
  }

  return FactorNetwork<V>{std::move(blocks), std::move(block_of), Universe(std::move(names)),
                          net.labels,         std::move(factored), x,
                          std::move(eq)};
}

/// The factor label for blocks of u and v computed from sets:
/// (afterset of u in x) o R o (foreset of v in x).
template <ResiduatedLattice L>
ValueOf<L> factor_label(const L& lat, const FuzzyRelation<ValueOf<L>>& x,
                        const FuzzyRelation<ValueOf<L>>& r, std::size_t u, std::size_t v) {
  return compose(lat, compose(lat, afterset(x, u), r), foreset(x, v));
}

template <class V>
struct AggregateResult {
  SolveReport<V> report;
  /// Absent when the solver hit its iteration cap.
  std::optional<FactorNetwork<V>> network;
};

enum class AggregateMode { preorder, equivalence };

/// Runs the preorder (or equivalence) solver from the universal relation and
/// factors the network by its output.
template <ResiduatedLattice L>
AggregateResult<ValueOf<L>> aggregate(const L& lat, const FuzzyNetwork<ValueOf<L>>& net,
                                      const ValueOf<L>& degree, SystemKind kind,
                                      AggregateMode mode = AggregateMode::preorder,
                                      std::size_t max_iterations = 1000) {
  SolverConfig<ValueOf<L>> cfg{.degree = degree, .bound = std::nullopt, .kind = kind};
  cfg.max_iterations = max_iterations;
  auto report = mode == AggregateMode::preorder ? solve_preorder(lat, net.family, cfg)
                                                : solve_equivalence(lat, net.family, cfg);
  AggregateResult<ValueOf<L>> out{std::move(report), std::nullopt};
  if (out.report.converged()) out.network = factor(lat, net, out.report.result);
  return out;
}

}  // namespace wls
