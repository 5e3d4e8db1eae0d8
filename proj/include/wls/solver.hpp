#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wls/degree.hpp"

namespace wls {

enum class SolveStatus { converged, iteration_cap_reached };

std::string to_string(SolveStatus status);

template <class V>
struct SolverConfig {
  /// Required solution degree x.
  V degree;
  /// Upper bound X0; the universal relation when absent.
  std::optional<FuzzyRelation<V>> bound;
  SystemKind kind = SystemKind::wls3;
  std::size_t max_iterations = 1000;
  /// Keep every iterate in the report.
  bool trace = false;
};

template <class V>
struct SolveReport {
  SolveStatus status = SolveStatus::iteration_cap_reached;
  /// Number of update steps performed.
  std::size_t iterations = 0;
  FuzzyRelation<V> result;
  /// X0, X1, ... when tracing was requested.
  std::vector<FuzzyRelation<V>> iterates;
  /// (X_n ~ X_{n+1}) for every update step, in order.
  std::vector<V> step_equalities;
  /// SD_kind(S)(result).
  V solution_degree;

  bool converged() const { return status == SolveStatus::converged; }
};

namespace detail {

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> resolve_bound(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                        const SolverConfig<ValueOf<L>>& cfg) {
  if (cfg.max_iterations < 1) throw InvalidArgument("max_iterations must be at least 1");
  if (!cfg.bound) return universal(lat, family.universe_size());
  require_family_universe(family, *cfg.bound);
  return *cfg.bound;
}

// Runs X_{n+1} = update(X_n) until `stop(X_n, X_{n+1}, X_n ~ X_{n+1})` holds,
// and reports X_n for the stopping n.
template <ResiduatedLattice L, class Update, class Stop>
SolveReport<ValueOf<L>> iterate(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                const SolverConfig<ValueOf<L>>& cfg, FuzzyRelation<ValueOf<L>> x,
                                Update update, Stop stop) {
  SolveReport<ValueOf<L>> report;
  report.solution_degree = lat.top();
  if (cfg.trace) report.iterates.push_back(x);

  if (family.empty() || family.universe_size() == 1) {
    report.status = SolveStatus::converged;
    report.result = std::move(x);
  } else {
    for (std::size_t step = 1; step <= cfg.max_iterations; ++step) {
      auto next = update(x);
      auto eq = equality_degree(lat, x, next);
      report.step_equalities.push_back(eq);
      if (cfg.trace) report.iterates.push_back(next);
      report.iterations = step;
      if (stop(x, next, eq)) {
        report.status = SolveStatus::converged;
        break;
      }
      x = std::move(next);
    }
    report.result = std::move(x);
  }
  report.solution_degree = sd(lat, cfg.kind, family, report.result);
  return report;
}

}  // namespace detail

/// Greatest relation X <= X0 whose solution degree for `cfg.kind` is at least `cfg.degree`.
///
/// Iterates X_{n+1} = X_n meet (x -> R_i o X_n)/R_i meet R_i\(x -> X_n o R_i)
/// (the first term alone for WLS-1, the second alone for WLS-2) and stops at
/// the first exact repeat.  The sequence need not stabilise over infinite
/// lattices; the report then carries `iteration_cap_reached` and the last iterate.
template <ResiduatedLattice L>
SolveReport<ValueOf<L>> solve_greatest(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                       const SolverConfig<ValueOf<L>>& cfg) {
  using Rel = FuzzyRelation<ValueOf<L>>;
  auto x0 = detail::resolve_bound(lat, family, cfg);
  const auto& x = cfg.degree;
  auto update = [&](const Rel& cur) {
    Rel next = cur;
    for (const auto& r : family) {
      if (cfg.kind != SystemKind::wls2) {
        next = meet(lat, next, left_residual(lat, scalar_to(lat, x, compose(lat, r, cur)), r));
      }
      if (cfg.kind != SystemKind::wls1) {
        next = meet(lat, next, right_residual(lat, r, scalar_to(lat, x, compose(lat, cur, r))));
      }
    }
    return next;
  };
  auto stop = [](const Rel& cur, const Rel& next, const auto&) { return cur == next; };
  return detail::iterate(lat, family, cfg, std::move(x0), update, stop);
}

namespace detail {

template <ResiduatedLattice L, class LeftRes, class RightRes>
SolveReport<ValueOf<L>> solve_relaxed(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                      const SolverConfig<ValueOf<L>>& cfg,
                                      FuzzyRelation<ValueOf<L>> x0, LeftRes left, RightRes right) {
  using Rel = FuzzyRelation<ValueOf<L>>;
  auto update = [&](const Rel& cur) {
    Rel next = cur;
    for (const auto& r : family) {
      if (cfg.kind != SystemKind::wls2) {
        const auto rx = compose(lat, r, cur);
        next = meet(lat, next, left(rx, rx));
      }
      if (cfg.kind != SystemKind::wls1) {
        const auto xr = compose(lat, cur, r);
        next = meet(lat, next, right(xr, xr));
      }
    }
    return next;
  };
  auto stop = [&](const Rel&, const Rel&, const ValueOf<L>& eq) { return lat.leq(cfg.degree, eq); };
  return iterate(lat, family, cfg, std::move(x0), update, stop);
}

}  // namespace detail

/// A fuzzy preorder X <= X0 whose solution degree is at least `cfg.degree`.
///
/// Iterates X_{n+1} = X_n meet F(X_n) with F built from the self-residuals
/// (R_i o X)/(R_i o X) and (X o R_i)\(X o R_i), every iterate being a preorder.
/// Stops at the first n with x <= (X_n ~ X_{n+1}) and returns X_n.  The result
/// is a member of the cut, not necessarily a maximal one.  Throws
/// InvalidArgument if X0 is not a preorder.
template <ResiduatedLattice L>
SolveReport<ValueOf<L>> solve_preorder(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                       const SolverConfig<ValueOf<L>>& cfg) {
  auto x0 = detail::resolve_bound(lat, family, cfg);
  if (!is_preorder(lat, x0)) throw InvalidArgument("solve_preorder: X0 is not a fuzzy preorder");
  return detail::solve_relaxed(
      lat, family, cfg, std::move(x0),
      [&](const auto& q, const auto& r) { return left_residual(lat, q, r); },
      [&](const auto& r, const auto& q) { return right_residual(lat, r, q); });
}

/// As solve_preorder, with double residuals so that every iterate is a fuzzy
/// equivalence.  Throws InvalidArgument if X0 is not a fuzzy equivalence.
template <ResiduatedLattice L>
SolveReport<ValueOf<L>> solve_equivalence(const L& lat, const RelationFamily<ValueOf<L>>& family,
                                          const SolverConfig<ValueOf<L>>& cfg) {
  auto x0 = detail::resolve_bound(lat, family, cfg);
  if (!is_equivalence(lat, x0)) {
    throw InvalidArgument("solve_equivalence: X0 is not a fuzzy equivalence");
  }
  return detail::solve_relaxed(
      lat, family, cfg, std::move(x0),
      [&](const auto& q, const auto& r) { return double_left_residual(lat, q, r); },
      [&](const auto& r, const auto& q) { return double_right_residual(lat, r, q); });
}

}  // namespace wls
