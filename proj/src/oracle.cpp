#include "wls/oracle.hpp"

#include <limits>
#include <sstream>

#include "wls/error.hpp"
#include "wls/solver.hpp"

namespace wls::oracle {

namespace {

bool satisfies(const FiniteLattice& lat, Restriction restriction, const Relation& r) {
  switch (restriction) {
    case Restriction::none:
      return true;
    case Restriction::preorders:
      return is_preorder(lat, r);
    case Restriction::equivalences:
      return is_equivalence(lat, r);
  }
  return false;
}

Relation resolve_bound(const EnumerationSpec& spec) {
  if (!spec.bound) return universal(spec.lattice, spec.universe_size);
  if (spec.bound->size() != spec.universe_size) {
    throw UniverseMismatch("enumeration bound does not match the universe size");
  }
  return *spec.bound;
}

bool is_member(const EnumerationSpec& spec, const Family& family, int kind, Element degree,
               const Relation& bound, const Relation& x) {
  return satisfies(spec.lattice, spec.restriction, x) &&
         in_cut(spec.lattice, kind, family, x, degree, bound);
}

}  // namespace

std::size_t enumeration_size(const EnumerationSpec& spec) {
  if (spec.universe_size == 0) throw InvalidArgument("universe must contain at least one node");
  const std::size_t base = spec.lattice.size();
  const std::size_t entries = spec.universe_size * spec.universe_size;
  std::size_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) {
    if (total > spec.budget / base) {
      throw BudgetExceeded("enumerating " + std::to_string(base) + "^" + std::to_string(entries) +
                           " relations exceeds the budget of " + std::to_string(spec.budget));
    }
    total *= base;
  }
  if (total > spec.budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(total) +
                         " relations exceeds the budget of " + std::to_string(spec.budget));
  }
  return total;
}

void for_each_relation(const EnumerationSpec& spec,
                       const std::function<void(const Relation&)>& visit) {
  enumeration_size(spec);
  const auto bound = resolve_bound(spec);
  const auto& lat = spec.lattice;
  const std::size_t n = spec.universe_size;
  const std::size_t base = lat.size();

  Relation r = empty_relation(lat, n);
  std::vector<std::size_t> digits(n * n, 0);
  for (;;) {
    if (leq(lat, r, bound) && satisfies(lat, spec.restriction, r)) visit(r);
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < base) {
        r.values()[pos] = lat.element(digits[pos]);
        break;
      }
      digits[pos] = 0;
      r.values()[pos] = lat.element(0);
      if (pos == 0) return;
    }
    if (digits.empty()) return;
  }
}

std::vector<Relation> enumerate_relations(const EnumerationSpec& spec) {
  std::vector<Relation> out;
  for_each_relation(spec, [&](const Relation& r) { out.push_back(r); });
  return out;
}

std::vector<Relation> enumerate_cut(const EnumerationSpec& spec, const Family& family, int kind,
                                    Element degree) {
  std::vector<Relation> out;
  for_each_relation(spec, [&](const Relation& r) {
    if (spec.lattice.leq(degree, sd(spec.lattice, kind, family, r))) out.push_back(r);
  });
  return out;
}

std::optional<Relation> greatest_member(const EnumerationSpec& spec, const Family& family, int kind,
                                        Element degree) {
  const auto& lat = spec.lattice;
  const auto bound = resolve_bound(spec);
  const auto members = enumerate_cut(spec, family, kind, degree);
  Relation top = empty_relation(lat, spec.universe_size);
  for (const auto& m : members) top = join(lat, top, m);
  if (is_member(spec, family, kind, degree, bound, top)) return top;
  if (spec.restriction == Restriction::none) {
    throw OracleInconsistency("join of the degree cut is not a member: " + format(lat, top));
  }
  return std::nullopt;
}

Relation greatest_cut_member(const EnumerationSpec& spec, const Family& family, int kind,
                             Element degree) {
  auto g = greatest_member(spec, family, kind, degree);
  if (!g) throw InvalidArgument("the restricted degree cut has no greatest element");
  return *g;
}

AgreementReport check_membership_agreement(const EnumerationSpec& spec, const Family& family) {
  EnumerationSpec preorders = spec;
  preorders.restriction = Restriction::preorders;
  const auto bound = resolve_bound(spec);
  const auto& lat = spec.lattice;

  AgreementReport report;
  for_each_relation(preorders, [&](const Relation& p) {
    ++report.preorders;
    for (auto degree : lat.elements()) {
      for (int k = 1; k <= 3; ++k) {
        std::array<bool, 3> member{};
        for (int j = 0; j < 3; ++j) member[j] = in_cut(lat, k + 3 * j, family, p, degree, bound);
        ++report.checks;
        if (member[0] != member[1] || member[0] != member[2]) {
          report.violations.push_back({p, degree, k, member});
        }
      }
    }
  });
  return report;
}

SweepReport exhaustive_sweep(const SweepOptions& options) {
  const auto& lat = options.lattice;
  const std::size_t n = options.universe_size;
  EnumerationSpec all{.lattice = lat, .universe_size = n, .restriction = Restriction::none, .bound = std::nullopt, .budget = options.budget};
  const auto relations = enumerate_relations(all);

  SweepReport report;
  auto fail = [&](std::string msg) {
    if (report.failures.size() < options.max_failures_reported) report.failures.push_back(std::move(msg));
  };

  for (const auto& r : relations) {
    const Family family(n, {r});

    for (const auto& bound : relations) {
      EnumerationSpec spec = all;
      spec.bound = bound;
      for (auto degree : lat.elements()) {
        for (auto kind : {SystemKind::wls1, SystemKind::wls2, SystemKind::wls3}) {
          ++report.solver_cases;
          const auto expected = greatest_cut_member(spec, family, static_cast<int>(kind), degree);
          SolverConfig<Element> cfg{.degree = degree, .bound = bound, .kind = kind};
          cfg.max_iterations = 10'000;
          const auto got = solve_greatest(lat, family, cfg);
          if (!got.converged() || got.result != expected) {
            ++report.solver_mismatches;
            fail("R=" + format(lat, r) + " X0=" + format(lat, bound) + " x=" + lat.name_of(degree) +
                 " " + to_string(kind) + ": solver " + format(lat, got.result) + ", oracle " +
                 format(lat, expected));
          }
        }
      }
    }

    // Pairwise join closure of every cut under the universal bound.
    for (auto degree : lat.elements()) {
      for (int kind = 1; kind <= 3; ++kind) {
        const auto cut = enumerate_cut(all, family, kind, degree);
        for (std::size_t a = 0; a < cut.size(); ++a) {
          for (std::size_t b = a + 1; b < cut.size(); ++b) {
            ++report.join_closure_checks;
            const auto j = join(lat, cut[a], cut[b]);
            if (!lat.leq(degree, sd(lat, kind, family, j))) {
              ++report.join_closure_violations;
              fail("join of " + format(lat, cut[a]) + " and " + format(lat, cut[b]) +
                   " leaves the cut for R=" + format(lat, r));
            }
          }
        }
      }
    }

    const auto agreement = check_membership_agreement(all, family);
    report.agreement_checks += agreement.checks;
    report.agreement_violations += agreement.violations.size();
    for (const auto& v : agreement.violations) {
      fail("membership disagreement for P=" + format(lat, v.preorder) + " R=" + format(lat, r));
    }
  }
  return report;
}

std::string format(const FiniteLattice& lattice, const Relation& r) {
  std::ostringstream os;
  os << '[';
  for (std::size_t u = 0; u < r.size(); ++u) {
    os << (u ? ",[" : "[");
    for (std::size_t v = 0; v < r.size(); ++v) os << (v ? "," : "") << lattice.name_of(r(u, v));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace wls::oracle
