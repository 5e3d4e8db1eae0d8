#pragma once

// Brute-force verification over small finite lattices.  Everything here is a
// direct transcription of the definitions (enumerate, evaluate SD_k, join)
// and deliberately avoids the residual-based machinery of the solvers.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wls/degree.hpp"
#include "wls/lattice.hpp"

namespace wls::oracle {

using Element = FiniteLattice::Element;
using Relation = FuzzyRelation<Element>;
using Family = RelationFamily<Element>;

enum class Restriction { none, preorders, equivalences };

struct EnumerationSpec {
  FiniteLattice lattice;
  std::size_t universe_size = 2;
  Restriction restriction = Restriction::none;
  /// Upper bound X0; universal when absent.
  std::optional<Relation> bound;
  /// Maximum |L|^(|U|^2) the enumerator agrees to walk.
  std::size_t budget = 1'000'000;
};

/// |L|^(|U|^2).  Throws BudgetExceeded when it exceeds `spec.budget`.
std::size_t enumeration_size(const EnumerationSpec& spec);

/// Calls `visit` for every relation below the bound that satisfies the
/// restriction, in odometer order (last entry varies fastest).
void for_each_relation(const EnumerationSpec& spec, const std::function<void(const Relation&)>& visit);

std::vector<Relation> enumerate_relations(const EnumerationSpec& spec);

/// Every enumerated X with degree <= SD_kind(family)(X).
std::vector<Relation> enumerate_cut(const EnumerationSpec& spec, const Family& family, int kind,
                                    Element degree);

/// The greatest enumerated cut member if there is one.  Without a restriction
/// the join of the cut must be a member; a failure throws OracleInconsistency.
/// With a restriction the cut may lack a greatest element and nullopt is returned.
std::optional<Relation> greatest_member(const EnumerationSpec& spec, const Family& family, int kind,
                                        Element degree);

/// Join of all cut members, asserted to be a member itself.
Relation greatest_cut_member(const EnumerationSpec& spec, const Family& family, int kind,
                             Element degree);

struct AgreementViolation {
  Relation preorder;
  Element degree;
  int kind = 1;
  /// Memberships for SD_k, SD_{k+3}, SD_{k+6}.
  std::array<bool, 3> member{};
};

struct AgreementReport {
  std::size_t preorders = 0;
  std::size_t checks = 0;
  std::vector<AgreementViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every preorder P below the bound, every degree and k in {1,2,3}:
/// cut membership under SD_k, SD_{k+3} and SD_{k+6} must agree.
AgreementReport check_membership_agreement(const EnumerationSpec& spec, const Family& family);

struct SweepOptions {
  FiniteLattice lattice = FiniteLattice::godel_chain(3);
  std::size_t universe_size = 2;
  std::size_t budget = 1'000'000;
  std::size_t max_failures_reported = 10;
};

struct SweepReport {
  std::size_t solver_cases = 0;
  std::size_t solver_mismatches = 0;
  std::size_t join_closure_checks = 0;
  std::size_t join_closure_violations = 0;
  std::size_t agreement_checks = 0;
  std::size_t agreement_violations = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return solver_mismatches == 0 && join_closure_violations == 0 && agreement_violations == 0;
  }
};

/// Exhaustive check over every single-relation family on the given lattice:
/// solve_greatest equals the greatest cut member for every bound, degree and
/// WLS kind; cuts under the universal bound are closed under pairwise joins;
/// and preorder cut membership agrees across SD_k, SD_{k+3} and SD_{k+6}.
SweepReport exhaustive_sweep(const SweepOptions& options);

/// Renders a relation as "[[a,b],[c,d]]" with element names.
std::string format(const FiniteLattice& lattice, const Relation& r);

}  // namespace wls::oracle
