#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wls/relation.hpp"

namespace wls {

/// Which weakly linear system is meant:
///   wls1:  X o R_i <= R_i o X
///   wls2:  R_i o X <= X o R_i
///   wls3:  X o R_i  = R_i o X
enum class SystemKind { wls1 = 1, wls2 = 2, wls3 = 3 };

std::string to_string(SystemKind kind);
/// Accepts "wls1".."wls3" or "1".."3".  Throws ParseError otherwise.
SystemKind parse_system_kind(std::string_view text);

/// Indexed family {R_i} of relations on one universe.  May be empty.
template <class V>
class RelationFamily {
 public:
  explicit RelationFamily(std::size_t universe_size) : n_(universe_size) {}
  RelationFamily(std::size_t universe_size, std::vector<FuzzyRelation<V>> members)
      : n_(universe_size) {
    for (auto& m : members) add(std::move(m));
  }

  /// Throws UniverseMismatch if `r` lives on a different universe.
  void add(FuzzyRelation<V> r) {
    if (r.size() != n_) {
      throw UniverseMismatch("family member has size " + std::to_string(r.size()) +
                             ", expected " + std::to_string(n_));
    }
    members_.push_back(std::move(r));
  }

  std::size_t universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const FuzzyRelation<V>& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const RelationFamily&, const RelationFamily&) = default;

 private:
  std::size_t n_;
  std::vector<FuzzyRelation<V>> members_;
};

namespace detail {

template <class V>
void require_family_universe(const RelationFamily<V>& family, const FuzzyRelation<V>& x) {
  if (family.universe_size() != x.size()) {
    throw UniverseMismatch("relation has size " + std::to_string(x.size()) +
                           " but the family lives on " + std::to_string(family.universe_size()));
  }
}

// Solution degree of one member for functional k in 1..9.
template <ResiduatedLattice L>
ValueOf<L> member_degree(const L& lat, int k, const FuzzyRelation<ValueOf<L>>& r,
                         const FuzzyRelation<ValueOf<L>>& x) {
  switch (k) {
    case 1:
      return inclusion_degree(lat, compose(lat, x, r), compose(lat, r, x));
    case 2:
      return inclusion_degree(lat, compose(lat, r, x), compose(lat, x, r));
    case 3:
      return equality_degree(lat, compose(lat, x, r), compose(lat, r, x));
    case 4:
      return equality_degree(lat, compose(lat, x, compose(lat, r, x)), compose(lat, r, x));
    case 5:
      return equality_degree(lat, compose(lat, x, compose(lat, r, x)), compose(lat, x, r));
    case 6:
      return lat.meet(member_degree(lat, 4, r, x), member_degree(lat, 5, r, x));
    case 7: {
      const auto rx = compose(lat, r, x);
      return inclusion_degree(lat, x, left_residual(lat, rx, rx));
    }
    case 8: {
      const auto xr = compose(lat, x, r);
      return inclusion_degree(lat, x, right_residual(lat, xr, xr));
    }
    case 9:
      return lat.meet(member_degree(lat, 7, r, x), member_degree(lat, 8, r, x));
    default:
      throw InvalidArgument("solution degree kind must be in 1..9, got " + std::to_string(k));
  }
}

}  // namespace detail

/// Solution degree SD_kind(S)(X) for kind in 1..9; the empty family gives top.
///
/// Kinds 1-3 measure WLS-1..3 directly; 4-6 compare X o R o X with R o X and
/// X o R; 7-9 measure inclusion of X in the self-residuals of R o X and X o R.
template <ResiduatedLattice L>
ValueOf<L> sd(const L& lat, int kind, const RelationFamily<ValueOf<L>>& family,
              const FuzzyRelation<ValueOf<L>>& x) {
  if (kind < 1 || kind > 9) {
    throw InvalidArgument("solution degree kind must be in 1..9, got " + std::to_string(kind));
  }
  detail::require_family_universe(family, x);
  auto acc = lat.top();
  for (const auto& r : family) acc = lat.meet(acc, detail::member_degree(lat, kind, r, x));
  return acc;
}

template <ResiduatedLattice L>
ValueOf<L> sd(const L& lat, SystemKind kind, const RelationFamily<ValueOf<L>>& family,
              const FuzzyRelation<ValueOf<L>>& x) {
  return sd(lat, static_cast<int>(kind), family, x);
}

/// Membership of X in the degree-cut of SD_kind bounded by X0: degree <= sd and X <= X0.
template <ResiduatedLattice L>
bool in_cut(const L& lat, int kind, const RelationFamily<ValueOf<L>>& family,
            const FuzzyRelation<ValueOf<L>>& x, const ValueOf<L>& degree,
            const FuzzyRelation<ValueOf<L>>& bound) {
  detail::require_same_size(x, bound, "in_cut");
  return leq(lat, x, bound) && lat.leq(degree, sd(lat, kind, family, x));
}

/// meet_i (R_i ~ R'_i).  Throws UniverseMismatch on differing indexing.
template <ResiduatedLattice L>
ValueOf<L> family_equality_degree(const L& lat, const RelationFamily<ValueOf<L>>& a,
                                  const RelationFamily<ValueOf<L>>& b) {
  if (a.size() != b.size()) throw UniverseMismatch("families have different index sets");
  if (a.universe_size() != b.universe_size()) throw UniverseMismatch("families live on different universes");
  auto acc = lat.top();
  for (std::size_t i = 0; i < a.size(); ++i) acc = lat.meet(acc, equality_degree(lat, a[i], b[i]));
  return acc;
}

}  // namespace wls
