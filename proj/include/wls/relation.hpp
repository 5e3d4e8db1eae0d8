#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wls/error.hpp"
#include "wls/lattice.hpp"

namespace wls {

/// Ordered, duplicate-free list of node identifiers.
class Universe {
 public:
  Universe() = default;
  /// Throws InvalidArgument on an empty list or a duplicate name.
  explicit Universe(std::vector<std::string> names);
  /// Nodes named "n1", ..., "n<size>".
  static Universe numbered(std::size_t size);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws InvalidArgument for an unknown node.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A fuzzy subset of a universe {0, ..., size-1}.
template <class V>
class FuzzySet {
 public:
  FuzzySet() = default;
  FuzzySet(std::size_t size, V fill) : values_(size, std::move(fill)) {}
  explicit FuzzySet(std::vector<V> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const V& operator[](std::size_t u) const { return values_[u]; }
  V& operator[](std::size_t u) { return values_[u]; }
  std::span<const V> values() const { return values_; }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::vector<V> values_;
};

/// Square matrix of lattice values over a universe of `size()` nodes.
/// Row u is the afterset of u, column u its foreset.
template <class V>
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(std::size_t size, V fill) : n_(size), data_(size * size, std::move(fill)) {}

  /// Throws UniverseMismatch unless `rows` is square.
  static FuzzyRelation from_rows(const std::vector<std::vector<V>>& rows) {
    FuzzyRelation r;
    r.n_ = rows.size();
    r.data_.reserve(r.n_ * r.n_);
    for (const auto& row : rows) {
      if (row.size() != r.n_) throw UniverseMismatch("relation matrix is not square");
      r.data_.insert(r.data_.end(), row.begin(), row.end());
    }
    return r;
  }

  std::size_t size() const { return n_; }
  const V& operator()(std::size_t u, std::size_t v) const { return data_[u * n_ + v]; }
  V& operator()(std::size_t u, std::size_t v) { return data_[u * n_ + v]; }
  std::span<const V> values() const { return data_; }
  std::span<V> values() { return data_; }

  std::vector<std::vector<V>> rows() const {
    std::vector<std::vector<V>> out(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      out[u].assign(data_.begin() + static_cast<std::ptrdiff_t>(u * n_),
                    data_.begin() + static_cast<std::ptrdiff_t>((u + 1) * n_));
    }
    return out;
  }

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<V> data_;
};

namespace detail {

template <class A, class B>
void require_same_size(const A& a, const B& b, const char* op) {
  if (a.size() != b.size()) {
    throw UniverseMismatch(std::string(op) + ": universe sizes " + std::to_string(a.size()) +
                           " and " + std::to_string(b.size()) + " differ");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constants.

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> identity(const L& lat, std::size_t n) {
  FuzzyRelation<ValueOf<L>> r(n, lat.bottom());
  for (std::size_t u = 0; u < n; ++u) r(u, u) = lat.top();
  return r;
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> universal(const L& lat, std::size_t n) {
  return FuzzyRelation<ValueOf<L>>(n, lat.top());
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> empty_relation(const L& lat, std::size_t n) {
  return FuzzyRelation<ValueOf<L>>(n, lat.bottom());
}

// ---------------------------------------------------------------------------
// Pointwise structure.

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> meet(const L& lat, const FuzzyRelation<ValueOf<L>>& a,
                               const FuzzyRelation<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "meet");
  auto out = a;
  auto dst = out.values();
  auto src = b.values();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = lat.meet(dst[k], src[k]);
  return out;
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> join(const L& lat, const FuzzyRelation<ValueOf<L>>& a,
                               const FuzzyRelation<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "join");
  auto out = a;
  auto dst = out.values();
  auto src = b.values();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = lat.join(dst[k], src[k]);
  return out;
}

/// Entrywise order a <= b.
template <ResiduatedLattice L>
bool leq(const L& lat, const FuzzyRelation<ValueOf<L>>& a, const FuzzyRelation<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "leq");
  auto x = a.values();
  auto y = b.values();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!lat.leq(x[k], y[k])) return false;
  }
  return true;
}

template <ResiduatedLattice L>
bool leq(const L& lat, const FuzzySet<ValueOf<L>>& a, const FuzzySet<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "leq");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!lat.leq(a[k], b[k])) return false;
  }
  return true;
}

template <class V>
FuzzyRelation<V> inverse(const FuzzyRelation<V>& r) {
  FuzzyRelation<V> out = r;
  for (std::size_t u = 0; u < r.size(); ++u) {
    for (std::size_t v = 0; v < r.size(); ++v) out(v, u) = r(u, v);
  }
  return out;
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> scalar_otimes(const L& lat, const ValueOf<L>& x,
                                        const FuzzyRelation<ValueOf<L>>& r) {
  auto out = r;
  for (auto& e : out.values()) e = lat.otimes(x, e);
  return out;
}

template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> scalar_to(const L& lat, const ValueOf<L>& x,
                                    const FuzzyRelation<ValueOf<L>>& r) {
  auto out = r;
  for (auto& e : out.values()) e = lat.residuum(x, e);
  return out;
}

/// Pointwise otimes of a scalar with a fuzzy set.
template <ResiduatedLattice L>
FuzzySet<ValueOf<L>> scalar_otimes(const L& lat, const ValueOf<L>& x,
                                   const FuzzySet<ValueOf<L>>& a) {
  auto out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lat.otimes(x, out[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Composition.

/// (r o p)(u, v) = join_w r(u, w) * p(w, v).
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> compose(const L& lat, const FuzzyRelation<ValueOf<L>>& r,
                                  const FuzzyRelation<ValueOf<L>>& p) {
  detail::require_same_size(r, p, "compose");
  const std::size_t n = r.size();
  FuzzyRelation<ValueOf<L>> out(n, lat.bottom());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto acc = lat.bottom();
      for (std::size_t w = 0; w < n; ++w) acc = lat.join(acc, lat.otimes(r(u, w), p(w, v)));
      out(u, v) = std::move(acc);
    }
  }
  return out;
}

/// (a o r)(v) = join_w a(w) * r(w, v).
template <ResiduatedLattice L>
FuzzySet<ValueOf<L>> compose(const L& lat, const FuzzySet<ValueOf<L>>& a,
                             const FuzzyRelation<ValueOf<L>>& r) {
  detail::require_same_size(a, r, "compose");
  FuzzySet<ValueOf<L>> out(a.size(), lat.bottom());
  for (std::size_t v = 0; v < a.size(); ++v) {
    for (std::size_t w = 0; w < a.size(); ++w) out[v] = lat.join(out[v], lat.otimes(a[w], r(w, v)));
  }
  return out;
}

/// a o b = join_w a(w) * b(w), a scalar.
template <ResiduatedLattice L>
ValueOf<L> compose(const L& lat, const FuzzySet<ValueOf<L>>& a, const FuzzySet<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "compose");
  auto acc = lat.bottom();
  for (std::size_t w = 0; w < a.size(); ++w) acc = lat.join(acc, lat.otimes(a[w], b[w]));
  return acc;
}

/// r^0 is the identity, r^(n+1) = r o r^n.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> power(const L& lat, const FuzzyRelation<ValueOf<L>>& r, std::size_t n) {
  auto out = identity(lat, r.size());
  for (std::size_t k = 0; k < n; ++k) out = compose(lat, r, out);
  return out;
}

// ---------------------------------------------------------------------------
// Degrees of inclusion and equality.

namespace detail {

template <ResiduatedLattice L, class Op>
ValueOf<L> fold_meet(const L& lat, std::span<const ValueOf<L>> a, std::span<const ValueOf<L>> b,
                     Op op) {
  auto acc = lat.top();
  for (std::size_t k = 0; k < a.size(); ++k) acc = lat.meet(acc, op(a[k], b[k]));
  return acc;
}

}  // namespace detail

/// meet_u a(u) -> b(u).
template <ResiduatedLattice L>
ValueOf<L> inclusion_degree(const L& lat, const FuzzySet<ValueOf<L>>& a,
                            const FuzzySet<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "inclusion_degree");
  return detail::fold_meet(lat, a.values(), b.values(),
                           [&](const auto& x, const auto& y) { return lat.residuum(x, y); });
}

/// meet_u a(u) <-> b(u).
template <ResiduatedLattice L>
ValueOf<L> equality_degree(const L& lat, const FuzzySet<ValueOf<L>>& a,
                           const FuzzySet<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "equality_degree");
  return detail::fold_meet(lat, a.values(), b.values(),
                           [&](const auto& x, const auto& y) { return lat.biresiduum(x, y); });
}

/// Inclusion degree over all |U|^2 entries.
template <ResiduatedLattice L>
ValueOf<L> inclusion_degree(const L& lat, const FuzzyRelation<ValueOf<L>>& a,
                            const FuzzyRelation<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "inclusion_degree");
  return detail::fold_meet(lat, a.values(), b.values(),
                           [&](const auto& x, const auto& y) { return lat.residuum(x, y); });
}

/// Equality degree over all |U|^2 entries.
template <ResiduatedLattice L>
ValueOf<L> equality_degree(const L& lat, const FuzzyRelation<ValueOf<L>>& a,
                           const FuzzyRelation<ValueOf<L>>& b) {
  detail::require_same_size(a, b, "equality_degree");
  return detail::fold_meet(lat, a.values(), b.values(),
                           [&](const auto& x, const auto& y) { return lat.biresiduum(x, y); });
}

// ---------------------------------------------------------------------------
// Aftersets, foresets and residuals.

/// Row u of r.
template <class V>
FuzzySet<V> afterset(const FuzzyRelation<V>& r, std::size_t u) {
  if (u >= r.size()) throw InvalidArgument("afterset: unknown node " + std::to_string(u));
  std::vector<V> out;
  out.reserve(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) out.push_back(r(u, v));
  return FuzzySet<V>(std::move(out));
}

/// Column u of r.
template <class V>
FuzzySet<V> foreset(const FuzzyRelation<V>& r, std::size_t u) {
  if (u >= r.size()) throw InvalidArgument("foreset: unknown node " + std::to_string(u));
  std::vector<V> out;
  out.reserve(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) out.push_back(r(v, u));
  return FuzzySet<V>(std::move(out));
}

namespace detail {

// out(u, v) = degree(sets_a[u], sets_b[v]).
template <ResiduatedLattice L, class Degree>
FuzzyRelation<ValueOf<L>> pairwise(const L& lat, const std::vector<FuzzySet<ValueOf<L>>>& sets_a,
                                   const std::vector<FuzzySet<ValueOf<L>>>& sets_b, Degree degree) {
  const std::size_t n = sets_a.size();
  FuzzyRelation<ValueOf<L>> out(n, lat.bottom());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) out(u, v) = degree(sets_a[u], sets_b[v]);
  }
  return out;
}

template <class V>
std::vector<FuzzySet<V>> all_foresets(const FuzzyRelation<V>& r) {
  std::vector<FuzzySet<V>> out;
  for (std::size_t u = 0; u < r.size(); ++u) out.push_back(foreset(r, u));
  return out;
}

template <class V>
std::vector<FuzzySet<V>> all_aftersets(const FuzzyRelation<V>& r) {
  std::vector<FuzzySet<V>> out;
  for (std::size_t u = 0; u < r.size(); ++u) out.push_back(afterset(r, u));
  return out;
}

}  // namespace detail

/// r \ q: the greatest x with r o x <= q.  (r\q)(u, v) = ru <~ qv on foresets.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> right_residual(const L& lat, const FuzzyRelation<ValueOf<L>>& r,
                                         const FuzzyRelation<ValueOf<L>>& q) {
  detail::require_same_size(r, q, "right_residual");
  return detail::pairwise(lat, detail::all_foresets(r), detail::all_foresets(q),
                          [&](const auto& a, const auto& b) { return inclusion_degree(lat, a, b); });
}

/// q / r: the greatest x with x o r <= q.  (q/r)(u, v) = vr <~ uq on aftersets.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> left_residual(const L& lat, const FuzzyRelation<ValueOf<L>>& q,
                                        const FuzzyRelation<ValueOf<L>>& r) {
  detail::require_same_size(q, r, "left_residual");
  return detail::pairwise(lat, detail::all_aftersets(q), detail::all_aftersets(r),
                          [&](const auto& uq, const auto& vr) { return inclusion_degree(lat, vr, uq); });
}

/// r \\ q with (r\\q)(u, v) = ru ~ qv.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> double_right_residual(const L& lat, const FuzzyRelation<ValueOf<L>>& r,
                                                const FuzzyRelation<ValueOf<L>>& q) {
  detail::require_same_size(r, q, "double_right_residual");
  return detail::pairwise(lat, detail::all_foresets(r), detail::all_foresets(q),
                          [&](const auto& a, const auto& b) { return equality_degree(lat, a, b); });
}

/// q // r with (q//r)(u, v) = vr ~ uq.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> double_left_residual(const L& lat, const FuzzyRelation<ValueOf<L>>& q,
                                               const FuzzyRelation<ValueOf<L>>& r) {
  detail::require_same_size(q, r, "double_left_residual");
  return detail::pairwise(lat, detail::all_aftersets(q), detail::all_aftersets(r),
                          [&](const auto& uq, const auto& vr) { return equality_degree(lat, vr, uq); });
}

// ---------------------------------------------------------------------------
// Preorders and equivalences.

template <ResiduatedLattice L>
bool is_reflexive(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  for (std::size_t u = 0; u < r.size(); ++u) {
    if (r(u, u) != lat.top()) return false;
  }
  return true;
}

template <ResiduatedLattice L>
bool is_symmetric(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  return leq(lat, inverse(r), r);
}

template <ResiduatedLattice L>
bool is_transitive(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  return leq(lat, compose(lat, r, r), r);
}

template <ResiduatedLattice L>
bool is_preorder(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  return is_reflexive(lat, r) && is_transitive(lat, r);
}

template <ResiduatedLattice L>
bool is_equivalence(const L& lat, const FuzzyRelation<ValueOf<L>>& r) {
  return is_preorder(lat, r) && is_symmetric(lat, r);
}

/// p meet p^-1 for a preorder p.  Throws InvalidArgument otherwise.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> natural_equivalence(const L& lat, const FuzzyRelation<ValueOf<L>>& p) {
  if (!is_preorder(lat, p)) throw InvalidArgument("natural_equivalence: relation is not a preorder");
  return meet(lat, p, inverse(p));
}

/// Least preorder containing r, as the join of (identity v r)^k for k < |U|.
/// Paths longer than |U|-1 revisit a node, and x*y <= x meet y makes such
/// paths dominated by their simple sub-paths.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> reflexive_transitive_closure(const L& lat,
                                                       const FuzzyRelation<ValueOf<L>>& r) {
  const std::size_t n = r.size();
  const auto step = join(lat, identity(lat, n), r);
  auto acc = identity(lat, n);
  auto pow = acc;
  for (std::size_t k = 1; k < n; ++k) {
    pow = compose(lat, step, pow);
    acc = join(lat, acc, pow);
  }
  return acc;
}

}  // namespace wls
