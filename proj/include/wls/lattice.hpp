#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wls/unit_value.hpp"

namespace wls {

/// A complete residuated lattice (L, meet, join, otimes, residuum, 0, 1).
///
/// Values are compared with `==` for equality; the lattice order is `leq`.
template <class L>
concept ResiduatedLattice =
    std::equality_comparable<typename L::value_type> &&
    requires(const L& lat, const typename L::value_type& a, const typename L::value_type& b) {
      { lat.bottom() } -> std::convertible_to<typename L::value_type>;
      { lat.top() } -> std::convertible_to<typename L::value_type>;
      { lat.meet(a, b) } -> std::convertible_to<typename L::value_type>;
      { lat.join(a, b) } -> std::convertible_to<typename L::value_type>;
      { lat.otimes(a, b) } -> std::convertible_to<typename L::value_type>;
      { lat.residuum(a, b) } -> std::convertible_to<typename L::value_type>;
      { lat.biresiduum(a, b) } -> std::convertible_to<typename L::value_type>;
      { lat.leq(a, b) } -> std::same_as<bool>;
      { lat.is_heyting() } -> std::same_as<bool>;
      { lat.name() } -> std::convertible_to<std::string>;
    };

template <ResiduatedLattice L>
using ValueOf = typename L::value_type;

// ---------------------------------------------------------------------------
// Unit-interval structures on exact rationals.

/// Shared order structure of the three unit-interval lattices.
class UnitIntervalBase {
 public:
  using value_type = UnitValue;

  UnitValue bottom() const { return UnitValue::zero(); }
  UnitValue top() const { return UnitValue::one(); }
  UnitValue meet(const UnitValue& a, const UnitValue& b) const { return b < a ? b : a; }
  UnitValue join(const UnitValue& a, const UnitValue& b) const { return a < b ? b : a; }
  bool leq(const UnitValue& a, const UnitValue& b) const { return a <= b; }

  friend bool operator==(const UnitIntervalBase&, const UnitIntervalBase&) = default;
};

/// min / Goedel implication.
class GodelLattice : public UnitIntervalBase {
 public:
  UnitValue otimes(const UnitValue& a, const UnitValue& b) const { return meet(a, b); }
  UnitValue residuum(const UnitValue& a, const UnitValue& b) const {
    return a <= b ? top() : b;
  }
  UnitValue biresiduum(const UnitValue& a, const UnitValue& b) const {
    return a == b ? top() : meet(a, b);
  }
  bool is_heyting() const { return true; }
  std::string name() const { return "godel"; }
};

/// Multiplication / Goguen implication.
class ProductLattice : public UnitIntervalBase {
 public:
  UnitValue otimes(const UnitValue& a, const UnitValue& b) const {
    return UnitValue(mpq_class(a.q_ * b.q_), UnitValue::Unchecked{});
  }
  UnitValue residuum(const UnitValue& a, const UnitValue& b) const {
    if (a <= b) return top();
    return UnitValue(mpq_class(b.q_ / a.q_), UnitValue::Unchecked{});
  }
  UnitValue biresiduum(const UnitValue& a, const UnitValue& b) const {
    if (a.q_ == 0 && b.q_ == 0) return top();
    return a <= b ? UnitValue(mpq_class(a.q_ / b.q_), UnitValue::Unchecked{})
                  : UnitValue(mpq_class(b.q_ / a.q_), UnitValue::Unchecked{});
  }
  bool is_heyting() const { return false; }
  std::string name() const { return "product"; }
};

/// Bounded sum / Lukasiewicz implication.
class LukasiewiczLattice : public UnitIntervalBase {
 public:
  UnitValue otimes(const UnitValue& a, const UnitValue& b) const {
    mpq_class s = a.q_ + b.q_ - 1;
    if (s < 0) return bottom();
    return UnitValue(std::move(s), UnitValue::Unchecked{});
  }
  UnitValue residuum(const UnitValue& a, const UnitValue& b) const {
    if (a <= b) return top();
    return UnitValue(mpq_class(1 - a.q_ + b.q_), UnitValue::Unchecked{});
  }
  UnitValue biresiduum(const UnitValue& a, const UnitValue& b) const {
    mpq_class d = a.q_ - b.q_;
    return UnitValue(mpq_class(1 - abs(d)), UnitValue::Unchecked{});
  }
  bool is_heyting() const { return false; }
  std::string name() const { return "lukasiewicz"; }
};

inline GodelLattice godel() { return {}; }
inline ProductLattice product() { return {}; }
inline LukasiewiczLattice lukasiewicz() { return {}; }

// ---------------------------------------------------------------------------
// Finite residuated lattices given by tables.

/// A finite residuated lattice over elements 0..n-1.
///
/// The order and the multiplication are supplied; meets and joins are read
/// off the order, and the residuum is derived as y -> z = join{x : x*y <= z}
/// unless an explicit table is given.  Construction validates every axiom
/// exhaustively and throws InvalidLattice on the first violation.
class FiniteLattice {
 public:
  /// Handle to an element.  Its `<=>` is index order, not the lattice order.
  struct Element {
    std::uint16_t index = 0;
    friend auto operator<=>(const Element&, const Element&) = default;
  };
  using value_type = Element;
  using Table = std::vector<std::vector<std::size_t>>;

  /// `leq[a][b]` is true iff a <= b.  `otimes` and `residuum` hold element indices.
  FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq, Table otimes,
                std::optional<Table> residuum = std::nullopt);

  /// Goedel chain 0 < 1/(n-1) < ... < 1 with otimes = min.
  static FiniteLattice godel_chain(std::size_t n);
  /// Lukasiewicz chain on {0, 1/(n-1), ..., 1}.
  static FiniteLattice lukasiewicz_chain(std::size_t n);
  /// Two-element Boolean algebra.
  static FiniteLattice boolean();
  /// Four-element Boolean algebra {0, a, b, 1} (a non-chain Heyting algebra).
  static FiniteLattice diamond();

  std::size_t size() const { return names_.size(); }
  std::vector<Element> elements() const;
  Element element(std::size_t index) const;
  /// Throws ParseError for an unknown name.
  Element element(std::string_view name) const;
  const std::string& name_of(Element e) const { return names_[e.index]; }
  const std::vector<std::string>& names() const { return names_; }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Element meet(Element a, Element b) const { return at(meet_, a, b); }
  Element join(Element a, Element b) const { return at(join_, a, b); }
  Element otimes(Element a, Element b) const { return at(otimes_, a, b); }
  Element residuum(Element a, Element b) const { return at(residuum_, a, b); }
  Element biresiduum(Element a, Element b) const { return meet(residuum(a, b), residuum(b, a)); }
  bool leq(Element a, Element b) const { return leq_[a.index][b.index]; }
  bool is_heyting() const { return heyting_; }
  bool is_chain() const;
  std::string name() const { return "finite"; }

  const std::vector<std::vector<bool>>& order_table() const { return leq_; }
  const Table& otimes_table() const { return otimes_; }
  const Table& residuum_table() const { return residuum_; }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_ && a.otimes_ == b.otimes_ &&
           a.residuum_ == b.residuum_;
  }

 private:
  static Element at(const Table& t, Element a, Element b) {
    return Element{static_cast<std::uint16_t>(t[a.index][b.index])};
  }
  void validate_order();
  void derive_bounds();
  void validate_monoid() const;
  void derive_residuum();
  void validate_residuation() const;

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  Table meet_, join_, otimes_, residuum_;
  Element bottom_{}, top_{};
  bool heyting_ = false;
};

static_assert(ResiduatedLattice<GodelLattice>);
static_assert(ResiduatedLattice<ProductLattice>);
static_assert(ResiduatedLattice<LukasiewiczLattice>);
static_assert(ResiduatedLattice<FiniteLattice>);

/// True iff otimes is idempotent (equivalently otimes = meet).
template <ResiduatedLattice L>
bool is_heyting(const L& lat) {
  return lat.is_heyting();
}

template <class V>
struct Subalgebra {
  std::vector<V> elements;
  /// False when the closure outgrew the cap; finiteness is then unknown.
  bool exhausted = true;
};

/// Closure of `seeds` together with 0 and 1 under meet, join, otimes and
/// residuum, stopping once more than `cap` elements have been produced.
template <ResiduatedLattice L>
Subalgebra<ValueOf<L>> generate_subalgebra(const L& lat, const std::vector<ValueOf<L>>& seeds,
                                           std::size_t cap) {
  using V = ValueOf<L>;
  Subalgebra<V> out;
  auto& elems = out.elements;
  auto add = [&](const V& v) {
    if (std::find(elems.begin(), elems.end(), v) != elems.end()) return false;
    elems.push_back(v);
    return true;
  };
  add(lat.bottom());
  add(lat.top());
  for (const auto& s : seeds) add(s);

  // Pairs (i, j) with max(i, j) < done have already been combined.
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t limit = elems.size();
    for (std::size_t i = 0; i < limit; ++i) {
      for (std::size_t j = std::max(done, i); j < limit; ++j) {
        const V a = elems[i];
        const V b = elems[j];
        for (const V& v : {lat.meet(a, b), lat.join(a, b), lat.otimes(a, b), lat.residuum(a, b),
                           lat.residuum(b, a)}) {
          if (add(v) && elems.size() > cap) {
            elems.resize(cap);
            out.exhausted = false;
            if constexpr (std::same_as<V, UnitValue>) std::sort(elems.begin(), elems.end());
            return out;
          }
        }
      }
    }
    done = limit;
  }
  if constexpr (std::same_as<V, UnitValue>) std::sort(elems.begin(), elems.end());
  return out;
}

}  // namespace wls
