#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wls {

/// Exact rational in the closed unit interval, always kept in lowest terms.
///
/// Accepted textual forms are "p/q", integers ("0", "1") and finite decimals
/// ("0.25").  Formatting always yields the canonical reduced form, so
/// `parse(v.str()) == v` for every value.
class UnitValue {
 public:
  UnitValue() = default;

  /// Throws InvalidArgument if `num/den` is outside [0,1] or `den == 0`.
  UnitValue(long num, long den);

  /// Throws InvalidArgument if `q` is outside [0,1].
  explicit UnitValue(mpq_class q);

  /// Throws ParseError for malformed text and for values outside [0,1].
  static UnitValue parse(std::string_view text);
  static UnitValue zero() { return {}; }
  static UnitValue one() { return UnitValue(mpq_class(1), Unchecked{}); }

  const mpq_class& rational() const { return q_; }
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  friend bool operator==(const UnitValue& a, const UnitValue& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const UnitValue& a, const UnitValue& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const UnitValue& v) { return os << v.str(); }

 private:
  struct Unchecked {};
  UnitValue(mpq_class q, Unchecked) : q_(std::move(q)) {}

  friend class GodelLattice;
  friend class ProductLattice;
  friend class LukasiewiczLattice;

  mpq_class q_{0};
};

}  // namespace wls
