#include <numeric>
#include <string>

#include "wls/error.hpp"
#include "wls/lattice.hpp"

namespace wls {

namespace {

std::string chain_name(std::size_t i, std::size_t n) {
  return UnitValue(static_cast<long>(i), static_cast<long>(n - 1)).str();
}

std::vector<std::vector<bool>> chain_order(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) leq[a][b] = true;
  }
  return leq;
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq,
                             Table otimes, std::optional<Table> residuum)
    : names_(std::move(names)), leq_(std::move(leq)), otimes_(std::move(otimes)) {
  const std::size_t n = names_.size();
  if (n < 1) throw InvalidLattice("a lattice needs at least one element");
  if (n > 0xFFFF) throw InvalidLattice("too many elements");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) throw InvalidLattice("duplicate element name '" + names_[i] + "'");
    }
  }
  auto check_square = [n](std::size_t rows, auto row_size, const char* what) {
    if (rows != n) throw InvalidLattice(std::string(what) + " table has wrong number of rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (row_size(i) != n) throw InvalidLattice(std::string(what) + " table is not square");
    }
  };
  check_square(leq_.size(), [&](std::size_t i) { return leq_[i].size(); }, "order");
  check_square(otimes_.size(), [&](std::size_t i) { return otimes_[i].size(); }, "otimes");
  for (const auto& row : otimes_) {
    for (auto v : row) {
      if (v >= n) throw InvalidLattice("otimes table references an unknown element");
    }
  }

  validate_order();
  derive_bounds();
  validate_monoid();
  if (residuum) {
    residuum_ = std::move(*residuum);
    check_square(residuum_.size(), [&](std::size_t i) { return residuum_[i].size(); }, "residuum");
    for (const auto& row : residuum_) {
      for (auto v : row) {
        if (v >= n) throw InvalidLattice("residuum table references an unknown element");
      }
    }
  } else {
    derive_residuum();
  }
  validate_residuation();

  heyting_ = true;
  for (auto a : elements()) {
    if (this->otimes(a, a) != a) heyting_ = false;
  }
}

void FiniteLattice::validate_order() {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw InvalidLattice("order is not reflexive at '" + names_[a] + "'");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) {
        throw InvalidLattice("order is not antisymmetric");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw InvalidLattice("order is not transitive");
      }
    }
  }

  // Greatest lower / least upper bounds, which must exist for every pair.
  meet_.assign(n, std::vector<std::size_t>(n));
  join_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[c][a] && leq_[c][b] && (!glb || leq_[*glb][c])) glb = c;
        if (leq_[a][c] && leq_[b][c] && (!lub || leq_[c][*lub])) lub = c;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (glb && leq_[c][a] && leq_[c][b] && !leq_[c][*glb]) glb.reset();
        if (lub && leq_[a][c] && leq_[b][c] && !leq_[*lub][c]) lub.reset();
      }
      if (!glb || !lub) {
        throw InvalidLattice("'" + names_[a] + "' and '" + names_[b] + "' lack a meet or join");
      }
      meet_[a][b] = *glb;
      join_[a][b] = *lub;
    }
  }

  for (auto a : elements()) {
    for (auto b : elements()) {
      for (auto c : elements()) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          throw InvalidLattice("lattice is not distributive");
        }
      }
    }
  }
}

void FiniteLattice::derive_bounds() {
  const std::size_t n = size();
  std::size_t lo = 0, hi = 0;
  for (std::size_t c = 1; c < n; ++c) {
    lo = meet_[lo][c];
    hi = join_[hi][c];
  }
  bottom_ = Element{static_cast<std::uint16_t>(lo)};
  top_ = Element{static_cast<std::uint16_t>(hi)};
}

void FiniteLattice::validate_monoid() const {
  for (auto a : elements()) {
    if (otimes(a, top_) != a || otimes(top_, a) != a) {
      throw InvalidLattice("top is not the unit of otimes at '" + name_of(a) + "'");
    }
    for (auto b : elements()) {
      if (otimes(a, b) != otimes(b, a)) throw InvalidLattice("otimes is not commutative");
      for (auto c : elements()) {
        if (otimes(otimes(a, b), c) != otimes(a, otimes(b, c))) {
          throw InvalidLattice("otimes is not associative");
        }
        if (leq(a, b) && !leq(otimes(a, c), otimes(b, c))) {
          throw InvalidLattice("otimes is not monotone");
        }
      }
    }
  }
}

void FiniteLattice::derive_residuum() {
  const std::size_t n = size();
  residuum_.assign(n, std::vector<std::size_t>(n));
  for (auto y : elements()) {
    for (auto z : elements()) {
      Element acc = bottom_;
      for (auto x : elements()) {
        if (leq(otimes(x, y), z)) acc = join(acc, x);
      }
      residuum_[y.index][z.index] = acc.index;
    }
  }
}

void FiniteLattice::validate_residuation() const {
  for (auto x : elements()) {
    for (auto y : elements()) {
      for (auto z : elements()) {
        if (leq(otimes(x, y), z) != leq(x, residuum(y, z))) {
          throw InvalidLattice("residuation fails for (" + name_of(x) + ", " + name_of(y) + ", " +
                               name_of(z) + ")");
        }
      }
    }
  }
}

std::vector<FiniteLattice::Element> FiniteLattice::elements() const {
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint16_t>(i)};
  return out;
}

FiniteLattice::Element FiniteLattice::element(std::size_t index) const {
  if (index >= size()) throw InvalidArgument("element index out of range");
  return Element{static_cast<std::uint16_t>(index)};
}

FiniteLattice::Element FiniteLattice::element(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Element{static_cast<std::uint16_t>(i)};
  }
  throw ParseError("unknown lattice element '" + std::string(name) + "'");
}

bool FiniteLattice::is_chain() const {
  for (auto a : elements()) {
    for (auto b : elements()) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

FiniteLattice FiniteLattice::godel_chain(std::size_t n) {
  if (n < 2) throw InvalidArgument("a chain needs at least two elements");
  std::vector<std::string> names;
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(chain_name(a, n));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = std::min(a, b);
  }
  return FiniteLattice(std::move(names), chain_order(n), std::move(t));
}

FiniteLattice FiniteLattice::lukasiewicz_chain(std::size_t n) {
  if (n < 2) throw InvalidArgument("a chain needs at least two elements");
  std::vector<std::string> names;
  Table t(n, std::vector<std::size_t>(n));
  const std::size_t m = n - 1;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(chain_name(a, n));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = a + b > m ? a + b - m : 0;
  }
  return FiniteLattice(std::move(names), chain_order(n), std::move(t));
}

FiniteLattice FiniteLattice::boolean() { return godel_chain(2); }

FiniteLattice FiniteLattice::diamond() {
  // 0 < a, b < 1 with a, b incomparable.
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true},
      {false, true, false, true},
      {false, false, true, true},
      {false, false, false, true},
  };
  Table meet = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  return FiniteLattice({"0", "a", "b", "1"}, std::move(leq), std::move(meet));
}

}  // namespace wls
