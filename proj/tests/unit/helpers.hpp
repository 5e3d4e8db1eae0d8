#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "wls/io.hpp"

namespace wls::test {

inline UnitValue q(const char* text) { return UnitValue::parse(text); }

/// Relation from rows separated by ';' and entries separated by spaces,
/// e.g. "1 1/2; 0 1".  Entries are parsed by the lattice's value syntax.
template <ResiduatedLattice L>
FuzzyRelation<ValueOf<L>> rel(const L& lat, const std::string& text) {
  std::vector<std::vector<ValueOf<L>>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream cells(row);
    std::string cell;
    auto& out = rows.emplace_back();
    while (cells >> cell) out.push_back(io::parse_value_text(lat, cell));
  }
  return FuzzyRelation<ValueOf<L>>::from_rows(rows);
}

template <ResiduatedLattice L>
RelationFamily<ValueOf<L>> family_of(const std::vector<FuzzyRelation<ValueOf<L>>>& members) {
  return RelationFamily<ValueOf<L>>(members.front().size(), members);
}

inline std::string fixture(const std::string& name) { return std::string(WLS_FIXTURES) + "/" + name; }

}  // namespace wls::test
