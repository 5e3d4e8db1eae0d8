#include "wls/relation.hpp"

namespace wls {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("universe must contain at least one node");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidArgument("duplicate node '" + names_[i] + "'");
    }
  }
}

Universe Universe::numbered(std::size_t size) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= size; ++i) names.push_back("n" + std::to_string(i));
  return Universe(std::move(names));
}

std::size_t Universe::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw InvalidArgument("unknown node '" + name + "'");
  return it->second;
}

}  // namespace wls
