#include "jacmult/ring.hpp"

#include <algorithm>
#include <set>

namespace jacmult {

Ring::Ring(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t Ring::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' in ring " + to_string());
}

std::string Ring::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i) s += ",";
    s += (*names_)[i];
  }
  return s + ")";
}

}  // namespace jacmult
