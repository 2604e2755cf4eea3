#include "segdesc/core/variables.hpp"

#include <stdexcept>

namespace segdesc::core {

VariableSet::VariableSet(std::vector<std::string> names) {
  for (auto& n : names) intern(n);
}

VarId VariableSet::intern(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  VarId id{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<VarId> VariableSet::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::string& VariableSet::name(VarId id) const {
  if (id.value >= names_.size()) throw std::out_of_range("unknown variable id " + std::to_string(id.value));
  return names_[id.value];
}

std::vector<VarId> VariableSet::ids() const {
  std::vector<VarId> out;
  out.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(VarId{i});
  return out;
}

} // namespace segdesc::core
