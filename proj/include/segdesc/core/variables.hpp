#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segdesc::core {

/// Identity of a variable: its declaration index in a VariableSet.
/// The SD position (1..s, eliminated last = 1) lives in Ordering.
struct VarId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

class VariableSet {
public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  /// Returns the existing id for `name` or declares a new one.
  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<VarId> ids() const;

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

} // namespace segdesc::core
