#include "segdesc/core/ordering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace segdesc::core {

Ordering::Ordering(std::vector<VarId> by_position) : by_position_(std::move(by_position)) {
  for (std::size_t i = 0; i < by_position_.size(); ++i) {
    const auto index = by_position_[i].value;
    if (position_of_.size() <= index) position_of_.resize(index + 1, 0);
    if (position_of_[index] != 0) throw OrderingError("variable listed twice in ordering");
    position_of_[index] = i + 1;
  }
}

bool Ordering::contains(VarId v) const {
  return v.value < position_of_.size() && position_of_[v.value] != 0;
}

std::size_t Ordering::position(VarId v) const {
  if (!contains(v)) throw std::out_of_range("variable is not part of the ordering");
  return position_of_[v.value];
}

VarId Ordering::at(std::size_t position) const {
  if (position == 0 || position > by_position_.size()) throw std::out_of_range("ordering position out of range");
  return by_position_[position - 1];
}

Ordering order_variables(std::span<const LabeledInequality> ineqs, const OrderingStrategy& strategy) {
  std::map<VarId, std::size_t> counts;
  for (const auto& ineq : ineqs)
    for (const auto& [v, c] : ineq.body.terms()) ++counts[v];

  if (const auto* list = std::get_if<ExplicitOrder>(&strategy)) {
    std::set<VarId> seen;
    for (VarId v : list->variables) {
      if (!seen.insert(v).second) throw OrderingError("explicit ordering lists a variable twice");
      if (!counts.contains(v)) throw OrderingError("explicit ordering names a variable absent from the system");
    }
    if (seen.size() != counts.size()) throw OrderingError("explicit ordering omits a variable of the system");
    return Ordering(list->variables);
  }

  std::vector<VarId> present;
  for (const auto& [v, n] : counts) present.push_back(v);
  if (std::holds_alternative<FrequencyOrder>(strategy)) {
    std::stable_sort(present.begin(), present.end(),
                     [&](VarId a, VarId b) { return counts.at(a) > counts.at(b); });
  }
  return Ordering(std::move(present));
}

} // namespace segdesc::core
