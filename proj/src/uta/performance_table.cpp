#include "segdesc/uta/performance_table.hpp"

#include <algorithm>
#include <set>

namespace segdesc::uta {

PerformanceTable::PerformanceTable(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                                   std::vector<std::vector<Rational>> raw)
    : criteria_(std::move(criteria)), alternatives_(std::move(alternatives)) {
  if (criteria_.empty()) throw TableError("table has no criteria");
  std::set<std::string> names;
  for (const auto& c : criteria_) {
    if (c.name.empty()) throw TableError("criterion without a name");
    if (!names.insert(c.name).second) throw TableError("duplicate criterion '" + c.name + "'");
    if (c.gamma < 2) throw TableError("criterion '" + c.name + "' needs at least 2 characteristic points");
    if (c.domain_low.has_value() != c.domain_high.has_value())
      throw TableError("criterion '" + c.name + "' has only one domain endpoint");
    if (c.domain_low && *c.domain_low >= *c.domain_high)
      throw TableError("criterion '" + c.name + "' has an empty domain");
  }
  names.clear();
  for (const auto& a : alternatives_) {
    if (a.empty()) throw TableError("alternative without a name");
    if (!names.insert(a).second) throw TableError("duplicate alternative '" + a + "'");
  }
  if (raw.size() != alternatives_.size()) throw TableError("performance rows do not match the alternatives");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != criteria_.size())
      throw TableError("alternative '" + alternatives_[i] + "' does not have one value per criterion");
    for (std::size_t j = 0; j < criteria_.size(); ++j) {
      const auto& c = criteria_[j];
      if (c.domain_low && (raw[i][j] < *c.domain_low || raw[i][j] > *c.domain_high))
        throw TableError("performance of '" + alternatives_[i] + "' on '" + c.name + "' is outside its domain");
      if (c.direction == Direction::Cost) raw[i][j] = -raw[i][j];
    }
  }
  gain_ = std::move(raw);
}

std::optional<std::size_t> PerformanceTable::find_alternative(const std::string& name) const {
  auto it = std::find(alternatives_.begin(), alternatives_.end(), name);
  if (it == alternatives_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alternatives_.begin());
}

std::optional<std::size_t> PerformanceTable::find_criterion(const std::string& name) const {
  for (std::size_t j = 0; j < criteria_.size(); ++j)
    if (criteria_[j].name == name) return j;
  return std::nullopt;
}

std::size_t PerformanceTable::alternative_index(const std::string& name) const {
  if (auto i = find_alternative(name)) return *i;
  throw TableError("unknown alternative '" + name + "'");
}

std::size_t PerformanceTable::criterion_index(const std::string& name) const {
  if (auto j = find_criterion(name)) return *j;
  throw TableError("unknown criterion '" + name + "'");
}

const Rational& PerformanceTable::performance(std::size_t alternative, std::size_t criterion) const {
  return gain_.at(alternative).at(criterion);
}

Rational PerformanceTable::raw_performance(std::size_t alternative, std::size_t criterion) const {
  const Rational& v = performance(alternative, criterion);
  return criteria_.at(criterion).direction == Direction::Cost ? -v : v;
}

std::pair<Rational, Rational> PerformanceTable::domain(std::size_t criterion) const {
  const auto& c = criteria_.at(criterion);
  if (c.domain_low) {
    if (c.direction == Direction::Cost) return {-*c.domain_high, -*c.domain_low};
    return {*c.domain_low, *c.domain_high};
  }
  if (gain_.empty()) throw TableError("criterion '" + c.name + "' has no observed domain");
  Rational low = gain_.front()[criterion];
  Rational high = low;
  for (const auto& row : gain_) {
    low = std::min(low, row[criterion]);
    high = std::max(high, row[criterion]);
  }
  return {low, high};
}

} // namespace segdesc::uta
