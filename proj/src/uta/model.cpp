#include "segdesc/uta/model.hpp"

#include <algorithm>

namespace segdesc::uta {

using core::LinearExpr;
using core::OriginKind;
using core::OriginTag;
using core::RawRelation;
using core::Relation;

std::vector<Rational> rescale(const PerformanceTable& table, std::size_t criterion) {
  const auto [low, high] = table.domain(criterion);
  if (low == high)
    throw ModelError("criterion '" + table.criteria().at(criterion).name + "' has a degenerate domain");
  std::vector<Rational> out;
  out.reserve(table.alternative_count());
  for (std::size_t i = 0; i < table.alternative_count(); ++i)
    out.push_back((table.performance(i, criterion) - low) / (high - low));
  return out;
}

UtaModel::UtaModel(PerformanceTable table, ModelConfig config)
    : table_(std::move(table)), config_(std::move(config)), points_(table_.criterion_count()) {
  if (config_.epsilon.sign() <= 0) throw ModelError("epsilon must be positive");
  if (config_.criteria_subset) {
    if (config_.criteria_subset->empty()) throw ModelError("criteria subset is empty");
    for (const auto& name : *config_.criteria_subset) {
      const auto j = table_.find_criterion(name);
      if (!j) throw ModelError("unknown criterion '" + name + "' in subset");
      if (std::find(active_.begin(), active_.end(), *j) != active_.end())
        throw ModelError("criterion '" + name + "' listed twice in subset");
      active_.push_back(*j);
    }
    std::sort(active_.begin(), active_.end());
  } else {
    for (std::size_t j = 0; j < table_.criterion_count(); ++j) active_.push_back(j);
  }
  for (std::size_t j : active_) {
    const auto [low, high] = table_.domain(j);
    if (low == high) throw ModelError("criterion '" + table_.criteria()[j].name + "' has a degenerate domain");
    const std::string column = std::to_string(j + 1);
    if (config_.marginals == MarginalShape::Linear) {
      points_[j].push_back(vars_.intern("w" + column));
    } else {
      for (int s = 2; s <= gamma(j); ++s)
        points_[j].push_back(vars_.intern("u" + column + "@s" + std::to_string(s)));
    }
  }
}

int UtaModel::gamma(std::size_t criterion) const {
  return config_.marginals == MarginalShape::Linear ? 2 : table_.criteria().at(criterion).gamma;
}

core::VarId UtaModel::point_variable(std::size_t criterion, int s) const {
  const auto& list = points_.at(criterion);
  if (list.empty()) throw ModelError("criterion is not part of the model");
  if (s < 2 || s > gamma(criterion)) throw std::out_of_range("characteristic point out of range");
  return list[static_cast<std::size_t>(s - 2)];
}

Rational UtaModel::characteristic_point(std::size_t criterion, int s) const {
  const auto [low, high] = table_.domain(criterion);
  return low + (high - low) * Rational(s - 1) / Rational(gamma(criterion) - 1);
}

LinearExpr UtaModel::marginal_value_expr(std::size_t criterion, const Rational& performance) const {
  const auto [low, high] = table_.domain(criterion);
  if (performance < low || performance > high)
    throw ModelError("performance outside the domain of '" + table_.criteria().at(criterion).name + "'");
  const int g = gamma(criterion);
  auto value_at = [&](int s) {
    return s == 1 ? LinearExpr() : LinearExpr::variable(point_variable(criterion, s));
  };
  if (performance == high) return value_at(g);
  int s = 2;
  while (performance >= characteristic_point(criterion, s)) ++s;
  const Rational from = characteristic_point(criterion, s - 1);
  const Rational to = characteristic_point(criterion, s);
  const Rational t = (performance - from) / (to - from);
  return value_at(s - 1) * (Rational(1) - t) + value_at(s) * t;
}

LinearExpr UtaModel::value_expr(std::size_t alternative) const {
  LinearExpr total;
  for (std::size_t j : active_) total += marginal_value_expr(j, table_.performance(alternative, j));
  return total;
}

RawRelation UtaModel::preference(std::size_t first, std::size_t second, const Rational& slack,
                                 OriginTag origin) const {
  return RawRelation{value_expr(first), Relation::GreaterEqual, value_expr(second) + LinearExpr(slack),
                     std::move(origin)};
}

std::vector<RawRelation> UtaModel::build_system(const ReferenceComparisons& comparisons) const {
  comparisons.validate(table_);
  std::vector<RawRelation> out;
  const OriginTag model{OriginKind::Model, {}};
  for (std::size_t j : active_) {
    LinearExpr previous;
    for (int s = 2; s <= gamma(j); ++s) {
      const LinearExpr current = LinearExpr::variable(point_variable(j, s));
      out.push_back({current, Relation::GreaterEqual, previous, model});
      previous = current;
    }
  }
  LinearExpr total;
  for (std::size_t j : active_) total += LinearExpr::variable(point_variable(j, gamma(j)));
  out.push_back({total, Relation::Equal, LinearExpr(Rational(1)), model});
  for (const auto& c : comparisons.pairs()) {
    const auto a = table_.alternative_index(c.first);
    const auto b = table_.alternative_index(c.second);
    out.push_back({value_expr(a), c.relation == Preference::Strict ? Relation::Greater : Relation::Equal,
                   value_expr(b), OriginTag{OriginKind::Comparison, c.id()}});
  }
  return out;
}

} // namespace segdesc::uta
