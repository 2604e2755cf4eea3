#pragma once

#include "segdesc/core/inequality.hpp"
#include "segdesc/uta/comparisons.hpp"
#include "segdesc/uta/performance_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segdesc::uta {

enum class MarginalShape { Linear, Piecewise };

struct ModelConfig {
  Rational epsilon{1, 100};
  MarginalShape marginals = MarginalShape::Linear;
  /// Criterion names; all criteria when empty.
  std::optional<std::vector<std::string>> criteria_subset;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

class ModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Position of each alternative on [0, 1] of the criterion's domain.
std::vector<Rational> rescale(const PerformanceTable& table, std::size_t criterion);

/// Additive value model over a table. Linear marginals use one weight "w<j>"
/// per criterion (j = 1-based column); piecewise marginals use "u<j>@s<s>"
/// for characteristic points s = 2..gamma, the first point being fixed at 0.
class UtaModel {
public:
  UtaModel(PerformanceTable table, ModelConfig config);

  const PerformanceTable& table() const { return table_; }
  const ModelConfig& config() const { return config_; }
  const core::VariableSet& variables() const { return vars_; }
  /// Column indices of the criteria in the model, in table order.
  const std::vector<std::size_t>& active_criteria() const { return active_; }
  int gamma(std::size_t criterion) const;

  /// Variable of characteristic point s (2..gamma) of a criterion.
  core::VarId point_variable(std::size_t criterion, int s) const;
  /// Gain-oriented characteristic point s (1..gamma).
  Rational characteristic_point(std::size_t criterion, int s) const;

  /// Marginal value of a gain-oriented performance on an active criterion.
  core::LinearExpr marginal_value_expr(std::size_t criterion, const Rational& performance) const;
  core::LinearExpr value_expr(std::size_t alternative) const;

  /// `U(first) >= U(second) + slack`.
  core::RawRelation preference(std::size_t first, std::size_t second, const Rational& slack,
                               core::OriginTag origin) const;

  /// Monotonicity (non-negativity for linear marginals), the normalisation
  /// equality, then one relation per comparison in input order.
  std::vector<core::RawRelation> build_system(const ReferenceComparisons& comparisons) const;

private:
  PerformanceTable table_;
  ModelConfig config_;
  std::vector<std::size_t> active_;
  std::vector<std::vector<core::VarId>> points_; // per column, s = 2..gamma
  core::VariableSet vars_;
};

} // namespace segdesc::uta
