#pragma once

#include "segdesc/core/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace segdesc::uta {

enum class Direction { Gain, Cost };

struct Criterion {
  std::string name;
  Direction direction = Direction::Gain;
  int gamma = 2;
  /// Explicit domain in the criterion's own units; observed min/max otherwise.
  std::optional<Rational> domain_low;
  std::optional<Rational> domain_high;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

class TableError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Complete alternative x criterion table. Cost criteria are stored negated so
/// every criterion reads as gain from here on.
class PerformanceTable {
public:
  PerformanceTable() = default;
  /// `raw[i][j]` is alternative i on criterion j, in the criterion's units.
  PerformanceTable(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                   std::vector<std::vector<Rational>> raw);

  const std::vector<Criterion>& criteria() const { return criteria_; }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  std::size_t criterion_count() const { return criteria_.size(); }
  std::size_t alternative_count() const { return alternatives_.size(); }

  std::optional<std::size_t> find_alternative(const std::string& name) const;
  std::optional<std::size_t> find_criterion(const std::string& name) const;
  std::size_t alternative_index(const std::string& name) const; // throws TableError
  std::size_t criterion_index(const std::string& name) const;   // throws TableError

  /// Gain-oriented performance (negated for cost criteria).
  const Rational& performance(std::size_t alternative, std::size_t criterion) const;
  /// Performance as given.
  Rational raw_performance(std::size_t alternative, std::size_t criterion) const;

  /// Gain-oriented [low, high] used for rescaling.
  std::pair<Rational, Rational> domain(std::size_t criterion) const;

  friend bool operator==(const PerformanceTable&, const PerformanceTable&) = default;

private:
  std::vector<Criterion> criteria_;
  std::vector<std::string> alternatives_;
  std::vector<std::vector<Rational>> gain_;
};

} // namespace segdesc::uta
