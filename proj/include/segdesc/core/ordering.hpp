#pragma once

#include "segdesc/core/inequality.hpp"

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace segdesc::core {

/// Positions 1..s over the variables of a system. Position s is eliminated
/// first; position 1 ends up with constant bounds only.
class Ordering {
public:
  Ordering() = default;
  /// `by_position[0]` gets position 1. Throws on duplicates.
  explicit Ordering(std::vector<VarId> by_position);

  std::size_t size() const { return by_position_.size(); }
  bool contains(VarId v) const;
  /// 1-based; throws std::out_of_range for a variable outside the ordering.
  std::size_t position(VarId v) const;
  VarId at(std::size_t position) const;
  const std::vector<VarId>& variables() const { return by_position_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.by_position_ == b.by_position_; }

private:
  std::vector<VarId> by_position_;
  std::vector<std::size_t> position_of_; // indexed by VarId::value, 0 = absent
};

class OrderingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct DeclarationOrder {};
/// More frequent variables get lower positions; ties keep declaration order.
struct FrequencyOrder {};
struct ExplicitOrder {
  std::vector<VarId> variables;
};
using OrderingStrategy = std::variant<DeclarationOrder, FrequencyOrder, ExplicitOrder>;

/// Orders the variables that occur with a non-zero coefficient in `ineqs`.
/// An explicit list must name each of them exactly once.
Ordering order_variables(std::span<const LabeledInequality> ineqs, const OrderingStrategy& strategy);

} // namespace segdesc::core
