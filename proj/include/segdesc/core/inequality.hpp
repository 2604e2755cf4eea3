#pragma once

#include "segdesc/core/linear_expr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segdesc::core {

using IneqId = std::uint32_t;

enum class Relation { LessEqual, GreaterEqual, Equal, Less, Greater };

std::string_view relation_symbol(Relation r);

enum class OriginKind { Model, Comparison, Hypothesis, Derived };

std::string_view origin_name(OriginKind k);

/// Where an inequality came from. `reference` names the pairwise
/// comparison ("a6~a9") for COMPARISON inequalities and is free text
/// for HYPOTHESIS ones.
struct OriginTag {
  OriginKind kind = OriginKind::Model;
  std::string reference;

  friend bool operator==(const OriginTag&, const OriginTag&) = default;
};

/// `lhs relation rhs`, before any normalisation.
struct RawRelation {
  LinearExpr lhs;
  Relation relation = Relation::LessEqual;
  LinearExpr rhs;
  OriginTag origin;
};

/// An inequality `body <= 0` with its genealogy label {id, parent_lower, parent_upper}.
struct LabeledInequality {
  IneqId id = 0;
  IneqId parent_lower = 0;
  IneqId parent_upper = 0;
  LinearExpr body;
  OriginTag origin;

  bool is_original() const { return parent_lower == id && parent_upper == id; }
  std::string label() const;
};

enum class BoundKind { Lower, Upper };

/// `variable >= expr` (Lower) or `variable <= expr` (Upper); expr only uses
/// variables placed before `variable` in the ordering.
struct Bound {
  VarId variable;
  BoundKind kind = BoundKind::Lower;
  LinearExpr expr;
  IneqId source = 0;
};

} // namespace segdesc::core
