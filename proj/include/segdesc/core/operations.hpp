#pragma once

#include "segdesc/core/sd_system.hpp"

#include <span>
#include <variant>

namespace segdesc::core {

struct Tautology {};
struct ImmediateContradiction {};
using IsoResult = std::variant<Bound, Tautology, ImmediateContradiction>;

/// Solves `body <= 0` for its highest-positioned variable.
IsoResult iso(const LinearExpr& body, const Ordering& ordering, IneqId source = 0);
inline IsoResult iso(const LabeledInequality& ineq, const Ordering& ordering) {
  return iso(ineq.body, ordering, ineq.id);
}

/// `lower.expr - upper.expr <= 0`, labelled with both parents and id 0.
LabeledInequality cro(const Bound& lower, const Bound& upper);

/// All coefficients zero and a positive constant.
bool detect_contradiction(const LinearExpr& body);
inline bool detect_contradiction(const LabeledInequality& ineq) { return detect_contradiction(ineq.body); }

/// Closed interval for a variable; a missing side is unbounded.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// Constant bounds of every ordered variable, indexed by VarId::value.
std::vector<Interval> constant_box(const SdSystem& system);

/// True when `a` is at least as tight as `b` at every point of the box:
/// a.expr >= b.expr for lower bounds, a.expr <= b.expr for upper bounds.
/// Needs both box sides for every variable the two expressions disagree on.
bool dominates(const Bound& a, const Bound& b, std::span<const Interval> box);

/// Sound, incomplete redundancy test against bounds already stored.
bool is_redundant_bounds_method(const SdSystem& system, const Bound& candidate);

struct AdjoinResult {
  bool added = false;
  IneqId id = 0;
};

/// Registers a non-contradictory candidate under a fresh id unless the policy
/// suppresses it. Tautologies are never registered.
AdjoinResult adjoin(SdSystem& system, LabeledInequality candidate, RedundancyPolicy policy);

} // namespace segdesc::core
