#pragma once

#include "segdesc/core/operations.hpp"
#include "segdesc/core/sd_system.hpp"

#include <optional>
#include <set>
#include <span>

namespace segdesc::core {

/// Runs the elimination over canonical inequalities (ids increasing). Every
/// input is registered; each level crosses its lower and upper bounds as they
/// stood when the level started, lower bounds outermost, both in id order.
SdSystem segment(std::span<const LabeledInequality> ineqs, const VariableSet& vars, const Ordering& ordering,
                 const Rational& epsilon, const SegmentOptions& options = {});

/// Adds relations to a contradiction-free system and only crosses pairs that
/// involve a new bound. Relations must use variables of the base ordering;
/// tautologies among them are dropped without an id. `options` replaces the
/// base options for the continuation.
SdSystem extend(const SdSystem& base, std::span<const RawRelation> relations,
                std::optional<SegmentOptions> options = std::nullopt);

/// Same for already canonical inequalities; ids are reassigned from base.next_id().
SdSystem extend_canonical(const SdSystem& base, std::span<const LabeledInequality> ineqs,
                          std::optional<SegmentOptions> options = std::nullopt);

/// Original inequalities reached by following parents from both sides.
std::set<IneqId> backtrack(const SdSystem& system, const ContradictionRecord& record);

/// Original ancestors of a single inequality.
std::set<IneqId> ancestors(const SdSystem& system, IneqId id);

struct BoundProjection {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::vector<Bound> lower_bounds;
  std::vector<Bound> upper_bounds;
};

/// Constant range for the variable at position 1; for any other variable
/// `lower`/`upper` stay empty and only the symbolic bound lists are filled.
/// Throws std::logic_error on a contradictory system.
BoundProjection project_bounds(const SdSystem& system, VarId v);

} // namespace segdesc::core
