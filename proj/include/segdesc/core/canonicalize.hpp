#pragma once

#include "segdesc/core/inequality.hpp"

#include <span>
#include <vector>

namespace segdesc::core {

/// Rewrites raw relations as `body <= 0`, numbered from `first_id` with the
/// original label {l,l,l}. An equality `x = y` yields `x >= y` then `x <= y`;
/// strict relations take an epsilon slack (`x > y` becomes `x >= y + eps`).
std::vector<LabeledInequality> canonicalize(std::span<const RawRelation> relations,
                                            const Rational& epsilon, IneqId first_id = 1);

/// Body of a single non-equality relation.
LinearExpr canonical_body(const RawRelation& relation, const Rational& epsilon);

} // namespace segdesc::core
