#pragma once

#include "segdesc/analysis/hitting_sets.hpp"
#include "segdesc/core/sd_system.hpp"
#include "segdesc/uta/comparisons.hpp"

#include <vector>

namespace segdesc::analysis {

struct ContradictionExplanation {
  core::ContradictionRecord record;
  std::vector<core::IneqId> roots;                   // original ids, ascending
  std::vector<core::IneqId> comparison_constraints;  // roots tagged COMPARISON
  IndexSet comparisons;                              // indices into the reference comparisons
};

struct Explanations {
  std::vector<ContradictionExplanation> records;
  /// Distinct comparison_constraints over all records, by size then content.
  std::vector<std::vector<core::IneqId>> constraint_subsets;
  /// Inclusion-minimal comparison index sets over all records.
  std::vector<IndexSet> minimal_subsets;
  bool truncated = false;
};

/// Backtracks every contradiction of the system and maps roots to the
/// comparisons their COMPARISON tags name.
Explanations explain(const core::SdSystem& system, const uta::ReferenceComparisons& comparisons);

} // namespace segdesc::analysis
