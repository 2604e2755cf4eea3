#pragma once

#include <cstddef>
#include <vector>

namespace segdesc::analysis {

using IndexSet = std::vector<std::size_t>; // sorted, no repeats

/// Drops every set that strictly contains another one, and duplicates.
/// Result is ordered by size, then lexicographically.
std::vector<IndexSet> inclusion_minimal(std::vector<IndexSet> sets);

/// All inclusion-minimal sets meeting every input set, by branch and bound.
/// An empty input set admits no hitting set; an empty family is hit by {}.
std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet>& sets);

} // namespace segdesc::analysis
