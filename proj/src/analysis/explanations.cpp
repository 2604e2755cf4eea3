#include "segdesc/analysis/explanations.hpp"

#include "segdesc/core/segment.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace segdesc::analysis {

Explanations explain(const core::SdSystem& system, const uta::ReferenceComparisons& comparisons) {
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < comparisons.size(); ++i) index_of.emplace(comparisons.pairs()[i].id(), i);

  Explanations out;
  out.truncated = system.truncated();
  std::set<std::vector<core::IneqId>> constraint_sets;
  std::vector<IndexSet> comparison_sets;
  for (const auto& record : system.contradictions()) {
    ContradictionExplanation e;
    e.record = record;
    const auto roots = core::backtrack(system, record);
    e.roots.assign(roots.begin(), roots.end());
    std::set<std::size_t> used;
    for (core::IneqId id : e.roots) {
      const auto& origin = system.inequality(id).origin;
      if (origin.kind != core::OriginKind::Comparison) continue;
      e.comparison_constraints.push_back(id);
      if (auto it = index_of.find(origin.reference); it != index_of.end()) used.insert(it->second);
    }
    e.comparisons.assign(used.begin(), used.end());
    constraint_sets.insert(e.comparison_constraints);
    comparison_sets.push_back(e.comparisons);
    out.records.push_back(std::move(e));
  }
  out.constraint_subsets.assign(constraint_sets.begin(), constraint_sets.end());
  std::stable_sort(out.constraint_subsets.begin(), out.constraint_subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  out.minimal_subsets = inclusion_minimal(std::move(comparison_sets));
  return out;
}

} // namespace segdesc::analysis
