#include "segdesc/analysis/hitting_sets.hpp"

#include <algorithm>
#include <set>

namespace segdesc::analysis {

namespace {

bool subset_of(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool meets(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

bool shorter_first(const IndexSet& a, const IndexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

} // namespace

std::vector<IndexSet> inclusion_minimal(std::vector<IndexSet> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end(), shorter_first);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> out;
  for (const auto& s : sets)
    if (std::none_of(out.begin(), out.end(), [&](const IndexSet& m) { return subset_of(m, s); }))
      out.push_back(s);
  return out;
}

std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet>& input) {
  const auto family = inclusion_minimal(input);
  if (std::any_of(family.begin(), family.end(), [](const IndexSet& s) { return s.empty(); })) return {};

  std::set<IndexSet> found;
  IndexSet current;
  auto is_minimal = [&](const IndexSet& h) {
    for (std::size_t drop = 0; drop < h.size(); ++drop) {
      IndexSet smaller = h;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      if (std::all_of(family.begin(), family.end(), [&](const IndexSet& s) { return meets(s, smaller); }))
        return false;
    }
    return true;
  };
  auto branch = [&](auto&& self) -> void {
    // Bound: a superset of a known minimal hitting set cannot be minimal.
    for (const auto& h : found)
      if (subset_of(h, current)) return;
    auto unhit = std::find_if(family.begin(), family.end(), [&](const IndexSet& s) { return !meets(s, current); });
    if (unhit == family.end()) {
      if (is_minimal(current)) found.insert(current);
      return;
    }
    for (std::size_t e : *unhit) {
      current.insert(std::lower_bound(current.begin(), current.end(), e), e);
      self(self);
      current.erase(std::lower_bound(current.begin(), current.end(), e));
    }
  };
  branch(branch);
  std::vector<IndexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), shorter_first);
  return out;
}

} // namespace segdesc::analysis
