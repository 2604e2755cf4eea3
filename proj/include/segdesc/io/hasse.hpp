#pragma once

#include "segdesc/analysis/relations.hpp"

#include <string>
#include <vector>

namespace segdesc::io {

/// DOT digraph of the transitive reduction of the strict necessary relation.
/// Nodes appear in alternative order, edges sorted by (from, to).
std::string export_hasse(const analysis::RelationMatrices& matrices, const std::vector<std::string>& names);

/// Same, for the edge list of a report ("hasse_edges").
std::string export_hasse(const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::vector<std::string>& names);

} // namespace segdesc::io
