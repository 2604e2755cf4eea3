#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace segdesc::analysis {

using BoolMatrix = std::vector<std::vector<bool>>;

struct RelationMatrices {
  BoolMatrix necessary;
  BoolMatrix possible;
  /// Transitive reduction of the strict part of `necessary`, row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
};

/// Edges i -> k of the strict part (R(i,k) and not R(k,i)) that no third
/// element bridges. Expects a transitive relation.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const BoolMatrix& relation);

bool is_reflexive(const BoolMatrix& relation);
bool is_transitive(const BoolMatrix& relation);

/// Evaluates cell(i, k) for every ordered pair on up to `threads` workers
/// (0 = hardware concurrency). Cells are independent.
BoolMatrix evaluate_pairs(std::size_t n, unsigned threads, const std::function<bool(std::size_t, std::size_t)>& cell);

} // namespace segdesc::analysis
