#pragma once

#include "segdesc/core/inequality.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace segdesc::analysis {

class OracleLimitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kOracleMaxVariables = 6;

/// Brute-force feasibility over exact rationals, independent of the SD
/// engine: every minimal face of a nonempty polyhedron contains a point that
/// solves some rank-sized subsystem of tight rows, so the search tries all of
/// them. Throws OracleLimitError above kOracleMaxVariables variables.
bool oracle_feasible(std::span<const core::LabeledInequality> ineqs, std::size_t variable_count);
bool oracle_feasible(std::span<const core::RawRelation> relations, const Rational& epsilon,
                     std::size_t variable_count);

/// Vertices (points indexed by VarId::value) of a pointed polyhedron, each
/// listed once; empty when the polyhedron is empty or has no vertex.
std::vector<std::vector<Rational>> oracle_vertices(std::span<const core::LabeledInequality> ineqs,
                                                   std::size_t variable_count);

} // namespace segdesc::analysis
