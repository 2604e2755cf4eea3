#pragma once

#include "segdesc/analysis/analyzer.hpp"
#include "segdesc/io/json_values.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace segdesc::io {

/// A problem plus the run settings that travel with it.
struct ProblemDocument {
  std::string name;
  analysis::Problem problem;
  analysis::OrderingSpec ordering;
  std::optional<core::RedundancyPolicy> redundancy;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// JSON document:
///   {"name", "epsilon": "0.01", "marginals": "linear"|"piecewise",
///    "criteria": [{"name", "direction": "gain"|"cost", "domain": [lo, hi], "gamma"}],
///    "alternatives": [{"name", "performances": {criterion: value} | [values]}],
///    "ranking": "a6 ~ a9 > a8", "comparisons": ["a8>a14", ...],
///    "criteria_subset": [...], "ordering": "declaration"|"frequency"|[variables],
///    "redundancy": "none"|"dup"|"bounds"}
/// Errors name the offending field, or the line for syntax errors.
ProblemDocument parse_problem_json(std::string_view text);

/// CSV table (first column: alternative names, header: criterion names) and
/// a line-based preference file with directives
///   epsilon 0.01 | ranking a6 ~ a9 > a8 | compare a8 > a14 | cost g2 |
///   domain g1 0 100 | gamma g1 3 | marginals piecewise | subset g1 g3 |
///   ordering frequency | ordering w2 w1 w3 | redundancy dup
ProblemDocument parse_problem_csv(std::string_view csv, std::string_view prefs);

/// Reads JSON, or CSV when the path ends in ".csv" (prefs optional).
ProblemDocument load_problem(const std::filesystem::path& path,
                             const std::optional<std::filesystem::path>& prefs = std::nullopt);

/// "declaration", "frequency" or a list of variables, position 1 first.
analysis::OrderingSpec parse_ordering(const Json& value, const std::string& location);

Json problem_to_json(const ProblemDocument& doc);
std::string serialize_problem(const ProblemDocument& doc);

/// Analysis options implied by the document (ordering, redundancy policy).
analysis::AnalysisOptions options_for(const ProblemDocument& doc);

/// Checks names used by comparisons; `location` prefixes error locations.
void validate_comparisons(const ProblemDocument& doc, const std::string& location);

} // namespace segdesc::io
