#pragma once

#include "segdesc/analysis/analyzer.hpp"
#include "segdesc/io/json_values.hpp"
#include "segdesc/io/requests.hpp"

#include <string>

namespace segdesc::io {

/// Structured analysis result. Exact values are strings; every inequality
/// row carries its "{l,h,k}" label next to a two-decimal rendering.
struct ReportDocument {
  std::string kind;
  Json body;
};

/// Runs one analysis. Throws ParseError for unknown alternatives or a
/// missing pair and analysis::PreconditionError when the analysis does not
/// apply.
ReportDocument run_analysis(const analysis::Analyzer& analyzer, const AnalysisRequest& request);

/// Same bytes whichever front end produced the report.
std::string render_json(const ReportDocument& report);

/// Report for an error, in the same envelope.
ReportDocument error_report(const std::string& type, const std::string& message, const std::string& location = {});

Json system_json(const core::SdSystem& system);

/// Ancestry of one contradiction down to the original inequalities.
Json genealogy_json(const core::SdSystem& system, const core::ContradictionRecord& record);

} // namespace segdesc::io

namespace segdesc::io {

/// Human-readable rendering: labeled tables rounded to two decimals,
/// genealogy trees and T/F grids.
std::string render_text(const ReportDocument& report);

} // namespace segdesc::io
