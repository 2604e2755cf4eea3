#pragma once

#include "segdesc/io/json_values.hpp"

#include <optional>
#include <string>
#include <utility>

namespace segdesc::io {

enum class AnalysisKind { Check, Bounds, Relations, Reduct, Construct, CriteriaReducts, Trace };

std::string kind_name(AnalysisKind kind);
AnalysisKind parse_kind(const std::string& text, const std::string& location);

struct AnalysisRequest {
  AnalysisKind kind = AnalysisKind::Check;
  /// check: enumerate every contradiction instead of stopping at the first.
  bool explain_all = false;
  /// relations: which matrices to compute.
  bool necessary = true;
  bool possible = true;
  /// relations (single pair), reduct, construct.
  std::optional<std::pair<std::string, std::string>> pair;

  friend bool operator==(const AnalysisRequest&, const AnalysisRequest&) = default;
};

/// {"kind": "reduct", "pair": ["a14", "a1"], "explain_all": false,
///  "necessary": true, "possible": true}
AnalysisRequest parse_request(const Json& body);
Json request_to_json(const AnalysisRequest& request);

/// "a14,a1" -> {"a14", "a1"}.
std::pair<std::string, std::string> parse_pair(const std::string& text, const std::string& location);

} // namespace segdesc::io
