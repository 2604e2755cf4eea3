#include "segdesc/io/requests.hpp"

namespace segdesc::io {

namespace {

struct KindName {
  AnalysisKind kind;
  const char* name;
};
constexpr KindName kKinds[] = {
    {AnalysisKind::Check, "check"},         {AnalysisKind::Bounds, "bounds"},
    {AnalysisKind::Relations, "relations"}, {AnalysisKind::Reduct, "reduct"},
    {AnalysisKind::Construct, "construct"}, {AnalysisKind::CriteriaReducts, "criteria-reducts"},
    {AnalysisKind::Trace, "trace"},
};

bool read_flag(const Json& body, const char* key, bool fallback) {
  if (!body.contains(key)) return fallback;
  if (!body[key].is_boolean()) throw ParseError(key, "expected true or false");
  return body[key].get<bool>();
}

} // namespace

std::string kind_name(AnalysisKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "check";
}

AnalysisKind parse_kind(const std::string& text, const std::string& location) {
  for (const auto& k : kKinds)
    if (text == k.name) return k.kind;
  throw ParseError(location, "unknown analysis kind '" + text + "'");
}

std::pair<std::string, std::string> parse_pair(const std::string& text, const std::string& location) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw ParseError(location, "expected two alternatives as 'i,k'");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto first = trim(text.substr(0, comma));
  auto second = trim(text.substr(comma + 1));
  if (first.empty() || second.empty()) throw ParseError(location, "expected two alternatives as 'i,k'");
  return {first, second};
}

AnalysisRequest parse_request(const Json& body) {
  if (!body.is_object()) throw ParseError("", "analysis request must be a JSON object");
  if (!body.contains("kind") || !body["kind"].is_string()) throw ParseError("kind", "missing analysis kind");
  AnalysisRequest r;
  r.kind = parse_kind(body["kind"].get<std::string>(), "kind");
  r.explain_all = read_flag(body, "explain_all", false);
  r.necessary = read_flag(body, "necessary", true);
  r.possible = read_flag(body, "possible", true);
  if (body.contains("pair")) {
    const Json& p = body["pair"];
    if (p.is_string()) {
      r.pair = parse_pair(p.get<std::string>(), "pair");
    } else if (p.is_array() && p.size() == 2 && p[0].is_string() && p[1].is_string()) {
      r.pair = std::make_pair(p[0].get<std::string>(), p[1].get<std::string>());
    } else {
      throw ParseError("pair", "expected [\"i\", \"k\"] or \"i,k\"");
    }
  }
  return r;
}

Json request_to_json(const AnalysisRequest& r) {
  Json body{{"kind", kind_name(r.kind)}};
  if (r.explain_all) body["explain_all"] = true;
  if (!r.necessary) body["necessary"] = false;
  if (!r.possible) body["possible"] = false;
  if (r.pair) body["pair"] = Json::array({r.pair->first, r.pair->second});
  return body;
}

} // namespace segdesc::io
