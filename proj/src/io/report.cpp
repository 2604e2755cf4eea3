#include "segdesc/io/report.hpp"

#include "segdesc/analysis/relations.hpp"

namespace segdesc::io {

namespace {

using analysis::Analyzer;
using analysis::IndexSet;

std::string inequality_text(const core::SdSystem& system, const core::LabeledInequality& ineq) {
  if (const auto* bound = system.bound_of(ineq.id))
    return display_bound(*bound, system.variables(), system.ordering());
  return display_expr(ineq.body, system.variables(), system.ordering()) + " ≤ 0";
}

Json node_json(const core::SdSystem& system, core::IneqId id) {
  const auto& ineq = system.inequality(id);
  Json node{{"id", ineq.id}, {"label", ineq.label()}, {"text", inequality_text(system, ineq)},
            {"origin", std::string(core::origin_name(ineq.origin.kind))}};
  if (!ineq.origin.reference.empty()) node["reference"] = ineq.origin.reference;
  if (!ineq.is_original())
    node["parents"] = Json::array({node_json(system, ineq.parent_lower), node_json(system, ineq.parent_upper)});
  return node;
}

Json names_of(const std::vector<std::string>& all, const IndexSet& set) {
  Json out = Json::array();
  for (std::size_t i : set) out.push_back(all.at(i));
  return out;
}

std::vector<std::string> comparison_ids(const analysis::Problem& problem) {
  std::vector<std::string> ids;
  for (const auto& c : problem.comparisons.pairs()) ids.push_back(c.id());
  return ids;
}

std::string mode_name(core::SegmentMode mode) {
  return mode == core::SegmentMode::StopAtFirst ? "stop-at-first" : "enumerate-all";
}

std::string matrix_row(const std::vector<bool>& row) {
  std::string s;
  for (bool b : row) s += b ? 'T' : 'F';
  return s;
}

Json explanations_json(const analysis::Explanations& e, const std::vector<std::string>& comparisons) {
  Json records = Json::array();
  for (const auto& r : e.records) {
    records.push_back(Json{{"lower", r.record.lower_id},
                           {"upper", r.record.upper_id},
                           {"roots", r.roots},
                           {"comparison_constraints", r.comparison_constraints},
                           {"comparisons", names_of(comparisons, r.comparisons)}});
  }
  Json subsets = Json::array();
  for (const auto& s : e.minimal_subsets) subsets.push_back(names_of(comparisons, s));
  return Json{{"truncated", e.truncated},
              {"contradictions", std::move(records)},
              {"constraint_subsets", e.constraint_subsets},
              {"minimal_comparison_subsets", std::move(subsets)}};
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

std::size_t alternative(const Analyzer& a, const std::string& name) {
  const auto index = a.problem().table.find_alternative(name);
  if (!index) throw ParseError("pair", "unknown alternative '" + name + "'");
  return *index;
}

std::pair<std::size_t, std::size_t> require_pair(const Analyzer& a, const AnalysisRequest& request) {
  if (!request.pair) throw ParseError("pair", "this analysis needs a pair of alternatives");
  return {alternative(a, request.pair->first), alternative(a, request.pair->second)};
}

Json header(const Analyzer& a, AnalysisKind kind) {
  const auto& problem = a.problem();
  Json ordering = Json::array();
  for (core::VarId v : a.ordering().variables()) ordering.push_back(a.model().variables().name(v));
  Json criteria = Json::array();
  for (std::size_t j : a.model().active_criteria()) criteria.push_back(problem.table.criteria()[j].name);
  return Json{{"kind", kind_name(kind)},
              {"epsilon", rational_json(problem.config.epsilon)},
              {"redundancy", policy_name(a.options().policy)},
              {"ordering", std::move(ordering)},
              {"criteria", std::move(criteria)},
              {"alternatives", problem.table.alternatives()},
              {"comparisons", comparison_ids(problem)}};
}

Json check_body(const Analyzer& a, const AnalysisRequest& request) {
  const auto mode = request.explain_all ? core::SegmentMode::EnumerateAll : core::SegmentMode::StopAtFirst;
  const auto report = a.check_consistency(mode);
  Json body{{"feasible", report.feasible}, {"mode", mode_name(mode)}};
  merge(body, explanations_json(report.explanations, comparison_ids(a.problem())));
  body["genealogy"] = report.system->contradictions().empty()
                          ? Json(nullptr)
                          : genealogy_json(*report.system, report.system->contradictions().front());
  body["system"] = system_json(*report.system);
  return body;
}

Json bounds_body(const Analyzer& a) {
  Json ranges = Json::array();
  const auto& vars = a.model().variables();
  for (const auto& r : a.weight_ranges()) {
    Json entry{{"variable", vars.name(r.variable)},
               {"lower", r.lower ? rational_json(*r.lower) : Json(nullptr)},
               {"upper", r.upper ? rational_json(*r.upper) : Json(nullptr)}};
    entry["display"] = (r.lower ? display_number(*r.lower) + " ≤ " : std::string()) + vars.name(r.variable) +
                       (r.upper ? " ≤ " + display_number(*r.upper) : std::string());
    ranges.push_back(std::move(entry));
  }
  return Json{{"ranges", std::move(ranges)}, {"system", system_json(a.base())}};
}

Json relations_body(const Analyzer& a, const AnalysisRequest& request) {
  const auto& names = a.problem().table.alternatives();
  if (request.pair) {
    const auto [i, k] = require_pair(a, request);
    Json body{{"pair", Json::array({names[i], names[k]})}};
    if (request.necessary) body["necessary"] = a.robust_relation(analysis::RelationKind::Necessary, i, k);
    if (request.possible) body["possible"] = a.robust_relation(analysis::RelationKind::Possible, i, k);
    return body;
  }
  const std::size_t m = names.size();
  Json body = Json::object();
  auto cell = [&](analysis::RelationKind kind) {
    return analysis::evaluate_pairs(m, a.options().threads,
                                    [&](std::size_t i, std::size_t k) { return a.robust_relation(kind, i, k); });
  };
  if (request.necessary) {
    const auto necessary = cell(analysis::RelationKind::Necessary);
    Json rows = Json::array();
    for (const auto& row : necessary) rows.push_back(matrix_row(row));
    body["necessary"] = std::move(rows);
    Json edges = Json::array();
    for (const auto& [i, k] : analysis::hasse_edges(necessary)) edges.push_back(Json::array({names[i], names[k]}));
    body["hasse_edges"] = std::move(edges);
    body["necessary_reflexive"] = analysis::is_reflexive(necessary);
    body["necessary_transitive"] = analysis::is_transitive(necessary);
  }
  if (request.possible) {
    Json rows = Json::array();
    for (const auto& row : cell(analysis::RelationKind::Possible)) rows.push_back(matrix_row(row));
    body["possible"] = std::move(rows);
  }
  return body;
}

Json reduct_body(const Analyzer& a, const AnalysisRequest& request) {
  const auto [i, k] = require_pair(a, request);
  const auto result = a.preference_reduct(i, k);
  const auto ids = comparison_ids(a.problem());
  const auto& names = a.problem().table.alternatives();
  Json body{{"pair", Json::array({names[i], names[k]})},
            {"hypothesis", names[k] + " > " + names[i]}};
  merge(body, explanations_json(result.explanations, ids));
  Json reducts = Json::array();
  for (const auto& r : result.reducts) reducts.push_back(names_of(ids, r));
  body["reducts"] = std::move(reducts);
  body["verified"] = result.verified;
  body["system"] = system_json(*result.system);
  return body;
}

Json construct_body(const Analyzer& a, const AnalysisRequest& request) {
  const auto [i, k] = require_pair(a, request);
  const auto result = a.preference_construct(i, k);
  const auto ids = comparison_ids(a.problem());
  const auto& names = a.problem().table.alternatives();
  Json body{{"pair", Json::array({names[i], names[k]})},
            {"hypothesis", names[i] + " >= " + names[k]}};
  merge(body, explanations_json(result.explanations, ids));
  Json hitting = Json::array();
  for (const auto& h : result.hitting_sets) hitting.push_back(names_of(ids, h));
  Json constructs = Json::array();
  for (const auto& c : result.constructs) constructs.push_back(names_of(ids, c));
  body["unsalvageable"] = result.unsalvageable;
  body["hitting_sets"] = std::move(hitting);
  body["constructs"] = std::move(constructs);
  body["verified"] = result.verified;
  body["system"] = system_json(*result.system);
  return body;
}

Json criteria_reducts_body(const Analyzer& a) {
  const auto result = a.criteria_reducts();
  const auto& criteria = a.problem().table.criteria();
  auto names = [&](const std::vector<std::size_t>& set) {
    Json out = Json::array();
    for (std::size_t j : set) out.push_back(criteria[j].name);
    return out;
  };
  Json evaluated = Json::array();
  for (const auto& e : result.evaluated) evaluated.push_back(Json{{"criteria", names(e.criteria)}, {"consistent", e.consistent}});
  Json reducts = Json::array();
  for (const auto& r : result.reducts) reducts.push_back(names(r));
  return Json{{"evaluated", std::move(evaluated)}, {"reducts", std::move(reducts)}};
}

} // namespace

Json system_json(const core::SdSystem& system) {
  const auto& vars = system.variables();
  Json ordering = Json::array();
  for (core::VarId v : system.ordering().variables()) ordering.push_back(vars.name(v));
  Json inequalities = Json::array();
  for (const auto& ineq : system.registry()) {
    Json row{{"id", ineq.id},
             {"label", ineq.label()},
             {"origin", std::string(core::origin_name(ineq.origin.kind))}};
    if (!ineq.origin.reference.empty()) row["reference"] = ineq.origin.reference;
    row["body"] = expr_json(ineq.body, vars);
    if (const auto* bound = system.bound_of(ineq.id)) {
      row["bound"] = Json{{"variable", vars.name(bound->variable)},
                          {"kind", bound->kind == core::BoundKind::Lower ? "lower" : "upper"},
                          {"expr", expr_json(bound->expr, vars)}};
    } else {
      row["bound"] = nullptr;
    }
    row["text"] = inequality_text(system, ineq);
    inequalities.push_back(std::move(row));
  }
  Json contradictions = Json::array();
  for (const auto& c : system.contradictions()) contradictions.push_back(Json{{"lower", c.lower_id}, {"upper", c.upper_id}});
  return Json{{"ordering", std::move(ordering)},
              {"mode", mode_name(system.options().mode)},
              {"redundancy", policy_name(system.options().policy)},
              {"feasible", system.feasible()},
              {"truncated", system.truncated()},
              {"inequalities", std::move(inequalities)},
              {"contradictions", std::move(contradictions)}};
}

Json genealogy_json(const core::SdSystem& system, const core::ContradictionRecord& record) {
  Json out{{"lower", node_json(system, record.lower_id)}};
  if (record.upper_id != record.lower_id) out["upper"] = node_json(system, record.upper_id);
  const auto roots = core::backtrack(system, record);
  out["roots"] = Json(std::vector<core::IneqId>(roots.begin(), roots.end()));
  return out;
}

ReportDocument run_analysis(const Analyzer& a, const AnalysisRequest& request) {
  Json body = header(a, request.kind);
  switch (request.kind) {
  case AnalysisKind::Check: merge(body, check_body(a, request)); break;
  case AnalysisKind::Bounds: merge(body, bounds_body(a)); break;
  case AnalysisKind::Relations: merge(body, relations_body(a, request)); break;
  case AnalysisKind::Reduct: merge(body, reduct_body(a, request)); break;
  case AnalysisKind::Construct: merge(body, construct_body(a, request)); break;
  case AnalysisKind::CriteriaReducts: merge(body, criteria_reducts_body(a)); break;
  case AnalysisKind::Trace: body["system"] = system_json(a.base()); break;
  }
  return {kind_name(request.kind), std::move(body)};
}

std::string render_json(const ReportDocument& report) { return report.body.dump(2) + "\n"; }

ReportDocument error_report(const std::string& type, const std::string& message, const std::string& location) {
  Json error{{"type", type}, {"message", message}};
  if (!location.empty()) error["location"] = location;
  return {"error", Json{{"kind", "error"}, {"error", std::move(error)}}};
}

} // namespace segdesc::io
