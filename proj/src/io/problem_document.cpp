#include "segdesc/io/problem_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace segdesc::io {

namespace {

std::string field(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string item(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

const Json& require(const Json& object, const std::string& key, const std::string& location) {
  if (!object.contains(key)) throw ParseError(field(location, key), "missing field");
  return object.at(key);
}

std::string require_string(const Json& value, const std::string& location) {
  if (!value.is_string()) throw ParseError(location, "expected a string");
  return value.get<std::string>();
}

uta::Comparison parse_comparison_at(const std::string& text, const std::string& location) {
  try {
    return uta::parse_comparison(text);
  } catch (const uta::ComparisonError& e) {
    throw ParseError(location, e.what());
  }
}

uta::MarginalShape parse_marginals(const std::string& text, const std::string& location) {
  if (text == "linear") return uta::MarginalShape::Linear;
  if (text == "piecewise") return uta::MarginalShape::Piecewise;
  throw ParseError(location, "unknown marginal shape '" + text + "' (expected linear or piecewise)");
}

void check_model(const ProblemDocument& doc) {
  try {
    uta::UtaModel model(doc.problem.table, doc.problem.config);
    (void)model;
  } catch (const uta::ModelError& e) {
    throw ParseError(doc.problem.config.criteria_subset ? "criteria_subset" : "criteria", e.what());
  }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

} // namespace

analysis::OrderingSpec parse_ordering(const Json& value, const std::string& location) {
  analysis::OrderingSpec spec;
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "declaration") return spec;
    if (text == "frequency") {
      spec.kind = analysis::OrderingSpec::Kind::Frequency;
      return spec;
    }
    throw ParseError(location, "unknown ordering '" + text + "' (expected declaration, frequency or a list)");
  }
  if (!value.is_array()) throw ParseError(location, "expected a string or a list of variables");
  spec.kind = analysis::OrderingSpec::Kind::Explicit;
  for (std::size_t i = 0; i < value.size(); ++i) spec.variables.push_back(require_string(value[i], item(location, i)));
  return spec;
}

void validate_comparisons(const ProblemDocument& doc, const std::string& location) {
  const auto& pairs = doc.problem.comparisons.pairs();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      uta::ReferenceComparisons({pairs[i]}).validate(doc.problem.table);
    } catch (const uta::ComparisonError& e) {
      throw ParseError(item(location, i), e.what());
    }
    if (!seen.insert(pairs[i].id()).second) throw ParseError(item(location, i), "comparison " + pairs[i].id() + " is listed twice");
  }
}

ProblemDocument parse_problem_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)), "invalid JSON");
  }
  if (!root.is_object()) throw ParseError("", "problem document must be a JSON object");

  ProblemDocument doc;
  if (root.contains("name")) doc.name = require_string(root["name"], "name");
  if (root.contains("epsilon")) {
    doc.problem.config.epsilon = parse_rational(root["epsilon"], "epsilon");
    if (doc.problem.config.epsilon.sign() <= 0) throw ParseError("epsilon", "must be positive");
  }
  if (root.contains("marginals"))
    doc.problem.config.marginals = parse_marginals(require_string(root["marginals"], "marginals"), "marginals");

  const Json& criteria_json = require(root, "criteria", "");
  if (!criteria_json.is_array() || criteria_json.empty()) throw ParseError("criteria", "expected a non-empty list");
  std::vector<uta::Criterion> criteria;
  for (std::size_t j = 0; j < criteria_json.size(); ++j) {
    const auto loc = item("criteria", j);
    const Json& c = criteria_json[j];
    uta::Criterion crit;
    if (c.is_string()) {
      crit.name = c.get<std::string>();
    } else if (c.is_object()) {
      crit.name = require_string(require(c, "name", loc), field(loc, "name"));
      if (c.contains("direction")) {
        const auto d = require_string(c["direction"], field(loc, "direction"));
        if (d == "cost") crit.direction = uta::Direction::Cost;
        else if (d != "gain") throw ParseError(field(loc, "direction"), "expected gain or cost");
      }
      if (c.contains("domain")) {
        const Json& d = c["domain"];
        if (!d.is_array() || d.size() != 2) throw ParseError(field(loc, "domain"), "expected [low, high]");
        crit.domain_low = parse_rational(d[0], item(field(loc, "domain"), 0));
        crit.domain_high = parse_rational(d[1], item(field(loc, "domain"), 1));
        if (*crit.domain_low >= *crit.domain_high) throw ParseError(field(loc, "domain"), "low must be below high");
      }
      if (c.contains("gamma")) {
        if (!c["gamma"].is_number_integer() || c["gamma"].get<long>() < 2)
          throw ParseError(field(loc, "gamma"), "expected an integer of at least 2");
        crit.gamma = c["gamma"].get<int>();
      }
    } else {
      throw ParseError(loc, "expected a criterion object or name");
    }
    criteria.push_back(std::move(crit));
  }

  const Json& alternatives_json = require(root, "alternatives", "");
  if (!alternatives_json.is_array()) throw ParseError("alternatives", "expected a list");
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < alternatives_json.size(); ++i) {
    const auto loc = item("alternatives", i);
    const Json& a = alternatives_json[i];
    if (!a.is_object()) throw ParseError(loc, "expected an object");
    names.push_back(require_string(require(a, "name", loc), field(loc, "name")));
    const Json& perf = require(a, "performances", loc);
    const auto perf_loc = field(loc, "performances");
    std::vector<Rational> row(criteria.size());
    if (perf.is_array()) {
      if (perf.size() != criteria.size()) throw ParseError(perf_loc, "expected one value per criterion");
      for (std::size_t j = 0; j < perf.size(); ++j) row[j] = parse_rational(perf[j], item(perf_loc, j));
    } else if (perf.is_object()) {
      for (const auto& [key, value] : perf.items()) {
        std::size_t j = 0;
        while (j < criteria.size() && criteria[j].name != key) ++j;
        if (j == criteria.size()) throw ParseError(field(perf_loc, key), "unknown criterion '" + key + "'");
      }
      for (std::size_t j = 0; j < criteria.size(); ++j) {
        if (!perf.contains(criteria[j].name)) throw ParseError(field(perf_loc, criteria[j].name), "missing performance");
        row[j] = parse_rational(perf[criteria[j].name], field(perf_loc, criteria[j].name));
      }
    } else {
      throw ParseError(perf_loc, "expected an object or a list");
    }
    rows.push_back(std::move(row));
  }
  try {
    doc.problem.table = uta::PerformanceTable(std::move(criteria), std::move(names), std::move(rows));
  } catch (const uta::TableError& e) {
    throw ParseError("alternatives", e.what());
  }

  std::vector<uta::Comparison> pairs;
  if (root.contains("ranking")) {
    try {
      pairs = uta::ReferenceComparisons::from_chain(require_string(root["ranking"], "ranking")).pairs();
    } catch (const uta::ComparisonError& e) {
      throw ParseError("ranking", e.what());
    }
  }
  if (root.contains("comparisons")) {
    const Json& list = root["comparisons"];
    if (!list.is_array()) throw ParseError("comparisons", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i)
      pairs.push_back(parse_comparison_at(require_string(list[i], item("comparisons", i)), item("comparisons", i)));
  }
  doc.problem.comparisons = uta::ReferenceComparisons(std::move(pairs));
  validate_comparisons(doc, root.contains("ranking") && !root.contains("comparisons") ? "ranking" : "comparisons");

  if (root.contains("criteria_subset")) {
    const Json& list = root["criteria_subset"];
    if (!list.is_array()) throw ParseError("criteria_subset", "expected a list");
    std::vector<std::string> subset;
    for (std::size_t i = 0; i < list.size(); ++i) subset.push_back(require_string(list[i], item("criteria_subset", i)));
    doc.problem.config.criteria_subset = std::move(subset);
  }
  if (root.contains("ordering")) doc.ordering = parse_ordering(root["ordering"], "ordering");
  if (root.contains("redundancy"))
    doc.redundancy = parse_policy(require_string(root["redundancy"], "redundancy"), "redundancy");
  check_model(doc);
  return doc;
}

ProblemDocument parse_problem_csv(std::string_view csv, std::string_view prefs) {
  auto split_lines = [](std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
    return lines;
  };
  auto split = [](const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
  };

  const auto lines = split_lines(csv);
  std::size_t first = 0;
  while (first < lines.size() && lines[first].find_first_not_of(" \t") == std::string::npos) ++first;
  if (first == lines.size()) throw ParseError("line 1", "empty table");
  const auto header = split(lines[first], ',');
  if (header.size() < 2) throw ParseError("line " + std::to_string(first + 1), "expected a name column and criteria");
  std::vector<uta::Criterion> criteria;
  for (std::size_t j = 1; j < header.size(); ++j) {
    if (header[j].empty()) throw ParseError("line " + std::to_string(first + 1), "empty criterion name");
    uta::Criterion c;
    c.name = header[j];
    criteria.push_back(std::move(c));
  }
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t n = first + 1; n < lines.size(); ++n) {
    if (lines[n].find_first_not_of(" \t") == std::string::npos) continue;
    const auto loc = "line " + std::to_string(n + 1);
    const auto cells = split(lines[n], ',');
    if (cells.size() != header.size()) throw ParseError(loc, "expected " + std::to_string(header.size()) + " cells");
    names.push_back(cells[0]);
    std::vector<Rational> row;
    for (std::size_t j = 1; j < cells.size(); ++j) {
      try {
        row.push_back(Rational::parse(cells[j]));
      } catch (const std::invalid_argument&) {
        throw ParseError(loc, "malformed number '" + cells[j] + "' for " + header[j]);
      }
    }
    rows.push_back(std::move(row));
  }

  ProblemDocument doc;
  std::vector<uta::Comparison> pairs;
  const auto pref_lines = split_lines(prefs);
  for (std::size_t n = 0; n < pref_lines.size(); ++n) {
    std::string line = pref_lines[n];
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string key;
    if (!(in >> key)) continue;
    std::string rest;
    std::getline(in, rest);
    const auto b = rest.find_first_not_of(" \t");
    rest = b == std::string::npos ? "" : rest.substr(b);
    const auto loc = "prefs line " + std::to_string(n + 1);
    std::istringstream words(rest);
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    auto find_criterion = [&](const std::string& name) -> uta::Criterion& {
      for (auto& c : criteria)
        if (c.name == name) return c;
      throw ParseError(loc, "unknown criterion '" + name + "'");
    };
    try {
      if (key == "epsilon") {
        if (args.size() != 1) throw ParseError(loc, "expected: epsilon VALUE");
        doc.problem.config.epsilon = Rational::parse(args[0]);
        if (doc.problem.config.epsilon.sign() <= 0) throw ParseError(loc, "epsilon must be positive");
      } else if (key == "ranking") {
        const auto chain = uta::ReferenceComparisons::from_chain(rest);
        pairs.insert(pairs.end(), chain.pairs().begin(), chain.pairs().end());
      } else if (key == "compare") {
        pairs.push_back(uta::parse_comparison(rest));
      } else if (key == "cost") {
        for (const auto& a : args) find_criterion(a).direction = uta::Direction::Cost;
      } else if (key == "domain") {
        if (args.size() != 3) throw ParseError(loc, "expected: domain CRITERION LOW HIGH");
        auto& c = find_criterion(args[0]);
        c.domain_low = Rational::parse(args[1]);
        c.domain_high = Rational::parse(args[2]);
      } else if (key == "gamma") {
        if (args.size() != 2) throw ParseError(loc, "expected: gamma CRITERION N");
        const int g = std::stoi(args[1]);
        if (g < 2) throw ParseError(loc, "gamma must be at least 2");
        find_criterion(args[0]).gamma = g;
      } else if (key == "marginals") {
        if (args.size() != 1) throw ParseError(loc, "expected: marginals linear|piecewise");
        doc.problem.config.marginals = parse_marginals(args[0], loc);
      } else if (key == "subset") {
        doc.problem.config.criteria_subset = args;
      } else if (key == "ordering") {
        if (args.size() == 1) doc.ordering = parse_ordering(Json(args[0]), loc);
        else doc.ordering = parse_ordering(Json(args), loc);
      } else if (key == "redundancy") {
        if (args.size() != 1) throw ParseError(loc, "expected: redundancy none|dup|bounds");
        doc.redundancy = parse_policy(args[0], loc);
      } else {
        throw ParseError(loc, "unknown directive '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(loc, e.what());
    }
  }
  try {
    doc.problem.table = uta::PerformanceTable(std::move(criteria), std::move(names), std::move(rows));
  } catch (const uta::TableError& e) {
    throw ParseError("table", e.what());
  }
  doc.problem.comparisons = uta::ReferenceComparisons(std::move(pairs));
  validate_comparisons(doc, "prefs comparisons");
  check_model(doc);
  return doc;
}

ProblemDocument load_problem(const std::filesystem::path& path, const std::optional<std::filesystem::path>& prefs) {
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError(p.string(), "cannot read file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string text = slurp(path);
  if (path.extension() == ".csv") return parse_problem_csv(text, prefs ? slurp(*prefs) : std::string());
  if (prefs) throw ParseError(prefs->string(), "a preference file only applies to CSV tables");
  return parse_problem_json(text);
}

Json problem_to_json(const ProblemDocument& doc) {
  const auto& problem = doc.problem;
  const auto& table = problem.table;
  Json root = Json::object();
  if (!doc.name.empty()) root["name"] = doc.name;
  root["epsilon"] = rational_json(problem.config.epsilon);
  root["marginals"] = problem.config.marginals == uta::MarginalShape::Linear ? "linear" : "piecewise";
  Json criteria = Json::array();
  for (const auto& c : table.criteria()) {
    Json entry{{"name", c.name}};
    if (c.direction == uta::Direction::Cost) entry["direction"] = "cost";
    if (c.domain_low) entry["domain"] = Json::array({rational_json(*c.domain_low), rational_json(*c.domain_high)});
    if (c.gamma != 2) entry["gamma"] = c.gamma;
    criteria.push_back(std::move(entry));
  }
  root["criteria"] = std::move(criteria);
  Json alternatives = Json::array();
  for (std::size_t i = 0; i < table.alternative_count(); ++i) {
    Json perf = Json::object();
    for (std::size_t j = 0; j < table.criterion_count(); ++j)
      perf[table.criteria()[j].name] = rational_json(table.raw_performance(i, j));
    alternatives.push_back(Json{{"name", table.alternatives()[i]}, {"performances", std::move(perf)}});
  }
  root["alternatives"] = std::move(alternatives);
  Json comparisons = Json::array();
  for (const auto& c : problem.comparisons.pairs()) comparisons.push_back(c.id());
  root["comparisons"] = std::move(comparisons);
  if (problem.config.criteria_subset) root["criteria_subset"] = *problem.config.criteria_subset;
  switch (doc.ordering.kind) {
  case analysis::OrderingSpec::Kind::Declaration: root["ordering"] = "declaration"; break;
  case analysis::OrderingSpec::Kind::Frequency: root["ordering"] = "frequency"; break;
  case analysis::OrderingSpec::Kind::Explicit: root["ordering"] = doc.ordering.variables; break;
  }
  if (doc.redundancy) root["redundancy"] = policy_name(*doc.redundancy);
  return root;
}

std::string serialize_problem(const ProblemDocument& doc) { return problem_to_json(doc).dump(2) + "\n"; }

analysis::AnalysisOptions options_for(const ProblemDocument& doc) {
  analysis::AnalysisOptions options;
  options.ordering = doc.ordering;
  if (doc.redundancy) options.policy = *doc.redundancy;
  return options;
}

} // namespace segdesc::io
