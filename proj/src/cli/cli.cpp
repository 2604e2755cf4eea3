#include "segdesc/cli/cli.hpp"

#include "segdesc/core/ordering.hpp"
#include "segdesc/core/sd_system.hpp"
#include "segdesc/io/hasse.hpp"
#include "segdesc/io/problem_document.hpp"
#include "segdesc/io/report.hpp"
#include "segdesc/service/http_server.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace segdesc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kPrecondition = 1;
constexpr int kUsage = 2;

struct Settings {
  std::string problem;
  std::string prefs;
  std::string epsilon;
  std::string redundancy;
  std::string order;
  std::string format = "text";
  std::string output;
  std::string pair;
  std::string dot;
  bool explain_all = false;
  bool necessary = false;
  bool possible = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string snapshot;
};

void apply_overrides(io::ProblemDocument& doc, const Settings& s) {
  if (!s.epsilon.empty()) {
    Rational eps;
    try {
      eps = Rational::parse(s.epsilon);
    } catch (const std::exception&) {
      throw io::ParseError("--epsilon", "not an exact number: '" + s.epsilon + "'");
    }
    if (eps.sign() <= 0) throw io::ParseError("--epsilon", "must be positive");
    doc.problem.config.epsilon = eps;
  }
  if (!s.redundancy.empty()) doc.redundancy = io::parse_policy(s.redundancy, "--redundancy");
  if (!s.order.empty()) {
    if (s.order == "declaration" || s.order == "frequency") {
      doc.ordering = io::parse_ordering(io::Json(s.order), "--order");
    } else {
      io::Json list = io::Json::array();
      std::size_t start = 0;
      while (start <= s.order.size()) {
        const auto end = std::min(s.order.find(',', start), s.order.size());
        list.push_back(s.order.substr(start, end - start));
        start = end + 1;
      }
      doc.ordering = io::parse_ordering(list, "--order");
    }
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io::ParseError(path, "cannot write file");
  file << text;
}

int analyze(io::AnalysisKind kind, const Settings& s, std::ostream& out, std::ostream& err) {
  try {
    auto doc = io::load_problem(s.problem, s.prefs.empty() ? std::nullopt : std::optional<std::filesystem::path>(s.prefs));
    apply_overrides(doc, s);
    io::AnalysisRequest request;
    request.kind = kind;
    request.explain_all = s.explain_all;
    if (s.necessary || s.possible) {
      request.necessary = s.necessary;
      request.possible = s.possible;
    }
    if (!s.dot.empty()) request.necessary = true;
    if (!s.pair.empty()) request.pair = io::parse_pair(s.pair, "--pair");

    const analysis::Analyzer analyzer(doc.problem, io::options_for(doc));
    const auto report = io::run_analysis(analyzer, request);
    const auto text = s.format == "json" ? io::render_json(report) : io::render_text(report);
    if (s.output.empty()) out << text;
    else write_text(s.output, text);

    if (!s.dot.empty()) {
      if (request.pair) throw io::ParseError("--dot", "needs the full matrices, not a single --pair");
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& e : report.body["hasse_edges"]) edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      write_text(s.dot, io::export_hasse(edges, report.body["alternatives"].get<std::vector<std::string>>()));
    }
    return kOk;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const core::OrderingError& e) {
    err << "error: " << e.what() << " (at --order)\n";
    return kUsage;
  } catch (const analysis::PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const core::SegmentLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact segmenting-description analysis of UTA preference models", "segdesc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--epsilon", s.epsilon, "Strict-preference threshold, e.g. 0.01 or 1/100");
  app.add_option("--redundancy", s.redundancy, "Redundancy filter")->check(CLI::IsMember({"none", "dup", "bounds"}));
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("SEGDESC_FORMAT");
  app.add_option("--output", s.output, "Write the report to this file");
  app.add_option("--order", s.order, "Variable ordering: declaration, frequency or w2,w1,w3");
  app.add_option("--prefs", s.prefs, "Preference file for a CSV performance table");

  auto problem_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", s.problem, "Problem file (.json or .csv)")->required();
    return sub;
  };
  auto* check = problem_command("check", "Consistency verdict and explanations");
  check->add_flag("--explain-all", s.explain_all, "Enumerate every contradiction");
  auto* bounds = problem_command("bounds", "Ranges of the compatible weights");
  auto* relations = problem_command("relations", "Necessary and possible preference relations");
  relations->add_flag("--necessary", s.necessary, "Only the necessary relation");
  relations->add_flag("--possible", s.possible, "Only the possible relation");
  relations->add_option("--pair", s.pair, "Single pair i,k");
  relations->add_option("--dot", s.dot, "Write the Hasse diagram of the necessary relation (DOT)");
  auto* reduct = problem_command("reduct", "Comparisons responsible for a necessary relation");
  reduct->add_option("--pair", s.pair, "Pair i,k where i is necessarily at least as good as k")->required();
  auto* construct = problem_command("construct", "Comparisons to drop to make a relation possible");
  construct->add_option("--pair", s.pair, "Pair i,k")->required();
  auto* criteria = problem_command("criteria-reducts", "Minimal criteria subsets that still explain the ranking");
  auto* trace = problem_command("trace", "Full labeled SD system");
  auto* serve = app.add_subcommand("serve", "HTTP JSON service");
  serve->add_option("--port", s.port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", s.host, "Address to bind");
  serve->add_option("--snapshot", s.snapshot, "Session snapshot file, restored on start and written on exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*serve) {
    service::ServerOptions options;
    options.host = s.host;
    options.port = s.port;
    if (!s.snapshot.empty()) options.snapshot = s.snapshot;
    return service::run_server(options);
  }
  const std::pair<CLI::App*, io::AnalysisKind> commands[] = {
      {check, io::AnalysisKind::Check},         {bounds, io::AnalysisKind::Bounds},
      {relations, io::AnalysisKind::Relations}, {reduct, io::AnalysisKind::Reduct},
      {construct, io::AnalysisKind::Construct}, {criteria, io::AnalysisKind::CriteriaReducts},
      {trace, io::AnalysisKind::Trace}};
  for (const auto& [sub, kind] : commands)
    if (*sub) return analyze(kind, s, out, err);
  return kUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace segdesc::cli
