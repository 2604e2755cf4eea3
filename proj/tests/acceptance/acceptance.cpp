// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include "fixtures.hpp"
#include "random_systems.hpp"

#include "segdesc/analysis/oracle.hpp"
#include "segdesc/cli/cli.hpp"
#include "segdesc/core/canonicalize.hpp"
#include "segdesc/core/segment.hpp"
#include "segdesc/service/service.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace segdesc;
using namespace segdesc::analysis;
using io::Json;
using testing::near;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::pair<int, std::string> cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

std::vector<std::string> comparison_names(const Problem& p, const IndexSet& set) {
  std::vector<std::string> out;
  for (std::size_t i : set) out.push_back(p.comparisons.pairs()[i].id());
  return out;
}

Verdict check_constraint_generation() {
  Verdict v;
  const auto problem = testing::first_iteration();
  const uta::UtaModel model(problem.table, problem.config);
  const auto ineqs = core::canonicalize(model.build_system(problem.comparisons), problem.config.epsilon);
  const auto& printed = testing::printed_constraints();
  v.require(ineqs.size() == printed.size(), "expected ten constraints, got " + std::to_string(ineqs.size()));
  const auto& vars = model.variables();
  for (std::size_t i = 0; i < std::min(ineqs.size(), printed.size()); ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto w = vars.find("w" + std::to_string(j + 1));
      const double got = w ? ineqs[i].body.coefficient(*w).to_double() : 0.0;
      v.require(near(got, printed[i].rhs.w[j] - printed[i].lhs.w[j]),
                "C" + std::to_string(i + 1) + " w" + std::to_string(j + 1));
    }
    v.require(near(ineqs[i].body.constant().to_double(), printed[i].rhs.constant - printed[i].lhs.constant),
              "C" + std::to_string(i + 1) + " constant");
  }
  const char* sides[5][2] = {{"a6", "a9"}, {"a9", "a6"}, {"a9", "a8"}, {"a8", "a14"}, {"a14", "a7"}};
  for (std::size_t r = 0; r < 5; ++r) {
    const auto lhs = model.value_expr(problem.table.alternative_index(sides[r][0]));
    const auto rhs = model.value_expr(problem.table.alternative_index(sides[r][1]));
    for (int j = 0; j < 3; ++j) {
      const auto w = *vars.find("w" + std::to_string(j + 1));
      v.require(near(lhs.coefficient(w).to_double(), printed[5 + r].lhs.w[j]) &&
                    near(rhs.coefficient(w).to_double(), printed[5 + r].rhs.w[j]),
                "C" + std::to_string(6 + r) + " side coefficient w" + std::to_string(j + 1));
    }
  }
  if (v.pass) v.detail = "ten constraints, every coefficient within 0.01";
  return v;
}

Verdict check_first_iteration() {
  Verdict v;
  const auto [status, out] = cli_json({"check", testing::data_file("sales-manager-iter1.json").string(), "--explain-all"});
  v.require(status == 0, "check exited " + std::to_string(status));
  if (!v.pass) return v;
  const auto body = Json::parse(out);
  v.require(body["feasible"] == false, "reported feasible");
  bool subset = false;
  for (const auto& s : body["minimal_comparison_subsets"]) subset |= s == Json::array({"a6~a9", "a8>a14"});
  v.require(subset, "minimal subset {a6~a9, a8>a14} missing");
  bool roots = false;
  for (const auto& r : body["contradictions"]) roots |= r["roots"] == Json::array({1, 2, 6, 9});
  v.require(roots, "root set {1,2,6,9} missing");
  if (v.pass)
    v.detail = "infeasible, " + std::to_string(body["contradictions"].size()) +
               " contradictions, minimal subset {a6~a9, a8>a14}, roots {1,2,6,9}";
  return v;
}

Verdict check_second_iteration_system() {
  Verdict v;
  const Analyzer a(testing::second_iteration());
  const auto& sys = a.base();
  v.require(sys.feasible(), "system is contradictory");
  if (!v.pass) return v;
  const auto w1 = *sys.variables().find("w1");
  const auto range = core::project_bounds(sys, w1);
  v.require(range.lower && near(range.lower->to_double(), 0.43), "w1 lower bound");
  v.require(range.upper && near(range.upper->to_double(), 0.60), "w1 upper bound");
  for (const auto& [label, lower, value] :
       std::vector<std::tuple<std::string, bool, double>>{{"{16,11,9}", true, 0.43}, {"{15,2,12}", false, 0.60}}) {
    const auto& reg = sys.registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& i) { return i.label() == label; });
    v.require(it != reg.end(), "label " + label + " missing");
    if (it == reg.end()) continue;
    const auto* bound = sys.bound_of(it->id);
    v.require(bound && bound->variable == w1 && (bound->kind == core::BoundKind::Lower) == lower &&
                  bound->expr.is_constant() && near(bound->expr.constant().to_double(), value),
              "body of " + label);
  }
  if (v.pass) v.detail = "feasible, w1 in [" + range.lower->to_display() + ", " + range.upper->to_display() +
                         "], {16,11,9} and {15,2,12} present";
  return v;
}

Verdict check_weight_ranges() {
  Verdict v;
  const Analyzer a(testing::second_iteration());
  const auto ranges = a.weight_ranges();
  const double printed[3][2] = {{0.43, 0.60}, {0, 0.28}, {0.29, 0.40}};
  const auto vertices = oracle_vertices(a.canonical(), a.model().variables().size());
  v.require(ranges.size() == 3 && !vertices.empty(), "ranges or vertices missing");
  if (!v.pass) return v;
  std::string shown;
  for (std::size_t j = 0; j < 3; ++j) {
    const auto& r = ranges[j];
    const std::string w = "w" + std::to_string(j + 1);
    v.require(r.lower && near(r.lower->to_double(), printed[j][0]), w + " lower");
    v.require(r.upper && near(r.upper->to_double(), printed[j][1]), w + " upper");
    if (!r.lower || !r.upper) continue;
    bool lo = false, hi = false;
    for (const auto& p : vertices) {
      lo |= p[r.variable.value] == *r.lower;
      hi |= p[r.variable.value] == *r.upper;
    }
    v.require(lo && hi, w + " endpoint not attained by an oracle vertex");
    shown += (shown.empty() ? "" : ", ") + w + " in [" + r.lower->to_display() + ", " + r.upper->to_display() + "]";
  }
  if (v.pass) v.detail = shown + ", endpoints attained by oracle vertices";
  return v;
}

Verdict check_necessary_relation(const RelationMatrices& m, const std::vector<std::string>& names) {
  Verdict v;
  v.require(m.necessary[13][0], "necessary(a14,a1) is F");
  v.require(!m.necessary[0][13], "necessary(a1,a14) is T");
  for (std::size_t k = 0; k < 15; ++k) v.require(m.necessary[13][k], "necessary(a14," + names[k] + ") is F");
  for (std::size_t k = 0; k < 15; ++k) v.require(m.necessary[k][11], "necessary(" + names[k] + ",a12) is F");
  v.require(is_reflexive(m.necessary), "not reflexive");
  v.require(is_transitive(m.necessary), "not transitive");
  if (v.pass) v.detail = "spot checks, a14 top, a12 bottom, reflexive and transitive";
  return v;
}

Verdict check_possible_relation(const RelationMatrices& m) {
  Verdict v;
  int mismatches = 0;
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t k = 0; k < 15; ++k)
      if (m.possible[i][k] != (testing::possible_grid()[i][k] == 'T')) ++mismatches;
  v.require(mismatches == 0, std::to_string(mismatches) + " cells differ");
  if (v.pass) v.detail = "all 225 cells match";
  return v;
}

Verdict check_reduct(const Analyzer& a) {
  Verdict v;
  const auto r = a.preference_reduct(13, 0);
  v.require(r.reducts.size() == 1 && comparison_names(a.problem(), r.reducts[0]) == std::vector<std::string>{"a6~a9"},
            "reducts differ from {{a6~a9}}");
  const auto& subsets = r.explanations.constraint_subsets;
  for (const std::vector<core::IneqId>& s : {std::vector<core::IneqId>{6}, {6, 7}, {6, 8}, {6, 9}, {6, 8, 9}}) {
    std::string text;
    for (auto id : s) text += (text.empty() ? "" : ",") + std::to_string(id);
    v.require(std::find(subsets.begin(), subsets.end(), s) != subsets.end(), "subset {" + text + "} not observed");
  }
  if (v.pass) v.detail = "{{a6~a9}}, intermediate subsets observed (" + std::to_string(subsets.size()) + " distinct)";
  return v;
}

Verdict check_construct(const Analyzer& a) {
  Verdict v;
  const auto c = a.preference_construct(0, 1);
  v.require(c.hitting_sets == std::vector<IndexSet>{{0}}, "hitting sets differ from {{a6~a9}}");
  v.require(c.constructs.size() == 1 &&
                comparison_names(a.problem(), c.constructs[0]) == std::vector<std::string>{"a9>a8", "a8>a7"},
            "construct differs from all-but-a6~a9");
  v.require(c.verified, "construct does not make the relation possible");
  if (v.pass) v.detail = "drop {a6~a9}, keep {a9>a8, a8>a7}";
  return v;
}

Verdict check_criteria(const Analyzer& a) {
  Verdict v;
  const auto r = a.criteria_reducts();
  v.require(r.reducts == std::vector<std::vector<std::size_t>>{{0, 2}}, "reducts differ from {{g1,g3}}");
  std::map<std::vector<std::size_t>, bool> seen;
  for (const auto& e : r.evaluated) seen[e.criteria] = e.consistent;
  for (const std::vector<std::size_t>& s : {std::vector<std::size_t>{0}, {1}, {2}, {1, 2}, {0, 1}})
    v.require(seen.count(s) && !seen[s], "a subset expected inconsistent was not");
  if (v.pass) v.detail = "{{g1,g3}}; g1, g2, g3, g2g3, g1g2 inconsistent";
  return v;
}

Verdict check_properties() {
  Verdict v;
  constexpr int kSystems = 500;
  std::mt19937 rng(424242);
  int segment_bad = 0, extend_bad = 0, bounds_bad = 0, roots_bad = 0, minimal_bad = 0, backtracked = 0;
  for (int t = 0; t < kSystems; ++t) {
    const auto s = testing::random_system(rng);
    const bool expected = oracle_feasible(s.ineqs, s.vars.size());
    core::SegmentOptions keep;
    keep.policy = core::RedundancyPolicy::KeepAll;
    core::SegmentOptions bounds;
    const auto k = core::segment(s.ineqs, s.vars, s.ordering, testing::kEps, keep);
    const auto b = core::segment(s.ineqs, s.vars, s.ordering, testing::kEps, bounds);
    segment_bad += k.feasible() != expected;
    bounds_bad += b.feasible() != k.feasible();

    if (s.ineqs.size() >= 2) {
      const std::size_t split = std::uniform_int_distribution<std::size_t>(1, s.ineqs.size() - 1)(rng);
      const std::span<const core::LabeledInequality> all(s.ineqs);
      const auto base = core::segment(all.first(split), s.vars, s.ordering, testing::kEps, bounds);
      if (base.feasible()) extend_bad += core::extend_canonical(base, all.subspan(split)).feasible() != b.feasible();
    }

    if (expected) continue;
    auto enumerate = keep;
    enumerate.mode = core::SegmentMode::EnumerateAll;
    enumerate.max_contradictions = 1'000'000;
    enumerate.max_inequalities = 20'000;
    try {
      const auto sys = core::segment(s.ineqs, s.vars, s.ordering, testing::kEps, enumerate);
      ++backtracked;
      std::set<std::set<core::IneqId>> roots;
      for (const auto& rec : sys.contradictions()) roots.insert(core::backtrack(sys, rec));
      auto subset = [&](const std::set<core::IneqId>& ids) {
        std::vector<core::LabeledInequality> out;
        for (auto id : ids) out.push_back(sys.inequality(id));
        return out;
      };
      for (const auto& r : roots) {
        roots_bad += oracle_feasible(subset(r), s.vars.size());
        const bool minimal = std::none_of(roots.begin(), roots.end(), [&](const auto& o) {
          return o != r && std::includes(r.begin(), r.end(), o.begin(), o.end());
        });
        if (!minimal) continue;
        for (auto drop : r) {
          auto smaller = r;
          smaller.erase(drop);
          minimal_bad += !oracle_feasible(subset(smaller), s.vars.size());
        }
      }
    } catch (const core::SegmentLimitError&) {
    }
  }
  v.require(segment_bad == 0, std::to_string(segment_bad) + " segment/oracle disagreements");
  v.require(bounds_bad == 0, std::to_string(bounds_bad) + " verdicts flipped by the bounds method");
  v.require(extend_bad == 0, std::to_string(extend_bad) + " extend/scratch disagreements");
  v.require(roots_bad == 0, std::to_string(roots_bad) + " feasible root sets");
  v.require(minimal_bad == 0, std::to_string(minimal_bad) + " reducible minimal root sets");
  if (v.pass)
    v.detail = std::to_string(kSystems) + " systems, " + std::to_string(backtracked) + " infeasible ones backtracked";
  return v;
}

Verdict check_parity() {
  Verdict v;
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"check", "--explain-all"}, R"({"kind": "check", "explain_all": true})"},
      {{"bounds"}, R"({"kind": "bounds"})"},
      {{"relations"}, R"({"kind": "relations"})"},
      {{"reduct", "--pair", "a14,a1"}, R"({"kind": "reduct", "pair": ["a14", "a1"]})"},
      {{"construct", "--pair", "a1,a2"}, R"({"kind": "construct", "pair": ["a1", "a2"]})"},
      {{"criteria-reducts"}, R"({"kind": "criteria-reducts"})"},
      {{"trace"}, R"({"kind": "trace"})"},
  };
  int compared = 0;
  service::Service svc;
  const auto file = testing::data_file("sales-manager-iter2.json");
  const auto created = svc.handle("POST", "/sessions", slurp(file));
  v.require(created.status == 201, "session not created");
  if (!v.pass) return v;
  const auto id = Json::parse(created.body)["id"].get<std::string>();
  for (const auto& [args, request] : cases) {
    auto argv = args;
    argv.insert(argv.begin() + 1, file.string());
    const auto [status, out] = cli_json(argv);
    const auto remote = svc.handle("POST", "/sessions/" + id + "/analyses", request);
    v.require(status == 0 && remote.status == 200 && remote.body == out, args.front() + " reports differ");
    ++compared;
  }
  if (v.pass) v.detail = std::to_string(compared) + " analyses byte-identical";
  return v;
}

} // namespace

int main() {
  int failures = 0;
  auto report = [&](const std::string& name, const std::function<Verdict()>& check) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  };

  const Analyzer second(testing::second_iteration());
  const auto matrices = second.relation_matrices();
  const auto& names = second.problem().table.alternatives();

  report("constraint generation", check_constraint_generation);
  report("first-iteration inconsistency", check_first_iteration);
  report("second-iteration SD system", check_second_iteration_system);
  report("weight ranges", check_weight_ranges);
  report("necessary relation", [&] { return check_necessary_relation(matrices, names); });
  report("possible relation matrix", [&] { return check_possible_relation(matrices); });
  report("preference reduct", [&] { return check_reduct(second); });
  report("preference construct", [&] { return check_construct(second); });
  report("criteria reducts", [&] { return check_criteria(second); });
  report("property suite", check_properties);
  report("CLI/service parity", check_parity);
  return failures == 0 ? 0 : 1;
}
