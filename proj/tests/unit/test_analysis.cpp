#include "fixtures.hpp"

#include "segdesc/analysis/explanations.hpp"
#include "segdesc/analysis/hitting_sets.hpp"
#include "segdesc/analysis/oracle.hpp"
#include "segdesc/analysis/relations.hpp"
#include "segdesc/core/canonicalize.hpp"
#include "segdesc/core/ordering.hpp"
#include "segdesc/core/relation_parser.hpp"
#include "segdesc/core/segment.hpp"

#include <doctest.h>

#include <algorithm>

using namespace segdesc;
using namespace segdesc::analysis;

namespace {

std::vector<core::LabeledInequality> system_of(const std::string& text, core::VariableSet& vars) {
  return core::canonicalize(core::parse_relations(text, vars), Rational(1, 100));
}

BoolMatrix closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (auto [a, b] : pairs) m[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][k] && m[k][j]) m[i][j] = true;
  return m;
}

std::vector<std::string> names(const Problem& problem, const IndexSet& set) {
  std::vector<std::string> out;
  for (std::size_t i : set) out.push_back(problem.comparisons.pairs()[i].id());
  return out;
}

} // namespace

TEST_CASE("oracle on small systems") {
  core::VariableSet vars;
  const auto box = system_of("x >= 0\nx <= 1\n", vars);
  CHECK(oracle_feasible(box, vars.size()));
  const auto vertices = oracle_vertices(box, vars.size());
  REQUIRE(vertices.size() == 2);
  CHECK(std::count(vertices.begin(), vertices.end(), std::vector<Rational>{Rational(1)}) == 1);

  core::VariableSet v2;
  const auto crossed = system_of("x >= 1\nx <= 0\n", v2);
  CHECK_FALSE(oracle_feasible(crossed, v2.size()));
  core::VariableSet v3;
  const auto cycle = system_of("x > y\ny > x\n", v3);
  CHECK_FALSE(oracle_feasible(cycle, v3.size()));
  core::VariableSet v4;
  const auto halfplane = system_of("y >= x\n", v4);
  CHECK(oracle_feasible(halfplane, v4.size()));
  CHECK(oracle_vertices(halfplane, v4.size()).empty());
  core::VariableSet v5;
  const auto constant = system_of("0 >= 1\n", v5);
  CHECK_FALSE(oracle_feasible(constant, 0));
  CHECK(oracle_feasible(std::span<const core::LabeledInequality>{}, 0));

  core::VariableSet many;
  const auto wide = system_of("a + b + c + d + e + f + g >= 0\n", many);
  CHECK_THROWS_AS(oracle_feasible(wide, many.size()), OracleLimitError);
}

TEST_CASE("inclusion-minimal sets and hitting sets") {
  CHECK(inclusion_minimal({{1, 2}, {2}, {3}, {2, 3}, {2}}) == std::vector<IndexSet>{{2}, {3}});
  CHECK(minimal_hitting_sets({{1, 2}, {2, 3}}) == std::vector<IndexSet>{{2}, {1, 3}});
  CHECK(minimal_hitting_sets({{0}, {0, 1}}) == std::vector<IndexSet>{{0}});
  CHECK(minimal_hitting_sets({{0}, {}}).empty());
  CHECK(minimal_hitting_sets({}) == std::vector<IndexSet>{{}});
}

TEST_CASE("hasse edges are the transitive reduction of the strict part") {
  const auto chain = closure(3, {{0, 1}, {1, 2}});
  CHECK(chain[0][2]);
  CHECK(hasse_edges(chain) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(is_reflexive(chain));
  CHECK(is_transitive(chain));
  const auto tie = closure(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(hasse_edges(tie) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(hasse_edges(closure(3, {})).empty());
  BoolMatrix broken = closure(3, {{0, 1}});
  broken[1][2] = true;
  CHECK_FALSE(is_transitive(broken));
  broken[2][2] = false;
  CHECK_FALSE(is_reflexive(broken));
}

TEST_CASE("pair evaluation runs every cell and rethrows failures") {
  const auto m = evaluate_pairs(7, 3, [](std::size_t i, std::size_t k) { return (i + k) % 2 == 0; });
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t k = 0; k < 7; ++k) CHECK(m[i][k] == ((i + k) % 2 == 0));
  CHECK_THROWS_AS(evaluate_pairs(4, 2,
                                 [](std::size_t i, std::size_t) -> bool {
                                   if (i == 3) throw std::runtime_error("boom");
                                   return true;
                                 }),
                  std::runtime_error);
}

TEST_CASE("explanations map roots to comparisons") {
  core::VariableSet vars;
  auto relations = core::parse_relations("x >= 0\ny >= 0\nx + y <= -1\n", vars);
  relations[1].origin = {core::OriginKind::Comparison, "p>q"};
  const auto ineqs = core::canonicalize(relations, Rational(1, 100));
  const auto sys = core::segment(ineqs, vars, core::order_variables(ineqs, core::DeclarationOrder{}), Rational(1, 100));
  const auto comparisons = uta::ReferenceComparisons::from_chain("r > p > q");
  const auto e = explain(sys, comparisons);
  REQUIRE(e.records.size() == 1);
  CHECK(e.records[0].roots == std::vector<core::IneqId>{1, 2, 3});
  CHECK(e.records[0].comparison_constraints == std::vector<core::IneqId>{2});
  CHECK(e.records[0].comparisons == IndexSet{1});
  CHECK(e.minimal_subsets == std::vector<IndexSet>{{1}});
  CHECK_FALSE(e.truncated);
}

TEST_CASE("first iteration is inconsistent") {
  const Analyzer a(testing::first_iteration());
  const auto stop = a.check_consistency(core::SegmentMode::StopAtFirst);
  CHECK_FALSE(stop.feasible);
  CHECK(stop.explanations.records.size() == 1);

  const auto all = a.check_consistency(core::SegmentMode::EnumerateAll);
  CHECK_FALSE(all.feasible);
  CHECK(all.explanations.records.size() == 77);
  CHECK_FALSE(all.explanations.truncated);
  const auto& first = all.explanations.records.front();
  CHECK(first.record == core::ContradictionRecord{1, 32});
  CHECK(first.roots == std::vector<core::IneqId>{1, 2, 6, 9});
  const auto& minimal = all.explanations.minimal_subsets;
  const bool culprit = std::any_of(minimal.begin(), minimal.end(), [&](const IndexSet& s) {
    return names(a.problem(), s) == std::vector<std::string>{"a6~a9", "a8>a14"};
  });
  CHECK(culprit);
  CHECK_FALSE(oracle_feasible(a.canonical(), a.model().variables().size()));

  CHECK_THROWS_AS(a.weight_ranges(), PreconditionError);
  CHECK_THROWS_AS(a.robust_relation(RelationKind::Possible, 0, 1), PreconditionError);
}

TEST_CASE("second-iteration system matches the printed final system") {
  const Analyzer a(testing::second_iteration());
  const auto& sys = a.base();
  REQUIRE(sys.feasible());
  CHECK(sys.registry().size() == testing::printed_final_system().size());
  const auto& vars = sys.variables();
  for (const auto& row : testing::printed_final_system()) {
    CAPTURE(row.label);
    const auto it = std::find_if(sys.registry().begin(), sys.registry().end(),
                                 [&](const core::LabeledInequality& i) { return i.label() == row.label; });
    REQUIRE(it != sys.registry().end());
    const auto* bound = sys.bound_of(it->id);
    REQUIRE(bound != nullptr);
    CHECK(vars.name(bound->variable) == row.variable);
    CHECK((bound->kind == core::BoundKind::Lower) == row.lower);
    for (const auto& [v, c] : bound->expr.terms()) {
      const auto found = row.coefficients.find(vars.name(v));
      CHECK(testing::near(c.to_double(), found == row.coefficients.end() ? 0.0 : found->second));
    }
    for (const auto& [name, c] : row.coefficients)
      CHECK(testing::near(bound->expr.coefficient(*vars.find(name)).to_double(), c));
    CHECK(testing::near(bound->expr.constant().to_double(), row.constant));
  }
}

TEST_CASE("weight ranges are exact and attained") {
  const Analyzer a(testing::second_iteration());
  const auto ranges = a.weight_ranges();
  REQUIRE(ranges.size() == 3);
  const std::pair<Rational, Rational> expected[] = {
      {Rational(249984, 576725), Rational(1953, 3253)},
      {Rational(0), Rational(160341, 576725)},
      {Rational(6656, 23069), Rational(1300, 3253)},
  };
  const double printed[3][2] = {{0.43, 0.60}, {0, 0.28}, {0.29, 0.40}};
  const auto vertices = oracle_vertices(a.canonical(), a.model().variables().size());
  REQUIRE_FALSE(vertices.empty());
  for (std::size_t j = 0; j < 3; ++j) {
    CAPTURE(j);
    REQUIRE(ranges[j].lower);
    REQUIRE(ranges[j].upper);
    CHECK(*ranges[j].lower == expected[j].first);
    CHECK(*ranges[j].upper == expected[j].second);
    CHECK(testing::near(ranges[j].lower->to_double(), printed[j][0]));
    CHECK(testing::near(ranges[j].upper->to_double(), printed[j][1]));
    const auto v = ranges[j].variable.value;
    Rational lo = vertices[0][v], hi = vertices[0][v];
    for (const auto& p : vertices) {
      lo = std::min(lo, p[v]);
      hi = std::max(hi, p[v]);
    }
    CHECK(lo == *ranges[j].lower);
    CHECK(hi == *ranges[j].upper);
  }
}

TEST_CASE("robust relations of the second iteration") {
  const Analyzer a(testing::second_iteration());
  const auto m = a.relation_matrices();
  const auto& grid = testing::possible_grid();
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t k = 0; k < 15; ++k) {
      CAPTURE(i);
      CAPTURE(k);
      CHECK(m.possible[i][k] == (grid[i][k] == 'T'));
      if (m.necessary[i][k]) CHECK(m.possible[i][k]);
    }
  CHECK(m.necessary[13][0]);
  CHECK_FALSE(m.necessary[0][13]);
  for (std::size_t k = 0; k < 15; ++k) CHECK(m.necessary[13][k]);
  CHECK(is_reflexive(m.necessary));
  CHECK(is_transitive(m.necessary));
  CHECK(m.hasse_edges == hasse_edges(m.necessary));
  CHECK(a.robust_relation(RelationKind::Necessary, 13, 0));
  CHECK(a.hypothesis(RelationKind::Necessary, 13, 0).origin.reference == "a1>a14");
  CHECK(a.hypothesis(RelationKind::Possible, 0, 1).origin.reference == "a1>=a2");
}

TEST_CASE("preference reduct for a14 over a1") {
  const Analyzer a(testing::second_iteration());
  const auto r = a.preference_reduct(13, 0);
  REQUIRE(r.reducts.size() == 1);
  CHECK(names(a.problem(), r.reducts[0]) == std::vector<std::string>{"a6~a9"});
  CHECK(r.verified);
  const auto& subsets = r.explanations.constraint_subsets;
  for (const std::vector<core::IneqId>& s :
       {std::vector<core::IneqId>{6}, {6, 7}, {6, 8}, {6, 9}, {6, 8, 9}})
    CHECK(std::find(subsets.begin(), subsets.end(), s) != subsets.end());
  CHECK_THROWS_WITH_AS(a.preference_reduct(0, 13), doctest::Contains("relation not necessary"), PreconditionError);
}

TEST_CASE("preference construct for a1 over a2") {
  const Analyzer a(testing::second_iteration());
  const auto c = a.preference_construct(0, 1);
  CHECK_FALSE(c.unsalvageable);
  CHECK(c.hitting_sets == std::vector<IndexSet>{{0}});
  REQUIRE(c.constructs.size() == 1);
  CHECK(names(a.problem(), c.constructs[0]) == std::vector<std::string>{"a9>a8", "a8>a7"});
  CHECK(c.verified);
  CHECK_THROWS_WITH_AS(a.preference_construct(1, 0), doctest::Contains("relation already possible"), PreconditionError);
}

TEST_CASE("criteria reducts") {
  const Analyzer a(testing::second_iteration());
  const auto r = a.criteria_reducts();
  CHECK(r.reducts == std::vector<std::vector<std::size_t>>{{0, 2}});
  std::map<std::vector<std::size_t>, bool> seen;
  for (const auto& e : r.evaluated) seen[e.criteria] = e.consistent;
  CHECK(seen.at({0}) == false);
  CHECK(seen.at({1}) == false);
  CHECK(seen.at({2}) == false);
  CHECK(seen.at({0, 1}) == false);
  CHECK(seen.at({1, 2}) == false);
  CHECK(seen.at({0, 2}) == true);
  CHECK(a.criteria_subset_consistent({0, 1, 2}));
}

TEST_CASE("ordering choices do not change verdicts") {
  AnalysisOptions options;
  options.ordering.kind = OrderingSpec::Kind::Explicit;
  options.ordering.variables = {"w3", "w1", "w2"};
  const Analyzer a(testing::second_iteration(), options);
  CHECK(a.base().feasible());
  CHECK(a.ordering().position(*a.model().variables().find("w3")) == 1);
  const auto ranges = a.weight_ranges();
  CHECK(*ranges[0].upper == Rational(1953, 3253));
  options.ordering.kind = OrderingSpec::Kind::Frequency;
  CHECK_FALSE(Analyzer(testing::first_iteration(), options).check_consistency(core::SegmentMode::StopAtFirst).feasible);
  options.ordering.kind = OrderingSpec::Kind::Explicit;
  options.ordering.variables = {"w1", "w2"};
  CHECK_THROWS(Analyzer(testing::second_iteration(), options).base());
}

TEST_CASE("redundancy policies agree on verdicts") {
  for (auto policy : {core::RedundancyPolicy::KeepAll, core::RedundancyPolicy::DropDuplicates,
                      core::RedundancyPolicy::BoundsMethod}) {
    AnalysisOptions options;
    options.policy = policy;
    CHECK(Analyzer(testing::second_iteration(), options).base().feasible());
    CHECK_FALSE(Analyzer(testing::first_iteration(), options).base().feasible());
  }
}
