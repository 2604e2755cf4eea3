#include "segdesc/core/canonicalize.hpp"
#include "segdesc/core/ordering.hpp"
#include "segdesc/core/relation_parser.hpp"

#include <doctest.h>

using namespace segdesc;
using namespace segdesc::core;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("0.01") == Rational(1, 100));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("1.5e2") == Rational(150));
  CHECK(Rational::parse("  7 ") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational text forms") {
  CHECK(Rational(1, 100).to_string() == "0.01");
  CHECK(Rational(1, 3).to_string() == "1/3");
  CHECK(Rational(-5, 4).to_string() == "-1.25");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(1953, 3253).to_display() == "0.60");
  CHECK(Rational(-1, 200).to_display() == "-0.01");
  CHECK(Rational(2, 3).to_fraction_string() == "2/3");
  CHECK(Rational::parse(Rational(1300, 3253).to_string()) == Rational(1300, 3253));
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(a.reciprocal() == Rational(3));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS(Rational(0).reciprocal());
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("variables intern once") {
  VariableSet vars;
  const VarId x = vars.intern("x");
  CHECK(vars.intern("x") == x);
  const VarId y = vars.intern("y");
  CHECK(x != y);
  CHECK(vars.name(y) == "y");
  CHECK(vars.find("z") == std::nullopt);
  CHECK(vars.size() == 2);
}

TEST_CASE("linear expressions combine like terms") {
  VariableSet vars;
  const VarId x = vars.intern("x"), y = vars.intern("y");
  LinearExpr e = LinearExpr::variable(x, 2) + LinearExpr::variable(y, -1) + LinearExpr(Rational(3));
  e -= LinearExpr::variable(x, 2);
  CHECK_FALSE(e.contains(x));
  CHECK(e.coefficient(y) == Rational(-1));
  CHECK(e.constant() == Rational(3));
  const std::vector<Rational> point{Rational(10), Rational(4)};
  CHECK(e.evaluate(point) == Rational(-1));
  CHECK(e.remove(y) == Rational(-1));
  CHECK(e.is_constant());
  CHECK((LinearExpr::variable(x) * Rational(0)).is_constant());
}

TEST_CASE("relation parser reads linear relations") {
  VariableSet vars;
  const auto r = parse_relation("0.56w1 + w2 + 0.25*w3 >= 0.15 w1 + w2 + 0.88 w3", vars);
  CHECK(r.relation == Relation::GreaterEqual);
  const VarId w1 = *vars.find("w1"), w3 = *vars.find("w3");
  CHECK(r.lhs.coefficient(w1) == Rational(56, 100));
  CHECK(r.rhs.coefficient(w3) == Rational(88, 100));

  const auto s = parse_relation("2(x - 1)/4 < 3^2", vars);
  const VarId x = *vars.find("x");
  CHECK(s.relation == Relation::Less);
  CHECK(s.lhs.coefficient(x) == Rational(1, 2));
  CHECK(s.lhs.constant() == Rational(-1, 2));
  CHECK(s.rhs.constant() == Rational(9));

  CHECK(parse_relation("x = y", vars).relation == Relation::Equal);
  CHECK(parse_relation("x ≤ y", vars).relation == Relation::LessEqual);
  CHECK(parse_relation("x ≥ -y", vars).relation == Relation::GreaterEqual);
}

TEST_CASE("relation parser rejects malformed input") {
  VariableSet vars;
  CHECK_THROWS_AS(parse_relation("x * y <= 1", vars), NonLinearTermError);
  CHECK_THROWS_AS(parse_relation("1 / x <= 1", vars), NonLinearTermError);
  CHECK_THROWS_AS(parse_relation("x <= ", vars), RelationSyntaxError);
  CHECK_THROWS_AS(parse_relation("x + 1", vars), RelationSyntaxError);
  CHECK_THROWS_AS(parse_relation("x <= 1 <= 2", vars), RelationSyntaxError);
  CHECK_THROWS_AS(parse_relation("(x <= 1", vars), RelationSyntaxError);
  try {
    parse_relations("x >= 0\n# comment\ny >= $", vars);
    FAIL("expected a syntax error");
  } catch (const RelationSyntaxError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("canonical form is body <= 0 with consecutive ids") {
  VariableSet vars;
  auto relations = parse_relations("x >= 1\nx = y\nx < y\n", vars);
  const auto ineqs = canonicalize(relations, Rational(1, 100));
  REQUIRE(ineqs.size() == 4);
  const VarId x = *vars.find("x"), y = *vars.find("y");
  CHECK(ineqs[0].body == LinearExpr(Rational(1)) - LinearExpr::variable(x));
  CHECK(ineqs[1].body == LinearExpr::variable(y) - LinearExpr::variable(x));
  CHECK(ineqs[2].body == LinearExpr::variable(x) - LinearExpr::variable(y));
  CHECK(ineqs[3].body == LinearExpr::variable(x) - LinearExpr::variable(y) + LinearExpr(Rational(1, 100)));
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    CHECK(ineqs[i].id == i + 1);
    CHECK(ineqs[i].is_original());
    CHECK(ineqs[i].label() == "{" + std::to_string(i + 1) + "," + std::to_string(i + 1) + "," + std::to_string(i + 1) + "}");
  }
  CHECK(canonicalize(relations, Rational(1, 100), 7).front().id == 7);
}

TEST_CASE("orderings") {
  VariableSet vars;
  auto relations = parse_relations("b >= 0\na + b <= 1\nb - c <= 0\nb <= 2\n", vars);
  const auto ineqs = canonicalize(relations, Rational(1, 100));
  const VarId b = *vars.find("b"), a = *vars.find("a"), c = *vars.find("c");

  const auto declared = order_variables(ineqs, DeclarationOrder{});
  CHECK(declared.variables() == std::vector<VarId>{b, a, c});
  CHECK(declared.position(c) == 3);
  CHECK(declared.at(1) == b);

  const auto frequent = order_variables(ineqs, FrequencyOrder{});
  CHECK(frequent.position(b) == 1);

  const auto explicit_order = order_variables(ineqs, ExplicitOrder{{c, a, b}});
  CHECK(explicit_order.position(c) == 1);
  CHECK_THROWS_AS(order_variables(ineqs, ExplicitOrder{{c, a}}), OrderingError);
  CHECK_THROWS_AS(order_variables(ineqs, ExplicitOrder{{c, a, b, b}}), OrderingError);

  VarId unused = vars.intern("unused");
  CHECK_FALSE(declared.contains(unused));
  CHECK_THROWS_AS(declared.position(unused), std::out_of_range);
  CHECK_THROWS(Ordering({a, a}));
}
