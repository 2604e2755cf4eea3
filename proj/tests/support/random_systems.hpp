#pragma once

#include "segdesc/core/canonicalize.hpp"
#include "segdesc/core/ordering.hpp"

#include <algorithm>
#include <random>

namespace segdesc::testing {

inline const Rational kEps(1, 10);

/// Up to 4 variables and 12 inequalities with small integer data, a mix of
/// weak and strict relations, and a random elimination order.
struct RandomSystem {
  core::VariableSet vars;
  std::vector<core::LabeledInequality> ineqs;
  core::Ordering ordering;
};

inline RandomSystem random_system(std::mt19937& rng) {
  std::uniform_int_distribution<int> var_count(1, 4), ineq_count(1, 12), coef(-3, 3), constant(-4, 4), pick(0, 9);
  RandomSystem s;
  const int n = var_count(rng);
  std::vector<core::VarId> ids;
  for (int v = 0; v < n; ++v) ids.push_back(s.vars.intern("x" + std::to_string(v + 1)));
  const int m = ineq_count(rng);
  std::vector<core::RawRelation> relations;
  for (int i = 0; i < m; ++i) {
    core::RawRelation r;
    for (core::VarId v : ids)
      if (pick(rng) < 6) r.lhs.add_term(v, Rational(coef(rng)));
    r.rhs = core::LinearExpr(Rational(constant(rng)));
    const int kind = pick(rng);
    r.relation = kind < 4 ? core::Relation::LessEqual : kind < 8 ? core::Relation::GreaterEqual : core::Relation::Less;
    relations.push_back(std::move(r));
  }
  s.ineqs = core::canonicalize(relations, kEps);
  std::vector<core::VarId> order = ids;
  std::shuffle(order.begin(), order.end(), rng);
  s.ordering = core::Ordering(order);
  return s;
}

} // namespace segdesc::testing
