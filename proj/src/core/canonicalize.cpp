#include "segdesc/core/canonicalize.hpp"

#include <stdexcept>

namespace segdesc::core {

std::string_view relation_symbol(Relation r) {
  switch (r) {
  case Relation::LessEqual: return "<=";
  case Relation::GreaterEqual: return ">=";
  case Relation::Equal: return "=";
  case Relation::Less: return "<";
  case Relation::Greater: return ">";
  }
  return "?";
}

std::string_view origin_name(OriginKind k) {
  switch (k) {
  case OriginKind::Model: return "model";
  case OriginKind::Comparison: return "comparison";
  case OriginKind::Hypothesis: return "hypothesis";
  case OriginKind::Derived: return "derived";
  }
  return "?";
}

std::string LabeledInequality::label() const {
  return "{" + std::to_string(id) + "," + std::to_string(parent_lower) + "," +
         std::to_string(parent_upper) + "}";
}

LinearExpr canonical_body(const RawRelation& r, const Rational& epsilon) {
  switch (r.relation) {
  case Relation::LessEqual: return r.lhs - r.rhs;
  case Relation::GreaterEqual: return r.rhs - r.lhs;
  case Relation::Less: {
    LinearExpr body = r.lhs - r.rhs;
    body.add_constant(epsilon);
    return body;
  }
  case Relation::Greater: {
    LinearExpr body = r.rhs - r.lhs;
    body.add_constant(epsilon);
    return body;
  }
  case Relation::Equal: break;
  }
  throw std::invalid_argument("an equality has two canonical bodies");
}

std::vector<LabeledInequality> canonicalize(std::span<const RawRelation> relations,
                                            const Rational& epsilon, IneqId first_id) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  std::vector<LabeledInequality> out;
  out.reserve(relations.size() * 2);
  IneqId next = first_id;
  auto emit = [&](LinearExpr body, const OriginTag& origin) {
    LabeledInequality ineq;
    ineq.id = ineq.parent_lower = ineq.parent_upper = next++;
    ineq.body = std::move(body);
    ineq.origin = origin;
    out.push_back(std::move(ineq));
  };
  for (const auto& r : relations) {
    if (r.origin.kind == OriginKind::Derived)
      throw std::invalid_argument("raw relations cannot carry the DERIVED origin");
    if (r.relation == Relation::Equal) {
      emit(r.rhs - r.lhs, r.origin);
      emit(r.lhs - r.rhs, r.origin);
    } else {
      emit(canonical_body(r, epsilon), r.origin);
    }
  }
  return out;
}

} // namespace segdesc::core
