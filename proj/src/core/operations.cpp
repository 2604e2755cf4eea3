#include "segdesc/core/operations.hpp"

#include <stdexcept>

namespace segdesc::core {

IsoResult iso(const LinearExpr& body, const Ordering& ordering, IneqId source) {
  if (body.is_constant()) {
    if (body.constant().sign() > 0) return ImmediateContradiction{};
    return Tautology{};
  }
  VarId top = body.terms().begin()->first;
  std::size_t top_position = 0;
  for (const auto& [v, c] : body.terms()) {
    const std::size_t p = ordering.position(v);
    if (p > top_position) {
      top_position = p;
      top = v;
    }
  }
  LinearExpr expr = body;
  const Rational c = expr.remove(top);
  expr /= -c;
  return Bound{top, c.sign() > 0 ? BoundKind::Upper : BoundKind::Lower, std::move(expr), source};
}

LabeledInequality cro(const Bound& lower, const Bound& upper) {
  if (lower.kind != BoundKind::Lower || upper.kind != BoundKind::Upper)
    throw std::invalid_argument("cro needs a lower and an upper bound");
  if (lower.variable != upper.variable) throw std::invalid_argument("cro needs bounds of the same variable");
  LabeledInequality out;
  out.parent_lower = lower.source;
  out.parent_upper = upper.source;
  out.body = lower.expr - upper.expr;
  out.origin = {OriginKind::Derived, {}};
  return out;
}

bool detect_contradiction(const LinearExpr& body) {
  return body.is_constant() && body.constant().sign() > 0;
}

std::vector<Interval> constant_box(const SdSystem& system) {
  std::vector<Interval> box(system.variables().size());
  for (VarId v : system.ordering().variables())
    box[v.value] = {system.constant_lower(v), system.constant_upper(v)};
  return box;
}

namespace {

// Minimum of `expr` over the box, if every variable is boxed on both sides.
std::optional<Rational> box_minimum(const LinearExpr& expr, std::span<const Interval> box) {
  Rational total = expr.constant();
  for (const auto& [v, c] : expr.terms()) {
    if (v.value >= box.size()) return std::nullopt;
    const Interval& range = box[v.value];
    if (!range.lower || !range.upper) return std::nullopt;
    total += c * (c.sign() > 0 ? *range.lower : *range.upper);
  }
  return total;
}

} // namespace

bool dominates(const Bound& a, const Bound& b, std::span<const Interval> box) {
  if (a.variable != b.variable || a.kind != b.kind) return false;
  const LinearExpr slack = a.kind == BoundKind::Upper ? b.expr - a.expr : a.expr - b.expr;
  const auto minimum = box_minimum(slack, box);
  return minimum && minimum->sign() >= 0;
}

bool is_redundant_bounds_method(const SdSystem& system, const Bound& candidate) {
  const auto box = constant_box(system);
  for (const auto& existing : system.bounds(candidate.variable, candidate.kind))
    if (existing.expr == candidate.expr || dominates(existing, candidate, box)) return true;
  return false;
}

AdjoinResult adjoin(SdSystem& system, LabeledInequality candidate, RedundancyPolicy policy) {
  if (detect_contradiction(candidate)) throw std::invalid_argument("adjoin received a contradiction");
  auto shape = iso(candidate.body, system.ordering());
  auto* bound = std::get_if<Bound>(&shape);
  if (!bound) return {};
  if (policy == RedundancyPolicy::DropDuplicates) {
    for (const auto& existing : system.bounds(bound->variable, bound->kind))
      if (existing.expr == bound->expr) return {};
  } else if (policy == RedundancyPolicy::BoundsMethod && is_redundant_bounds_method(system, *bound)) {
    return {};
  }
  if (system.registry().size() >= system.options().max_inequalities)
    throw SegmentLimitError("inequality limit reached");
  candidate.id = system.next_id();
  bound->source = candidate.id;
  system.register_inequality(std::move(candidate));
  system.store(std::move(*bound));
  return {true, system.registry().back().id};
}

} // namespace segdesc::core
