#include "segdesc/core/sd_system.hpp"

#include <algorithm>

namespace segdesc::core {

SdSystem::SdSystem(VariableSet vars, Ordering ordering, Rational epsilon, SegmentOptions options)
    : vars_(std::move(vars)), ordering_(std::move(ordering)), epsilon_(std::move(epsilon)),
      options_(options), stores_(vars_.size()) {}

const LabeledInequality& SdSystem::inequality(IneqId id) const {
  auto it = std::lower_bound(registry_.begin(), registry_.end(), id,
                             [](const LabeledInequality& e, IneqId x) { return e.id < x; });
  if (it == registry_.end() || it->id != id)
    throw std::out_of_range("no inequality with id " + std::to_string(id));
  return *it;
}

bool SdSystem::has_inequality(IneqId id) const {
  auto it = std::lower_bound(registry_.begin(), registry_.end(), id,
                             [](const LabeledInequality& e, IneqId x) { return e.id < x; });
  return it != registry_.end() && it->id == id;
}

const SdSystem::Store& SdSystem::store_of(VarId v) const {
  if (!ordering_.contains(v)) throw std::out_of_range("variable is not part of the system ordering");
  return stores_.at(v.value);
}

const std::vector<Bound>& SdSystem::lower_bounds(VarId v) const { return store_of(v).lower; }
const std::vector<Bound>& SdSystem::upper_bounds(VarId v) const { return store_of(v).upper; }
const std::vector<Bound>& SdSystem::bounds(VarId v, BoundKind kind) const {
  return kind == BoundKind::Lower ? lower_bounds(v) : upper_bounds(v);
}

const Bound* SdSystem::bound_of(IneqId id) const {
  auto it = std::lower_bound(locations_.begin(), locations_.end(), id,
                             [](const Location& l, IneqId x) { return l.id < x; });
  if (it == locations_.end() || it->id != id) return nullptr;
  return &bounds(it->variable, it->kind)[it->index];
}

std::optional<Rational> SdSystem::constant_lower(VarId v) const {
  std::optional<Rational> best;
  for (const auto& b : lower_bounds(v))
    if (b.expr.is_constant() && (!best || b.expr.constant() > *best)) best = b.expr.constant();
  return best;
}

std::optional<Rational> SdSystem::constant_upper(VarId v) const {
  std::optional<Rational> best;
  for (const auto& b : upper_bounds(v))
    if (b.expr.is_constant() && (!best || b.expr.constant() < *best)) best = b.expr.constant();
  return best;
}

const LabeledInequality& SdSystem::register_inequality(LabeledInequality ineq) {
  if (!registry_.empty() && ineq.id <= registry_.back().id)
    throw std::logic_error("inequality ids must increase");
  registry_.push_back(std::move(ineq));
  return registry_.back();
}

void SdSystem::store(Bound bound) {
  if (!has_inequality(bound.source)) throw std::logic_error("bound source is not registered");
  if (!locations_.empty() && bound.source <= locations_.back().id)
    throw std::logic_error("bounds must be stored in id order");
  auto& list = bound.kind == BoundKind::Lower ? stores_.at(bound.variable.value).lower
                                              : stores_.at(bound.variable.value).upper;
  locations_.push_back({bound.source, bound.variable, bound.kind, list.size()});
  list.push_back(std::move(bound));
}

} // namespace segdesc::core
