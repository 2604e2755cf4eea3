#include "segdesc/core/segment.hpp"

#include "segdesc/core/canonicalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace segdesc::core {

namespace {

RedundancyPolicy effective_policy(const SegmentOptions& options) {
  if (options.mode == SegmentMode::EnumerateAll && options.policy == RedundancyPolicy::BoundsMethod)
    return RedundancyPolicy::KeepAll;
  return options.policy;
}

class Eliminator {
public:
  explicit Eliminator(SdSystem& system) : sys_(system), policy_(effective_policy(system.options())) {}

  /// Registers originals; returns false when a STOP_AT_FIRST run must end.
  bool add_originals(std::span<const LabeledInequality> ineqs) {
    bool keep_going = true;
    for (const auto& ineq : ineqs) {
      check_capacity();
      sys_.register_inequality(ineq);
      auto shape = iso(ineq.body, sys_.ordering(), ineq.id);
      if (auto* bound = std::get_if<Bound>(&shape)) {
        sys_.store(std::move(*bound));
      } else if (std::holds_alternative<ImmediateContradiction>(shape) && keep_going) {
        keep_going = contradiction({ineq.id, ineq.id});
      }
    }
    return keep_going;
  }

  void run(std::size_t top_position, IneqId first_new) {
    for (std::size_t p = top_position; p >= 1; --p)
      if (!level(sys_.ordering().at(p), first_new)) return;
  }

private:
  struct Candidate {
    LabeledInequality ineq;
    Bound bound;
  };

  void check_capacity() const {
    if (sys_.registry().size() >= sys_.options().max_inequalities)
      throw SegmentLimitError("inequality limit of " + std::to_string(sys_.options().max_inequalities) +
                              " reached");
  }

  bool contradiction(ContradictionRecord record) {
    if (sys_.options().mode == SegmentMode::StopAtFirst) {
      sys_.record_contradiction(record);
      return false;
    }
    if (sys_.contradictions().size() >= sys_.options().max_contradictions) {
      sys_.mark_truncated();
      return false;
    }
    sys_.record_contradiction(record);
    return true;
  }

  bool level(VarId v, IneqId first_new) {
    const std::vector<Bound> lowers = sys_.lower_bounds(v);
    const std::vector<Bound> uppers = sys_.upper_bounds(v);
    std::vector<Candidate> batch;
    bool keep_going = true;
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        if (lo.source < first_new && up.source < first_new) continue;
        LabeledInequality product = cro(lo, up);
        auto shape = iso(product.body, sys_.ordering());
        if (auto* bound = std::get_if<Bound>(&shape)) {
          batch.push_back({std::move(product), std::move(*bound)});
        } else if (std::holds_alternative<ImmediateContradiction>(shape)) {
          keep_going = contradiction({lo.source, up.source});
        }
        if (!keep_going) break;
      }
      if (!keep_going) break;
    }
    admit(batch);
    return keep_going;
  }

  void admit(std::vector<Candidate>& batch) {
    std::vector<bool> keep(batch.size(), true);
    if (policy_ == RedundancyPolicy::DropDuplicates) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const Bound& b = batch[i].bound;
        for (const auto& existing : sys_.bounds(b.variable, b.kind))
          if (existing.expr == b.expr) keep[i] = false;
        for (std::size_t j = 0; j < i && keep[i]; ++j)
          if (keep[j] && same_target(batch[j].bound, b) && batch[j].bound.expr == b.expr) keep[i] = false;
      }
    } else if (policy_ == RedundancyPolicy::BoundsMethod) {
      const auto box = constant_box(sys_);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const Bound& b = batch[i].bound;
        for (const auto& existing : sys_.bounds(b.variable, b.kind))
          if (existing.expr == b.expr || dominates(existing, b, box)) {
            keep[i] = false;
            break;
          }
        for (std::size_t j = 0; j < batch.size() && keep[i]; ++j) {
          if (j == i || !same_target(batch[j].bound, b)) continue;
          if (dominates(batch[j].bound, b, box) && (j < i || !dominates(b, batch[j].bound, box)))
            keep[i] = false;
        }
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!keep[i]) continue;
      check_capacity();
      const IneqId id = sys_.next_id();
      batch[i].ineq.id = id;
      batch[i].bound.source = id;
      sys_.register_inequality(std::move(batch[i].ineq));
      sys_.store(std::move(batch[i].bound));
    }
  }

  static bool same_target(const Bound& a, const Bound& b) {
    return a.variable == b.variable && a.kind == b.kind;
  }

  SdSystem& sys_;
  RedundancyPolicy policy_;
};

void check_variables(const SdSystem& system, std::span<const LabeledInequality> ineqs) {
  for (const auto& ineq : ineqs)
    for (const auto& [v, c] : ineq.body.terms())
      if (!system.ordering().contains(v))
        throw std::invalid_argument("inequality " + std::to_string(ineq.id) +
                                    " uses a variable outside the system ordering");
}

} // namespace

SdSystem segment(std::span<const LabeledInequality> ineqs, const VariableSet& vars, const Ordering& ordering,
                 const Rational& epsilon, const SegmentOptions& options) {
  SdSystem system(vars, ordering, epsilon, options);
  if (!ineqs.empty()) system.set_first_id(ineqs.front().id);
  check_variables(system, ineqs);
  Eliminator engine(system);
  if (engine.add_originals(ineqs)) engine.run(ordering.size(), 0);
  return system;
}

SdSystem extend_canonical(const SdSystem& base, std::span<const LabeledInequality> ineqs,
                          std::optional<SegmentOptions> options) {
  if (!base.feasible()) throw std::logic_error("cannot extend a contradictory system");
  check_variables(base, ineqs);
  SdSystem system = base;
  if (options) system.set_options(*options);

  const IneqId first_new = base.next_id();
  std::vector<LabeledInequality> fresh;
  for (const auto& ineq : ineqs) {
    if (ineq.body.is_constant() && ineq.body.constant().sign() <= 0) continue;
    LabeledInequality copy = ineq;
    copy.id = first_new + static_cast<IneqId>(fresh.size());
    copy.parent_lower = copy.parent_upper = copy.id;
    fresh.push_back(std::move(copy));
  }

  std::size_t top = 0;
  for (const auto& ineq : fresh)
    for (const auto& [v, c] : ineq.body.terms()) top = std::max(top, system.ordering().position(v));

  Eliminator engine(system);
  if (engine.add_originals(fresh) && top > 0) engine.run(top, first_new);
  return system;
}

SdSystem extend(const SdSystem& base, std::span<const RawRelation> relations, std::optional<SegmentOptions> options) {
  for (const auto& r : relations)
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& [v, c] : side->terms())
        if (v.value >= base.variables().size() || !base.ordering().contains(v))
          throw std::invalid_argument("relation uses a variable unknown to the system");
  const auto canonical = canonicalize(relations, base.epsilon(), base.next_id());
  return extend_canonical(base, canonical, options);
}

std::set<IneqId> ancestors(const SdSystem& system, IneqId id) {
  std::set<IneqId> roots;
  std::set<IneqId> seen;
  std::vector<IneqId> stack{id};
  while (!stack.empty()) {
    const IneqId current = stack.back();
    stack.pop_back();
    if (!seen.insert(current).second) continue;
    const auto& ineq = system.inequality(current);
    if (ineq.is_original()) {
      roots.insert(current);
    } else {
      stack.push_back(ineq.parent_lower);
      stack.push_back(ineq.parent_upper);
    }
  }
  return roots;
}

std::set<IneqId> backtrack(const SdSystem& system, const ContradictionRecord& record) {
  auto roots = ancestors(system, record.lower_id);
  roots.merge(ancestors(system, record.upper_id));
  return roots;
}

BoundProjection project_bounds(const SdSystem& system, VarId v) {
  if (!system.feasible()) throw std::logic_error("bounds are undefined for a contradictory system");
  BoundProjection out;
  out.lower_bounds = system.lower_bounds(v);
  out.upper_bounds = system.upper_bounds(v);
  if (system.ordering().position(v) == 1) {
    out.lower = system.constant_lower(v);
    out.upper = system.constant_upper(v);
  }
  return out;
}

} // namespace segdesc::core
