#pragma once

#include "segdesc/core/inequality.hpp"
#include "segdesc/core/ordering.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace segdesc::core {

enum class SegmentMode { StopAtFirst, EnumerateAll };

/// What happens to a new bound that adds nothing. ENUMERATE_ALL runs treat
/// BoundsMethod as KeepAll so no contradiction goes unreported.
enum class RedundancyPolicy { KeepAll, DropDuplicates, BoundsMethod };

struct SegmentOptions {
  SegmentMode mode = SegmentMode::StopAtFirst;
  RedundancyPolicy policy = RedundancyPolicy::KeepAll;
  std::size_t max_contradictions = 10000;
  std::size_t max_inequalities = 2'000'000;
};

/// Thrown when a run would register more than max_inequalities.
class SegmentLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two stored bounds whose crossing is `b <= 0` with b > 0. An original
/// inequality that is contradictory by itself appears as (id, id).
struct ContradictionRecord {
  IneqId lower_id = 0;
  IneqId upper_id = 0;
  friend bool operator==(const ContradictionRecord&, const ContradictionRecord&) = default;
};

class SdSystem {
public:
  SdSystem(VariableSet vars, Ordering ordering, Rational epsilon, SegmentOptions options);

  const VariableSet& variables() const { return vars_; }
  const Ordering& ordering() const { return ordering_; }
  const Rational& epsilon() const { return epsilon_; }
  const SegmentOptions& options() const { return options_; }

  /// All registered inequalities in id order.
  const std::vector<LabeledInequality>& registry() const { return registry_; }
  const LabeledInequality& inequality(IneqId id) const;
  bool has_inequality(IneqId id) const;
  IneqId next_id() const { return registry_.empty() ? first_id_ : registry_.back().id + 1; }

  const std::vector<Bound>& lower_bounds(VarId v) const;
  const std::vector<Bound>& upper_bounds(VarId v) const;
  const std::vector<Bound>& bounds(VarId v, BoundKind kind) const;
  /// Bound stored for an inequality, if it was stored at all.
  const Bound* bound_of(IneqId id) const;

  const std::vector<ContradictionRecord>& contradictions() const { return contradictions_; }
  bool feasible() const { return contradictions_.empty(); }
  /// ENUMERATE_ALL stopped at max_contradictions.
  bool truncated() const { return truncated_; }

  /// Tightest constant lower/upper bound currently stored for v.
  std::optional<Rational> constant_lower(VarId v) const;
  std::optional<Rational> constant_upper(VarId v) const;

  // Engine-side mutation.
  void set_first_id(IneqId id) { first_id_ = id; }
  void set_options(const SegmentOptions& options) { options_ = options; }
  const LabeledInequality& register_inequality(LabeledInequality ineq);
  void store(Bound bound);
  void record_contradiction(ContradictionRecord record) { contradictions_.push_back(record); }
  void mark_truncated() { truncated_ = true; }

private:
  struct Store {
    std::vector<Bound> lower;
    std::vector<Bound> upper;
  };
  const Store& store_of(VarId v) const;

  VariableSet vars_;
  Ordering ordering_;
  Rational epsilon_;
  SegmentOptions options_;
  IneqId first_id_ = 1;
  std::vector<LabeledInequality> registry_;
  std::vector<Store> stores_; // indexed by VarId::value
  struct Location {
    IneqId id;
    VarId variable;
    BoundKind kind;
    std::size_t index;
  };
  std::vector<Location> locations_; // sorted by id
  std::vector<ContradictionRecord> contradictions_;
  bool truncated_ = false;
};

} // namespace segdesc::core
