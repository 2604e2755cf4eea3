#pragma once

#include "segdesc/analysis/explanations.hpp"
#include "segdesc/analysis/hitting_sets.hpp"
#include "segdesc/analysis/relations.hpp"
#include "segdesc/core/segment.hpp"
#include "segdesc/uta/model.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace segdesc::analysis {

struct Problem {
  uta::PerformanceTable table;
  uta::ReferenceComparisons comparisons;
  uta::ModelConfig config;

  friend bool operator==(const Problem&, const Problem&) = default;
};

struct OrderingSpec {
  enum class Kind { Declaration, Frequency, Explicit };
  Kind kind = Kind::Declaration;
  std::vector<std::string> variables; // Explicit only, position 1 first

  friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;
};

struct AnalysisOptions {
  core::RedundancyPolicy policy = core::RedundancyPolicy::BoundsMethod;
  /// Slack of the strict hypothesis in necessary checks; model epsilon if unset.
  std::optional<Rational> hypothesis_epsilon;
  OrderingSpec ordering;
  std::size_t max_contradictions = 10000;
  unsigned threads = 0;

  friend bool operator==(const AnalysisOptions&, const AnalysisOptions&) = default;
};

/// A requested analysis does not apply to the problem as given.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ConsistencyReport {
  bool feasible = true;
  core::SegmentMode mode = core::SegmentMode::StopAtFirst;
  Explanations explanations;
  std::shared_ptr<const core::SdSystem> system;
};

struct WeightRange {
  core::VarId variable;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

enum class RelationKind { Necessary, Possible };

struct ReductResult {
  std::size_t first = 0;
  std::size_t second = 0;
  Explanations explanations;
  std::shared_ptr<const core::SdSystem> system;
  std::vector<IndexSet> reducts;
  /// Each reduct alone re-establishes the necessary relation.
  bool verified = false;
};

struct ConstructResult {
  std::size_t first = 0;
  std::size_t second = 0;
  Explanations explanations;
  std::shared_ptr<const core::SdSystem> system;
  std::vector<IndexSet> hitting_sets;
  std::vector<IndexSet> constructs; // retained comparisons per hitting set
  /// Some contradiction involves no comparison at all.
  bool unsalvageable = false;
  /// Each construct alone makes the possible relation hold.
  bool verified = false;
};

struct CriteriaSubsetCheck {
  std::vector<std::size_t> criteria;
  bool consistent = false;
};

struct CriteriaReductResult {
  std::vector<std::vector<std::size_t>> reducts;
  std::vector<CriteriaSubsetCheck> evaluated; // in evaluation order
};

/// Analyses of one problem. The base systems are built on first use and
/// shared by every later query; all const members are safe to call
/// concurrently.
class Analyzer {
public:
  explicit Analyzer(Problem problem, AnalysisOptions options = {});
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  const Problem& problem() const { return problem_; }
  const AnalysisOptions& options() const { return options_; }
  const uta::UtaModel& model() const { return model_; }
  const std::vector<core::RawRelation>& relations() const { return relations_; }
  const std::vector<core::LabeledInequality>& canonical() const { return canonical_; }
  const core::Ordering& ordering() const { return ordering_; }
  const Rational& hypothesis_epsilon() const { return hypothesis_epsilon_; }

  /// STOP_AT_FIRST run under the configured redundancy policy.
  const core::SdSystem& base() const;
  /// KEEP_ALL run, used as the starting point for enumerations.
  const core::SdSystem& explanation_base() const;

  ConsistencyReport check_consistency(core::SegmentMode mode) const;
  std::vector<WeightRange> weight_ranges() const;
  bool robust_relation(RelationKind kind, std::size_t i, std::size_t k) const;
  RelationMatrices relation_matrices() const;
  ReductResult preference_reduct(std::size_t i, std::size_t k) const;
  ConstructResult preference_construct(std::size_t i, std::size_t k) const;
  CriteriaReductResult criteria_reducts() const;
  /// Feasibility of the model restricted to the given criteria (column indices).
  bool criteria_subset_consistent(const std::vector<std::size_t>& criteria) const;

  /// `U(i) >= U(k)` (Possible) or `U(k) >= U(i) + eps` (Necessary).
  core::RawRelation hypothesis(RelationKind kind, std::size_t i, std::size_t k) const;

private:
  void require_consistent() const;
  core::SegmentOptions run_options(core::SegmentMode mode, core::RedundancyPolicy policy) const;
  Problem with_comparisons(const IndexSet& kept) const;

  Problem problem_;
  AnalysisOptions options_;
  uta::UtaModel model_;
  std::vector<core::RawRelation> relations_;
  std::vector<core::LabeledInequality> canonical_;
  core::Ordering ordering_;
  Rational hypothesis_epsilon_;

  mutable std::once_flag base_once_;
  mutable std::unique_ptr<core::SdSystem> base_;
  mutable std::once_flag explanation_once_;
  mutable std::unique_ptr<core::SdSystem> explanation_base_;
};

core::Ordering resolve_ordering(const OrderingSpec& spec, const core::VariableSet& vars,
                                std::span<const core::LabeledInequality> ineqs);

// Convenience wrappers over a throwaway Analyzer.
ConsistencyReport check_consistency(const Problem& problem, core::SegmentMode mode, const AnalysisOptions& options = {});
std::vector<WeightRange> weight_ranges(const Problem& problem, const AnalysisOptions& options = {});
bool robust_relation(const Problem& problem, RelationKind kind, std::size_t i, std::size_t k,
                     const AnalysisOptions& options = {});
RelationMatrices relation_matrices(const Problem& problem, const AnalysisOptions& options = {});
ReductResult preference_reduct(const Problem& problem, std::size_t i, std::size_t k, const AnalysisOptions& options = {});
ConstructResult preference_construct(const Problem& problem, std::size_t i, std::size_t k,
                                     const AnalysisOptions& options = {});
CriteriaReductResult criteria_reducts(const Problem& problem, const AnalysisOptions& options = {});

} // namespace segdesc::analysis
