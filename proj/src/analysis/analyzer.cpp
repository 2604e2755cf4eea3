#include "segdesc/analysis/analyzer.hpp"

#include "segdesc/core/canonicalize.hpp"

#include <algorithm>

namespace segdesc::analysis {

using core::RedundancyPolicy;
using core::SegmentMode;

core::Ordering resolve_ordering(const OrderingSpec& spec, const core::VariableSet& vars,
                                std::span<const core::LabeledInequality> ineqs) {
  switch (spec.kind) {
  case OrderingSpec::Kind::Declaration: return core::order_variables(ineqs, core::DeclarationOrder{});
  case OrderingSpec::Kind::Frequency: return core::order_variables(ineqs, core::FrequencyOrder{});
  case OrderingSpec::Kind::Explicit: break;
  }
  core::ExplicitOrder order;
  for (const auto& name : spec.variables) {
    const auto v = vars.find(name);
    if (!v) throw core::OrderingError("ordering names unknown variable '" + name + "'");
    order.variables.push_back(*v);
  }
  return core::order_variables(ineqs, order);
}

Analyzer::Analyzer(Problem problem, AnalysisOptions options)
    : problem_(std::move(problem)), options_(std::move(options)), model_(problem_.table, problem_.config),
      relations_(model_.build_system(problem_.comparisons)),
      canonical_(core::canonicalize(relations_, problem_.config.epsilon)),
      ordering_(resolve_ordering(options_.ordering, model_.variables(), canonical_)),
      hypothesis_epsilon_(options_.hypothesis_epsilon.value_or(problem_.config.epsilon)) {
  if (hypothesis_epsilon_.sign() <= 0) throw std::invalid_argument("hypothesis epsilon must be positive");
}

core::SegmentOptions Analyzer::run_options(SegmentMode mode, RedundancyPolicy policy) const {
  core::SegmentOptions o;
  o.mode = mode;
  o.policy = policy;
  o.max_contradictions = options_.max_contradictions;
  return o;
}

const core::SdSystem& Analyzer::base() const {
  std::call_once(base_once_, [&] {
    base_ = std::make_unique<core::SdSystem>(core::segment(canonical_, model_.variables(), ordering_,
                                                           problem_.config.epsilon,
                                                           run_options(SegmentMode::StopAtFirst, options_.policy)));
  });
  return *base_;
}

const core::SdSystem& Analyzer::explanation_base() const {
  std::call_once(explanation_once_, [&] {
    explanation_base_ = std::make_unique<core::SdSystem>(
        core::segment(canonical_, model_.variables(), ordering_, problem_.config.epsilon,
                      run_options(SegmentMode::StopAtFirst, RedundancyPolicy::KeepAll)));
  });
  return *explanation_base_;
}

void Analyzer::require_consistent() const {
  if (!base().feasible())
    throw PreconditionError("the comparisons are inconsistent; run a consistency check for explanations");
}

ConsistencyReport Analyzer::check_consistency(SegmentMode mode) const {
  ConsistencyReport report;
  report.mode = mode;
  if (mode == SegmentMode::StopAtFirst) {
    report.system = std::make_shared<const core::SdSystem>(base());
  } else {
    report.system = std::make_shared<const core::SdSystem>(
        core::segment(canonical_, model_.variables(), ordering_, problem_.config.epsilon,
                      run_options(SegmentMode::EnumerateAll, RedundancyPolicy::KeepAll)));
  }
  report.feasible = report.system->feasible();
  report.explanations = explain(*report.system, problem_.comparisons);
  return report;
}

std::vector<WeightRange> Analyzer::weight_ranges() const {
  require_consistent();
  std::vector<core::VarId> declared = ordering_.variables();
  std::sort(declared.begin(), declared.end());
  std::vector<WeightRange> out;
  for (core::VarId v : declared) {
    std::vector<core::VarId> order{v};
    for (core::VarId other : ordering_.variables())
      if (other != v) order.push_back(other);
    const auto system = core::segment(canonical_, model_.variables(), core::Ordering(order),
                                      problem_.config.epsilon,
                                      run_options(SegmentMode::StopAtFirst, options_.policy));
    const auto projection = core::project_bounds(system, v);
    out.push_back({v, projection.lower, projection.upper});
  }
  return out;
}

core::RawRelation Analyzer::hypothesis(RelationKind kind, std::size_t i, std::size_t k) const {
  const auto& names = problem_.table.alternatives();
  if (i >= names.size() || k >= names.size()) throw std::out_of_range("alternative index out of range");
  if (kind == RelationKind::Necessary)
    return model_.preference(k, i, hypothesis_epsilon_,
                             {core::OriginKind::Hypothesis, names[k] + ">" + names[i]});
  return model_.preference(i, k, Rational(0), {core::OriginKind::Hypothesis, names[i] + ">=" + names[k]});
}

bool Analyzer::robust_relation(RelationKind kind, std::size_t i, std::size_t k) const {
  require_consistent();
  const core::RawRelation h = hypothesis(kind, i, k);
  const auto extended =
      core::extend(base(), std::span(&h, 1), run_options(SegmentMode::StopAtFirst, options_.policy));
  return kind == RelationKind::Necessary ? !extended.feasible() : extended.feasible();
}

RelationMatrices Analyzer::relation_matrices() const {
  require_consistent();
  const std::size_t m = problem_.table.alternative_count();
  RelationMatrices out;
  out.necessary = evaluate_pairs(m, options_.threads, [&](std::size_t i, std::size_t k) {
    return robust_relation(RelationKind::Necessary, i, k);
  });
  out.possible = evaluate_pairs(m, options_.threads, [&](std::size_t i, std::size_t k) {
    return robust_relation(RelationKind::Possible, i, k);
  });
  out.hasse_edges = hasse_edges(out.necessary);
  return out;
}

Problem Analyzer::with_comparisons(const IndexSet& kept) const {
  Problem p = problem_;
  std::vector<uta::Comparison> pairs;
  for (std::size_t i : kept) pairs.push_back(problem_.comparisons.pairs().at(i));
  p.comparisons = uta::ReferenceComparisons(std::move(pairs));
  return p;
}

ReductResult Analyzer::preference_reduct(std::size_t i, std::size_t k) const {
  if (!robust_relation(RelationKind::Necessary, i, k))
    throw PreconditionError("relation not necessary: " + problem_.table.alternatives()[i] + " is not necessarily " +
                            "at least as good as " + problem_.table.alternatives()[k]);
  ReductResult out;
  out.first = i;
  out.second = k;
  const core::RawRelation h = hypothesis(RelationKind::Necessary, i, k);
  out.system = std::make_shared<const core::SdSystem>(core::extend(
      explanation_base(), std::span(&h, 1), run_options(SegmentMode::EnumerateAll, RedundancyPolicy::KeepAll)));
  out.explanations = explain(*out.system, problem_.comparisons);
  out.reducts = out.explanations.minimal_subsets;
  out.verified = std::all_of(out.reducts.begin(), out.reducts.end(), [&](const IndexSet& r) {
    return Analyzer(with_comparisons(r), options_).robust_relation(RelationKind::Necessary, i, k);
  });
  return out;
}

ConstructResult Analyzer::preference_construct(std::size_t i, std::size_t k) const {
  if (robust_relation(RelationKind::Possible, i, k))
    throw PreconditionError("relation already possible: " + problem_.table.alternatives()[i] +
                            " can be at least as good as " + problem_.table.alternatives()[k]);
  ConstructResult out;
  out.first = i;
  out.second = k;
  const core::RawRelation h = hypothesis(RelationKind::Possible, i, k);
  out.system = std::make_shared<const core::SdSystem>(core::extend(
      explanation_base(), std::span(&h, 1), run_options(SegmentMode::EnumerateAll, RedundancyPolicy::KeepAll)));
  out.explanations = explain(*out.system, problem_.comparisons);
  const auto& minimal = out.explanations.minimal_subsets;
  out.unsalvageable = std::any_of(minimal.begin(), minimal.end(), [](const IndexSet& s) { return s.empty(); });
  if (out.unsalvageable) return out;
  out.hitting_sets = minimal_hitting_sets(minimal);
  for (const auto& hit : out.hitting_sets) {
    IndexSet kept;
    for (std::size_t c = 0; c < problem_.comparisons.size(); ++c)
      if (!std::binary_search(hit.begin(), hit.end(), c)) kept.push_back(c);
    out.constructs.push_back(std::move(kept));
  }
  out.verified = std::all_of(out.constructs.begin(), out.constructs.end(), [&](const IndexSet& c) {
    return Analyzer(with_comparisons(c), options_).robust_relation(RelationKind::Possible, i, k);
  });
  return out;
}

bool Analyzer::criteria_subset_consistent(const std::vector<std::size_t>& criteria) const {
  if (criteria.empty()) throw std::invalid_argument("criteria subset is empty");
  Problem sub = problem_;
  std::vector<std::string> names;
  for (std::size_t j : criteria) names.push_back(problem_.table.criteria().at(j).name);
  sub.config.criteria_subset = names;
  AnalysisOptions opts = options_;
  if (opts.ordering.kind == OrderingSpec::Kind::Explicit) {
    const uta::UtaModel probe(sub.table, sub.config);
    std::erase_if(opts.ordering.variables,
                  [&](const std::string& name) { return !probe.variables().find(name).has_value(); });
  }
  return Analyzer(std::move(sub), opts).base().feasible();
}

CriteriaReductResult Analyzer::criteria_reducts() const {
  const auto& active = model_.active_criteria();
  const std::size_t n = active.size();
  CriteriaReductResult out;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> subset;
      for (std::size_t t = 0; t < n; ++t)
        if (pick[t]) subset.push_back(active[t]);
      const bool covers_reduct = std::any_of(out.reducts.begin(), out.reducts.end(), [&](const auto& r) {
        return std::includes(subset.begin(), subset.end(), r.begin(), r.end());
      });
      if (covers_reduct) continue;
      const bool ok = criteria_subset_consistent(subset);
      out.evaluated.push_back({subset, ok});
      if (ok) out.reducts.push_back(subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

ConsistencyReport check_consistency(const Problem& problem, SegmentMode mode, const AnalysisOptions& options) {
  return Analyzer(problem, options).check_consistency(mode);
}
std::vector<WeightRange> weight_ranges(const Problem& problem, const AnalysisOptions& options) {
  return Analyzer(problem, options).weight_ranges();
}
bool robust_relation(const Problem& problem, RelationKind kind, std::size_t i, std::size_t k,
                     const AnalysisOptions& options) {
  return Analyzer(problem, options).robust_relation(kind, i, k);
}
RelationMatrices relation_matrices(const Problem& problem, const AnalysisOptions& options) {
  return Analyzer(problem, options).relation_matrices();
}
ReductResult preference_reduct(const Problem& problem, std::size_t i, std::size_t k, const AnalysisOptions& options) {
  return Analyzer(problem, options).preference_reduct(i, k);
}
ConstructResult preference_construct(const Problem& problem, std::size_t i, std::size_t k,
                                     const AnalysisOptions& options) {
  return Analyzer(problem, options).preference_construct(i, k);
}
CriteriaReductResult criteria_reducts(const Problem& problem, const AnalysisOptions& options) {
  return Analyzer(problem, options).criteria_reducts();
}

} // namespace segdesc::analysis
