#pragma once

#include "segdesc/uta/performance_table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace segdesc::uta {

enum class Preference { Strict, Indifferent };

struct Comparison {
  std::string first;
  Preference relation = Preference::Strict;
  std::string second;

  /// "a6~a9" or "a8>a14".
  std::string id() const;
  /// "a6 ∼ a9" or "a8 ≻ a14".
  std::string display() const;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

class ComparisonError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a8>a14", "a6 ~ a9", "a8 ≻ a14".
Comparison parse_comparison(std::string_view text);

class ReferenceComparisons {
public:
  ReferenceComparisons() = default;
  explicit ReferenceComparisons(std::vector<Comparison> pairs) : pairs_(std::move(pairs)) {}

  /// "a6 ~ a9 > a8 > a7" becomes the consecutive pairs of the chain.
  static ReferenceComparisons from_chain(std::string_view chain);

  const std::vector<Comparison>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Index of the pair with the given id, or npos.
  std::size_t find(std::string_view id) const;
  void add(Comparison c) { pairs_.push_back(std::move(c)); }
  /// Removes the pair with this id; false when absent.
  bool remove(std::string_view id);

  /// Throws ComparisonError for unknown alternatives, self comparisons and
  /// repeated pair ids.
  void validate(const PerformanceTable& table) const;

  friend bool operator==(const ReferenceComparisons&, const ReferenceComparisons&) = default;

private:
  std::vector<Comparison> pairs_;
};

} // namespace segdesc::uta
