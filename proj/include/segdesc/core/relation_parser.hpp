#pragma once

#include "segdesc/core/inequality.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace segdesc::core {

/// Syntax problem in a textual relation; `column` is 1-based.
class RelationSyntaxError : public std::invalid_argument {
public:
  RelationSyntaxError(const std::string& message, std::size_t column)
      : std::invalid_argument(message), column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

/// A product or power of variables, e.g. "w1*w2".
class NonLinearTermError : public RelationSyntaxError {
public:
  using RelationSyntaxError::RelationSyntaxError;
};

/// Parses "0.56*w1 + w2 >= 0.15 w1 + 1/100". Variables are interned into
/// `vars`. Operators: <= >= = == < > and their unicode forms.
RawRelation parse_relation(std::string_view text, VariableSet& vars, OriginTag origin = {});

/// One relation per non-empty line; '#' starts a comment. Errors carry the
/// line number in their message.
std::vector<RawRelation> parse_relations(std::string_view text, VariableSet& vars);

} // namespace segdesc::core
