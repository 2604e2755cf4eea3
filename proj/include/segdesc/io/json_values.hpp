#pragma once

#include "segdesc/core/sd_system.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace segdesc::io {

using Json = nlohmann::ordered_json;

/// Malformed input, with the JSON path, file line or flag it concerns.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& location, const std::string& message)
      : std::invalid_argument(location.empty() ? message : location + ": " + message), location_(location),
        message_(message) {}
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

private:
  std::string location_;
  std::string message_;
};

/// Exact value as text: "0.01", "1300/1953".
inline Json rational_json(const Rational& r) { return r.to_string(); }

/// Accepts strings ("0.01", "1/3") and JSON numbers. Non-integer numbers are
/// read through their shortest decimal spelling, so 0.01 means 1/100.
Rational parse_rational(const Json& value, const std::string& location);

/// Two-decimal number, or the integer itself when the value is integral.
std::string display_number(const Rational& r);

/// "-1.67w2 + 7.39w1 - 0.08": highest position first, then the constant.
std::string display_expr(const core::LinearExpr& expr, const core::VariableSet& vars, const core::Ordering& ordering);

/// "w3 ≤ 0.67w1".
std::string display_bound(const core::Bound& bound, const core::VariableSet& vars, const core::Ordering& ordering);

/// {"w1": "13/31", ...} in declaration order plus "constant".
Json expr_json(const core::LinearExpr& expr, const core::VariableSet& vars);

std::string policy_name(core::RedundancyPolicy policy);
core::RedundancyPolicy parse_policy(const std::string& text, const std::string& location);

} // namespace segdesc::io
