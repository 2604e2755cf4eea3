#include "segdesc/io/json_values.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace segdesc::io {

Rational parse_rational(const Json& value, const std::string& location) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) {
      if (value.is_number_unsigned()) return Rational::parse(std::to_string(value.get<std::uint64_t>()));
      return Rational::parse(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_number_float()) {
      char buffer[64];
      const auto result = std::to_chars(buffer, buffer + sizeof buffer, value.get<double>());
      return Rational::parse(std::string_view(buffer, static_cast<std::size_t>(result.ptr - buffer)));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError(location, "malformed number '" + (value.is_string() ? value.get<std::string>() : value.dump()) + "'");
  }
  throw ParseError(location, "expected a number or a numeric string");
}

std::string display_number(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  return r.to_display(2);
}

std::string display_expr(const core::LinearExpr& expr, const core::VariableSet& vars, const core::Ordering& ordering) {
  std::vector<std::pair<core::VarId, Rational>> terms(expr.terms().begin(), expr.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const bool ka = ordering.contains(a.first), kb = ordering.contains(b.first);
    if (ka && kb) return ordering.position(a.first) > ordering.position(b.first);
    return ka && !kb;
  });
  std::string out;
  auto append = [&](const Rational& value, const std::string& name) {
    const bool negative = value.sign() < 0;
    const Rational magnitude = value.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (name.empty()) out += display_number(magnitude);
    else if (magnitude == Rational(1)) out += name;
    else out += display_number(magnitude) + name;
  };
  for (const auto& [v, c] : terms) append(c, vars.name(v));
  if (!expr.constant().is_zero() || out.empty()) {
    if (out.empty()) out = display_number(expr.constant());
    else append(expr.constant(), "");
  }
  return out;
}

std::string display_bound(const core::Bound& bound, const core::VariableSet& vars, const core::Ordering& ordering) {
  return vars.name(bound.variable) + (bound.kind == core::BoundKind::Lower ? " ≥ " : " ≤ ") +
         display_expr(bound.expr, vars, ordering);
}

Json expr_json(const core::LinearExpr& expr, const core::VariableSet& vars) {
  Json coefficients = Json::object();
  for (const auto& [v, c] : expr.terms()) coefficients[vars.name(v)] = rational_json(c);
  return Json{{"coefficients", coefficients}, {"constant", rational_json(expr.constant())}};
}

std::string policy_name(core::RedundancyPolicy policy) {
  switch (policy) {
  case core::RedundancyPolicy::KeepAll: return "none";
  case core::RedundancyPolicy::DropDuplicates: return "dup";
  case core::RedundancyPolicy::BoundsMethod: return "bounds";
  }
  return "none";
}

core::RedundancyPolicy parse_policy(const std::string& text, const std::string& location) {
  if (text == "none" || text == "keep-all") return core::RedundancyPolicy::KeepAll;
  if (text == "dup" || text == "drop-duplicates") return core::RedundancyPolicy::DropDuplicates;
  if (text == "bounds" || text == "bounds-method") return core::RedundancyPolicy::BoundsMethod;
  throw ParseError(location, "unknown redundancy policy '" + text + "' (expected none, dup or bounds)");
}

} // namespace segdesc::io
