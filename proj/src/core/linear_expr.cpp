#include "segdesc/core/linear_expr.hpp"

namespace segdesc::core {

LinearExpr LinearExpr::variable(VarId v, Rational coefficient) {
  LinearExpr e;
  e.add_term(v, coefficient);
  return e;
}

Rational LinearExpr::coefficient(VarId v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Rational() : it->second;
}

void LinearExpr::add_term(VarId v, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LinearExpr::remove(VarId v) {
  auto it = terms_.find(v);
  if (it == terms_.end()) return Rational();
  Rational c = std::move(it->second);
  terms_.erase(it);
  return c;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& rhs) {
  for (const auto& [v, c] : rhs.terms_) add_term(v, c);
  constant_ += rhs.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& rhs) {
  for (const auto& [v, c] : rhs.terms_) add_term(v, -c);
  constant_ -= rhs.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    constant_ = Rational();
    return *this;
  }
  for (auto& [v, c] : terms_) c *= factor;
  constant_ *= factor;
  return *this;
}

LinearExpr& LinearExpr::operator/=(const Rational& divisor) {
  for (auto& [v, c] : terms_) c /= divisor;
  constant_ /= divisor;
  return *this;
}

LinearExpr LinearExpr::operator-() const {
  LinearExpr out = *this;
  out *= Rational(-1);
  return out;
}

Rational LinearExpr::evaluate(std::span<const Rational> point) const {
  Rational total = constant_;
  for (const auto& [v, c] : terms_)
    if (v.value < point.size()) total += c * point[v.value];
  return total;
}

std::string LinearExpr::to_string(const VariableSet& vars) const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& name) {
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = c.abs();
    if (name.empty()) {
      out += magnitude.to_string();
    } else {
      if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
      out += name;
    }
  };
  for (const auto& [v, c] : terms_) append(c, vars.name(v));
  if (!constant_.is_zero() || out.empty()) append(constant_, "");
  return out;
}

} // namespace segdesc::core
