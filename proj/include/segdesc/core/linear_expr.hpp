#pragma once

#include "segdesc/core/rational.hpp"
#include "segdesc/core/variables.hpp"

#include <map>
#include <span>
#include <string>

namespace segdesc::core {

/// Affine form sum(c_v * v) + constant. Zero coefficients are never stored.
class LinearExpr {
public:
  using Terms = std::map<VarId, Rational>;

  LinearExpr() = default;
  explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}
  static LinearExpr variable(VarId v, Rational coefficient = Rational(1));

  const Terms& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(VarId v) const;
  bool is_constant() const { return terms_.empty(); }
  bool contains(VarId v) const { return terms_.contains(v); }

  void add_term(VarId v, const Rational& coefficient);
  void add_constant(const Rational& c) { constant_ += c; }
  void set_constant(Rational c) { constant_ = std::move(c); }
  /// Drops v and returns its coefficient (zero when absent).
  Rational remove(VarId v);

  LinearExpr& operator+=(const LinearExpr& rhs);
  LinearExpr& operator-=(const LinearExpr& rhs);
  LinearExpr& operator*=(const Rational& factor);
  LinearExpr& operator/=(const Rational& divisor);
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend LinearExpr operator*(LinearExpr a, const Rational& f) { return a *= f; }
  friend LinearExpr operator/(LinearExpr a, const Rational& d) { return a /= d; }
  LinearExpr operator-() const;

  /// `point` is indexed by VarId::value; missing entries count as zero.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

  /// Exact rendering like "-5/3*w1 + w2 + 1/100".
  std::string to_string(const VariableSet& vars) const;

private:
  Terms terms_;
  Rational constant_;
};

} // namespace segdesc::core
