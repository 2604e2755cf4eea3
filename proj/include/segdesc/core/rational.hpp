#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace segdesc {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every coefficient the engine touches is a Rational; nothing is rounded
/// except through to_display(), which exists only for table output.
class Rational {
public:
  Rational() = default;
  Rational(long value); // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  /// Accepts "12", "-3/4", "0.01", "1.5e-3" and "+7". Throws
  /// std::invalid_argument on anything else or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const;

  std::string numerator_string() const;
  std::string denominator_string() const;

  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Terminating decimals print as decimals ("0.01", "-2.5"), everything
  /// else as "p/q". parse(to_string()) is the identity.
  std::string to_string() const;
  std::string to_fraction_string() const;

  /// Fixed-point text rounded half away from zero. Never prints "-0.00".
  std::string to_display(int decimals = 2) const;

  double to_double() const { return value_.get_d(); }
  std::size_t hash() const;

private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace segdesc

template <>
struct std::hash<segdesc::Rational> {
  std::size_t operator()(const segdesc::Rational& r) const noexcept { return r.hash(); }
};
