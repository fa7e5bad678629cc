#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace su2cyc {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);
inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// An angle held exactly as a rational multiple of pi.
///
/// Every angle that shows up in the line-family and lattice work is of this
/// form, so equality and ordering never involve floating point.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den = 1) : value_(num, den) {}
  explicit RationalAngle(const Rational& multiple) : value_(multiple) {}

  static RationalAngle pi() { return RationalAngle(1); }
  static RationalAngle two_pi() { return RationalAngle(2); }

  /// The angle divided by pi.
  const Rational& multiple() const { return value_; }
  std::int64_t num() const { return value_.numerator(); }
  std::int64_t den() const { return value_.denominator(); }
  double radians() const;

  /// Representative in [0, 2pi).
  RationalAngle mod_two_pi() const;
  /// Representative in [-pi, pi).
  RationalAngle centered() const;

  bool is_multiple_of_pi() const { return value_.denominator() == 1; }
  bool is_multiple_of_two_pi() const {
    return value_.denominator() == 1 && value_.numerator() % 2 == 0;
  }
  bool is_zero() const { return value_.numerator() == 0; }

  /// Human-readable form such as "3pi/7" or "-pi".
  std::string to_string() const;

  RationalAngle operator-() const { return RationalAngle(-value_); }
  RationalAngle& operator+=(const RationalAngle& o) { value_ += o.value_; return *this; }
  RationalAngle& operator-=(const RationalAngle& o) { value_ -= o.value_; return *this; }
  RationalAngle& operator*=(const Rational& s) { value_ *= s; return *this; }
  RationalAngle& operator/=(const Rational& s) { value_ /= s; return *this; }

  friend RationalAngle operator+(RationalAngle a, const RationalAngle& b) { return a += b; }
  friend RationalAngle operator-(RationalAngle a, const RationalAngle& b) { return a -= b; }
  friend RationalAngle operator*(RationalAngle a, const Rational& s) { return a *= s; }
  friend RationalAngle operator*(const Rational& s, RationalAngle a) { return a *= s; }
  friend RationalAngle operator/(RationalAngle a, const Rational& s) { return a /= s; }
  /// Ratio of two angles (dimensionless).
  friend Rational operator/(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ / b.value_;
  }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  Rational value_{0};
};

RationalAngle abs(const RationalAngle& a);
RationalAngle min(const RationalAngle& a, const RationalAngle& b);
RationalAngle max(const RationalAngle& a, const RationalAngle& b);

/// Multiplicative order of exp(2i*theta). Always finite for rational angles.
std::int64_t unity_order(const RationalAngle& theta);

}  // namespace su2cyc
