#include "su2cyc/rational_angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace su2cyc {

std::int64_t floor_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // boost keeps d > 0
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

double RationalAngle::radians() const {
  return std::numbers::pi * static_cast<double>(value_.numerator()) /
         static_cast<double>(value_.denominator());
}

RationalAngle RationalAngle::mod_two_pi() const {
  const Rational turns(floor_of(value_ / Rational(2)));
  return RationalAngle(value_ - turns * 2);
}

RationalAngle RationalAngle::centered() const {
  const auto shifted = RationalAngle(value_ + 1).mod_two_pi();
  return RationalAngle(shifted.value_ - 1);
}

std::string RationalAngle::to_string() const {
  const auto n = value_.numerator();
  const auto d = value_.denominator();
  if (n == 0) return "0";
  std::string s;
  if (n == -1) s = "-pi";
  else if (n == 1) s = "pi";
  else s = std::to_string(n) + "pi";
  if (d != 1) s += "/" + std::to_string(d);
  return s;
}

RationalAngle abs(const RationalAngle& a) { return a < RationalAngle(0) ? -a : a; }
RationalAngle min(const RationalAngle& a, const RationalAngle& b) { return b < a ? b : a; }
RationalAngle max(const RationalAngle& a, const RationalAngle& b) { return a < b ? b : a; }

std::int64_t unity_order(const RationalAngle& theta) {
  // exp(2i*theta) = exp(2*pi*i * n/d) with theta = (n/d)pi reduced
  const auto n = theta.num();
  const auto d = theta.den();
  return d / std::gcd(n, d);
}

}  // namespace su2cyc
