#pragma once

#include "su2cyc/rational_angle.hpp"

#include <utility>
#include <vector>

namespace su2cyc {

/// A continuous 2pi-periodic piecewise linear function R -> R.
///
/// Stored by its breakpoints over one period [-pi, pi]; the first and last
/// breakpoints sit at -pi and pi and carry equal values.
class PiecewisePeriodicFunction {
 public:
  using Breakpoint = std::pair<RationalAngle, RationalAngle>;

  explicit PiecewisePeriodicFunction(std::vector<Breakpoint> breakpoints);

  static PiecewisePeriodicFunction zero();
  /// Odd extension of a graph given over [0, pi] with value 0 at both ends.
  static PiecewisePeriodicFunction odd_extension(const std::vector<Breakpoint>& half);
  /// The shear profile: x/r0 on [-pi+eps, pi-eps], linear back to 0 at +-pi.
  static PiecewisePeriodicFunction shear_profile(const Rational& r0, const RationalAngle& eps);

  RationalAngle operator()(const RationalAngle& x) const;
  double operator()(double x) const;

  const std::vector<Breakpoint>& breakpoints() const { return bp_; }
  std::size_t segment_count() const { return bp_.size() - 1; }
  /// Slope (dimensionless) of segment i.
  Rational slope(std::size_t i) const;
  bool is_odd() const;
  RationalAngle max_abs() const;

 private:
  std::vector<Breakpoint> bp_;
};

/// F(x) = sign * integral_0^x g, for g periodic and odd.
///
/// Values are exact rational multiples of pi^2. Oddness of g makes F even and
/// 2pi-periodic.
class PeriodicAntiderivative {
 public:
  PeriodicAntiderivative(const PiecewisePeriodicFunction& g, int sign);

  /// F(x) / pi^2.
  Rational operator()(const RationalAngle& x) const;
  double operator()(double x) const;
  /// F'(x) from the right; equals sign * g(x).
  RationalAngle derivative(const RationalAngle& x) const;

  bool is_even() const;
  bool is_periodic() const;
  const PiecewisePeriodicFunction& integrand() const { return g_; }
  int sign() const { return sign_; }

 private:
  std::size_t locate(const Rational& X) const;

  PiecewisePeriodicFunction g_;
  int sign_;
  std::vector<Rational> base_;  // integral from -pi to each breakpoint, / pi^2
  Rational at_zero_;
};

}  // namespace su2cyc
