#include "su2cyc/piecewise.hpp"

#include "su2cyc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace su2cyc {

namespace {

// Reduce x/pi into [-1, 1).
Rational reduce(const Rational& X) {
  const Rational shifted = X + 1;
  return shifted - Rational(floor_of(shifted / 2) * 2) - 1;
}

double reduce(double X) {
  const double r = X + 1.0 - 2.0 * std::floor((X + 1.0) / 2.0);
  return r - 1.0;
}

}  // namespace

PiecewisePeriodicFunction::PiecewisePeriodicFunction(std::vector<Breakpoint> breakpoints)
    : bp_(std::move(breakpoints)) {
  if (bp_.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two breakpoints");
  if (bp_.front().first != RationalAngle(-1) || bp_.back().first != RationalAngle(1))
    throw Error(ErrorCode::InvalidArgument, "breakpoints must span [-pi, pi]");
  if (bp_.front().second != bp_.back().second)
    throw Error(ErrorCode::InvalidArgument, "values at -pi and pi differ");
  for (std::size_t i = 1; i < bp_.size(); ++i)
    if (!(bp_[i - 1].first < bp_[i].first))
      throw Error(ErrorCode::InvalidArgument, "breakpoints not strictly increasing");
}

PiecewisePeriodicFunction PiecewisePeriodicFunction::zero() {
  return PiecewisePeriodicFunction({{RationalAngle(-1), RationalAngle(0)},
                                    {RationalAngle(1), RationalAngle(0)}});
}

PiecewisePeriodicFunction PiecewisePeriodicFunction::odd_extension(
    const std::vector<Breakpoint>& half) {
  if (half.size() < 2 || half.front().first != RationalAngle(0) ||
      half.back().first != RationalAngle(1))
    throw Error(ErrorCode::InvalidArgument, "half graph must span [0, pi]");
  if (!half.front().second.is_zero() || !half.back().second.is_zero())
    throw Error(ErrorCode::InvalidArgument, "half graph must vanish at 0 and pi");
  std::vector<Breakpoint> full;
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    full.push_back({-it->first, -it->second});
  full.insert(full.end(), half.begin() + 1, half.end());
  return PiecewisePeriodicFunction(std::move(full));
}

PiecewisePeriodicFunction PiecewisePeriodicFunction::shear_profile(const Rational& r0,
                                                                   const RationalAngle& eps) {
  if (r0 == Rational(0)) throw Error(ErrorCode::R0OutOfRange, "r0 = 0");
  if (eps <= RationalAngle(0) || eps >= RationalAngle::pi())
    throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, pi)");
  const auto edge = RationalAngle::pi() - eps;
  return odd_extension({{RationalAngle(0), RationalAngle(0)},
                        {edge, edge / r0},
                        {RationalAngle(1), RationalAngle(0)}});
}

Rational PiecewisePeriodicFunction::slope(std::size_t i) const {
  return (bp_[i + 1].second - bp_[i].second) / (bp_[i + 1].first - bp_[i].first);
}

RationalAngle PiecewisePeriodicFunction::operator()(const RationalAngle& x) const {
  const RationalAngle X(reduce(x.multiple()));
  auto it = std::upper_bound(bp_.begin(), bp_.end(), X,
                             [](const RationalAngle& v, const Breakpoint& b) { return v < b.first; });
  const std::size_t i = static_cast<std::size_t>(it - bp_.begin()) - 1;
  return bp_[i].second + (X - bp_[i].first) * slope(i);
}

double PiecewisePeriodicFunction::operator()(double x) const {
  const double X = reduce(x / std::numbers::pi);
  std::size_t i = 0;
  while (i + 2 < bp_.size() && bp_[i + 1].first.radians() / std::numbers::pi <= X) ++i;
  const double x0 = bp_[i].first.radians(), x1 = bp_[i + 1].first.radians();
  const double y0 = bp_[i].second.radians(), y1 = bp_[i + 1].second.radians();
  const double xr = X * std::numbers::pi;
  return y0 + (xr - x0) * (y1 - y0) / (x1 - x0);
}

bool PiecewisePeriodicFunction::is_odd() const {
  for (const auto& [x, y] : bp_)
    if ((*this)(-x) != -y) return false;
  return true;
}

RationalAngle PiecewisePeriodicFunction::max_abs() const {
  RationalAngle m(0);
  for (const auto& b : bp_) m = max(m, abs(b.second));
  return m;
}

PeriodicAntiderivative::PeriodicAntiderivative(const PiecewisePeriodicFunction& g, int sign)
    : g_(g), sign_(sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +-1");
  const auto& bp = g_.breakpoints();
  base_.assign(bp.size(), Rational(0));
  for (std::size_t i = 1; i < bp.size(); ++i) {
    const Rational w = bp[i].first.multiple() - bp[i - 1].first.multiple();
    base_[i] = base_[i - 1] + w * (bp[i - 1].second.multiple() + bp[i].second.multiple()) / 2;
  }
  at_zero_ = 0;
  at_zero_ = (*this)(RationalAngle(0));
}

std::size_t PeriodicAntiderivative::locate(const Rational& X) const {
  const auto& bp = g_.breakpoints();
  std::size_t i = 0;
  while (i + 2 < bp.size() && bp[i + 1].first.multiple() <= X) ++i;
  return i;
}

Rational PeriodicAntiderivative::operator()(const RationalAngle& x) const {
  const Rational X = reduce(x.multiple());
  const auto i = locate(X);
  const auto& bp = g_.breakpoints();
  const Rational t = X - bp[i].first.multiple();
  const Rational raw = base_[i] + bp[i].second.multiple() * t + g_.slope(i) * t * t / 2;
  return Rational(sign_) * raw - at_zero_;
}

double PeriodicAntiderivative::operator()(double x) const {
  const double X = reduce(x / std::numbers::pi);
  const auto& bp = g_.breakpoints();
  std::size_t i = 0;
  while (i + 2 < bp.size() && boost::rational_cast<double>(bp[i + 1].first.multiple()) <= X) ++i;
  const double t = X - boost::rational_cast<double>(bp[i].first.multiple());
  const double raw = boost::rational_cast<double>(base_[i]) +
                     boost::rational_cast<double>(bp[i].second.multiple()) * t +
                     boost::rational_cast<double>(g_.slope(i)) * t * t / 2.0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return (sign_ * raw - boost::rational_cast<double>(at_zero_)) * pi2;
}

RationalAngle PeriodicAntiderivative::derivative(const RationalAngle& x) const {
  const Rational X = reduce(x.multiple());
  const auto i = locate(X);
  const auto& bp = g_.breakpoints();
  return RationalAngle(Rational(sign_) *
                       (bp[i].second.multiple() + g_.slope(i) * (X - bp[i].first.multiple())));
}

bool PeriodicAntiderivative::is_even() const {
  for (const auto& b : g_.breakpoints())
    if ((*this)(b.first) != (*this)(-b.first)) return false;
  return true;
}

bool PeriodicAntiderivative::is_periodic() const { return base_.back() == base_.front(); }

}  // namespace su2cyc
