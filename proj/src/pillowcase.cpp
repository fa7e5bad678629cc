#include "su2cyc/pillowcase.hpp"

#include "su2cyc/error.hpp"

#include <algorithm>

namespace su2cyc {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

// Range of integer levels (p*theta + q*eta)/(m*pi) over a box.
std::pair<std::int64_t, std::int64_t> level_range(const ObstructionSet& s, const Rational& t_lo,
                                                  const Rational& t_hi) {
  Rational lo, hi;
  bool first = true;
  for (const auto& t : {t_lo, t_hi}) {
    for (const auto& e : {Rational(0), Rational(2)}) {
      const Rational v = s.level(PlanePoint{RationalAngle(t), RationalAngle(e)});
      if (first || v < lo) lo = v;
      if (first || v > hi) hi = v;
      first = false;
    }
  }
  return {ceil_of(lo), floor_of(hi)};
}

}  // namespace

StripPoint::StripPoint(const RationalAngle& theta, const RationalAngle& eta) : pt_{theta, eta} {
  if (eta < RationalAngle(0) || eta > RationalAngle::two_pi())
    throw Error(ErrorCode::InvalidArgument, "eta " + eta.to_string() + " outside [0, 2pi]");
}

bool StripPoint::interior() const { return in_region(pt_, Region::WStar); }

bool in_region(const PlanePoint& p, Region region) {
  if (region == Region::W) return p.eta >= RationalAngle(0) && p.eta <= RationalAngle::two_pi();
  return p.eta > RationalAngle(0) && p.eta < RationalAngle::two_pi();
}

ObstructionSet::ObstructionSet(const Slope& slope, SetVariant variant)
    : slope_(slope), variant_(variant), modulus_(1) {
  if (slope.p % 2 != 0) variant_ = SetVariant::SHat;
  if (variant_ == SetVariant::S && slope.p % 2 == 0) modulus_ = 2;
}

Rational ObstructionSet::level(const PlanePoint& pt) const {
  return (pt.theta.multiple() * slope_.p + pt.eta.multiple() * slope_.q) / modulus_;
}

std::optional<std::int64_t> ObstructionSet::component(const PlanePoint& pt) const {
  const auto l = level(pt);
  if (!is_integer(l)) return std::nullopt;
  return l.numerator();
}

RationalAngle ObstructionSet::theta_at(std::int64_t k, const RationalAngle& eta) const {
  if (slope_.p == 0) throw Error(ErrorCode::InvalidSlope, "horizontal family has no theta_at");
  return RationalAngle((Rational(modulus_ * k) - eta.multiple() * slope_.q) / slope_.p);
}

RationalAngle ObstructionSet::eta_at(std::int64_t k, const RationalAngle& theta) const {
  if (slope_.q == 0) throw Error(ErrorCode::InvalidSlope, "vertical family has no eta_at");
  return RationalAngle((Rational(modulus_ * k) - theta.multiple() * slope_.p) / slope_.q);
}

RationalAngle ObstructionSet::gap_along(const ObstructionSet& other) const {
  const auto delta = distance(slope_, other.slope_);
  if (delta == 0) throw Error(ErrorCode::EqualSlopes, to_string() + " vs " + other.to_string());
  return RationalAngle(iabs(slope_.p) * other.modulus_, delta);
}

std::string ObstructionSet::to_string() const {
  return (variant_ == SetVariant::S ? "S(" : "Shat(") + slope_.to_string() + ")";
}

std::vector<LatticePoint> intersection_lattice(const ObstructionSet& s1, const ObstructionSet& s2,
                                               Region region, const RationalAngle& theta_lo,
                                               const RationalAngle& theta_hi) {
  const auto& a = s1.slope();
  const auto& b = s2.slope();
  std::int64_t D = a.p * b.q - b.p * a.q;
  if (D == 0) throw Error(ErrorCode::EqualSlopes, s1.to_string() + " vs " + s2.to_string());
  const auto m1 = s1.modulus();
  const auto m2 = s2.modulus();
  const auto [k1_lo, k1_hi] = level_range(s1, theta_lo.multiple(), theta_hi.multiple());
  const auto [k2_lo, k2_hi] = level_range(s2, theta_lo.multiple(), theta_hi.multiple());

  // theta/pi = nt/D and eta/pi = ne/D; flip signs so that D > 0
  const std::int64_t sign = D > 0 ? 1 : -1;
  D *= sign;
  const auto lo_n = theta_lo.num(), lo_d = theta_lo.den();
  const auto hi_n = theta_hi.num(), hi_d = theta_hi.den();
  const bool closed = region == Region::W;

  std::vector<LatticePoint> out;
  for (auto k1 = k1_lo; k1 <= k1_hi; ++k1) {
    for (auto k2 = k2_lo; k2 <= k2_hi; ++k2) {
      const std::int64_t nt = sign * (m1 * k1 * b.q - m2 * k2 * a.q);
      const std::int64_t ne = sign * (a.p * m2 * k2 - b.p * m1 * k1);
      if (closed ? (ne < 0 || ne > 2 * D) : (ne <= 0 || ne >= 2 * D)) continue;
      if (nt * lo_d < lo_n * D || nt * hi_d >= hi_n * D) continue;
      out.push_back({StripPoint(RationalAngle(nt, D), RationalAngle(ne, D)), k1, k2});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& x, const LatticePoint& y) { return x.point < y.point; });
  return out;
}

RationalAngle ComponentProgression::lowest(Region region) const {
  // smallest offset + n*step that is > 0 (W*) or >= 0 (W)
  const Rational t = -offset.multiple() / step.multiple();
  const auto n = region == Region::WStar ? floor_of(t) + 1 : ceil_of(t);
  return offset + step * Rational(n);
}

RationalAngle ComponentProgression::highest(Region region) const {
  const Rational t = (Rational(2) - offset.multiple()) / step.multiple();
  const auto n = region == Region::WStar ? ceil_of(t) - 1 : floor_of(t);
  return offset + step * Rational(n);
}

ComponentProgression component_progression(const ObstructionSet& set, const ObstructionSet& other,
                                            std::int64_t k) {
  const auto& a = set.slope();
  const auto& b = other.slope();
  const std::int64_t D = a.p * b.q - b.p * a.q;
  if (D == 0) throw Error(ErrorCode::EqualSlopes, set.to_string() + " vs " + other.to_string());
  // eta_j / pi = (p_a m_b j - p_b m_a k) / D
  return {RationalAngle(-b.p * set.modulus() * k, D), set.gap_along(other)};
}

StripPoint adjacent_step(const ObstructionSet& set_i, const ObstructionSet& other,
                         const StripPoint& at, Direction direction) {
  const auto k = set_i.component(at.plane());
  if (!k || !other.contains(at.plane()) || !at.interior())
    throw Error(ErrorCode::NotOnComponent,
                "(" + at.theta().to_string() + ", " + at.eta().to_string() +
                    ") is not an interior intersection of " + set_i.to_string() + " and " +
                    other.to_string());
  const auto gap = set_i.gap_along(other);
  const auto eta = direction == Direction::Up ? at.eta() + gap : at.eta() - gap;
  if (eta <= RationalAngle(0) || eta >= RationalAngle::two_pi())
    throw Error(ErrorCode::GuardViolated,
                "step of " + gap.to_string() + " from eta " + at.eta().to_string() + " leaves W*");
  return StripPoint(set_i.theta_at(*k, eta), eta);
}

PlanePoint apply(Transform t, const PlanePoint& p) {
  if (t == Transform::TranslatePiZero) return {p.theta + RationalAngle::pi(), p.eta};
  return {-p.theta, RationalAngle::two_pi() - p.eta};
}

PillowPoint apply(Transform t, const PillowPoint& p) {
  const auto q = apply(t, PlanePoint{p.theta, p.eta});
  return PillowPoint::from(q.theta, q.eta);
}

ObstructionSet apply(Transform, const ObstructionSet& set) {
  // theta -> theta + pi shifts every level by p/m, an integer;
  // (theta, eta) -> (-theta, 2pi - eta) negates the level up to 2q/m.
  return set;
}

}  // namespace su2cyc
