#pragma once

#include "su2cyc/rational_angle.hpp"
#include "su2cyc/slope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace su2cyc {

/// A point of the plane R^2 covering the torus, coordinates exact.
struct PlanePoint {
  RationalAngle theta;
  RationalAngle eta;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend auto operator<=>(const PlanePoint& a, const PlanePoint& b) {
    if (auto c = a.theta <=> b.theta; c != 0) return c;
    return a.eta <=> b.eta;
  }
};

/// A point of the torus (R/2piZ)^2, both coordinates in [0, 2pi).
struct PillowPoint {
  RationalAngle theta;
  RationalAngle eta;

  static PillowPoint from(const RationalAngle& theta, const RationalAngle& eta) {
    return {theta.mod_two_pi(), eta.mod_two_pi()};
  }
  friend bool operator==(const PillowPoint&, const PillowPoint&) = default;
};

enum class Region { W, WStar };

/// A point of the strip W = R x [0, 2pi]. Construction checks the eta range.
class StripPoint {
 public:
  StripPoint(const RationalAngle& theta, const RationalAngle& eta);
  explicit StripPoint(const PlanePoint& p) : StripPoint(p.theta, p.eta) {}

  const RationalAngle& theta() const { return pt_.theta; }
  const RationalAngle& eta() const { return pt_.eta; }
  const PlanePoint& plane() const { return pt_; }
  PillowPoint to_pillow() const { return PillowPoint::from(pt_.theta, pt_.eta); }
  /// True when the point lies in W* (0 < eta < 2pi).
  bool interior() const;

  friend bool operator==(const StripPoint&, const StripPoint&) = default;
  friend auto operator<=>(const StripPoint& a, const StripPoint& b) { return a.pt_ <=> b.pt_; }

 private:
  PlanePoint pt_;
};

bool in_region(const PlanePoint& p, Region region);

enum class SetVariant { S, SHat };

/// The line family S(r) or S^(r) on the torus.
///
/// Both are unions of parallel lines p*theta + q*eta = modulus * k * pi, with
/// modulus 2 for S(r) when p is even and 1 otherwise. The integer k is the
/// component id. For odd p the two variants coincide and are stored as SHat.
class ObstructionSet {
 public:
  ObstructionSet(const Slope& slope, SetVariant variant);

  static ObstructionSet S(const Slope& s) { return {s, SetVariant::S}; }
  static ObstructionSet SHat(const Slope& s) { return {s, SetVariant::SHat}; }

  const Slope& slope() const { return slope_; }
  SetVariant variant() const { return variant_; }
  std::int64_t modulus() const { return modulus_; }

  /// (p*theta + q*eta) / (modulus*pi); an integer exactly on the set.
  Rational level(const PlanePoint& pt) const;
  std::optional<std::int64_t> component(const PlanePoint& pt) const;
  bool contains(const PlanePoint& pt) const { return component(pt).has_value(); }
  bool contains(const PillowPoint& pt) const { return contains(PlanePoint{pt.theta, pt.eta}); }

  /// Theta of the point of component k at height eta. Needs p != 0.
  RationalAngle theta_at(std::int64_t k, const RationalAngle& eta) const;
  /// Eta of the point of component k at angle theta. Needs q != 0.
  RationalAngle eta_at(std::int64_t k, const RationalAngle& theta) const;

  /// Eta-spacing of consecutive intersection points with `other` along one
  /// component of this family: pi*|p|*other.modulus() / Delta.
  RationalAngle gap_along(const ObstructionSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ObstructionSet&, const ObstructionSet&) = default;

 private:
  Slope slope_;
  SetVariant variant_;
  std::int64_t modulus_;
};

struct LatticePoint {
  StripPoint point;
  std::int64_t component1;  // component id in the first family
  std::int64_t component2;  // component id in the second family
};

/// All points of s1 ∩ s2 in the region with theta in [theta_lo, theta_hi),
/// sorted by (theta, eta).
std::vector<LatticePoint> intersection_lattice(const ObstructionSet& s1, const ObstructionSet& s2,
                                               Region region,
                                               const RationalAngle& theta_lo = RationalAngle(-1),
                                               const RationalAngle& theta_hi = RationalAngle(1));

/// Eta values of the intersections with `other` on component k of `set` form
/// an arithmetic progression; this returns the one nearest the region edges.
struct ComponentProgression {
  RationalAngle offset;  // one member of the progression
  RationalAngle step;    // positive spacing
  RationalAngle lowest(Region region) const;
  RationalAngle highest(Region region) const;
};
ComponentProgression component_progression(const ObstructionSet& set, const ObstructionSet& other,
                                            std::int64_t k);

enum class Direction { Up, Down };

/// The intersection point adjacent to `at` along the component of `set_i`
/// through it, one gap up or down.
StripPoint adjacent_step(const ObstructionSet& set_i, const ObstructionSet& other,
                         const StripPoint& at, Direction direction);

enum class Transform { TranslatePiZero, ReflectAboutZeroPi };

PlanePoint apply(Transform t, const PlanePoint& p);
PillowPoint apply(Transform t, const PillowPoint& p);
/// Image of a line family; both transforms preserve every S and S^ family.
ObstructionSet apply(Transform t, const ObstructionSet& set);

}  // namespace su2cyc
