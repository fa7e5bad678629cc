#pragma once

#include "su2cyc/pillowcase.hpp"
#include "su2cyc/piecewise.hpp"
#include "su2cyc/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace su2cyc {

struct PillowArcSet;

enum class SegmentLabel { OnS1, OnS2, VerticalThetaKPi, HorizontalPushoff };
const char* to_string(SegmentLabel l);
SegmentLabel parse_segment_label(std::string_view text);

enum class PathCase { SignsDiffer, SameSign };
const char* to_string(PathCase c);

/// Coordinates of a path's vertices: the strip W, or the strip moved by (0, -pi).
enum class PathFrame { Strip, Shifted };

/// A broken line in the plane. labels[i] tags the segment vertices[i] -> vertices[i+1].
/// OnS1 / OnS2 refer to S(first) / S(second).
struct BrokenLine {
  std::vector<PlanePoint> vertices;
  std::vector<SegmentLabel> labels;
  std::optional<Slope> first;
  std::optional<Slope> second;
  PathCase path_case = PathCase::SignsDiffer;
  PathFrame frame = PathFrame::Strip;

  friend bool operator==(const BrokenLine&, const BrokenLine&) = default;
};

/// The zig-zag path from (-pi, pi) to (pi, pi) through (0, pi), inside
/// S(a) ∪ S(b) ∪ {theta = k pi}.
BrokenLine build_path(const Slope& a, const Slope& b);

/// Every segment checked against its label. HorizontalPushoff segments must
/// be horizontal and stay within `collar` of a single vertical line theta = k pi.
bool validate_containment(const BrokenLine& path, const Slope& a, const Slope& b,
                          const RationalAngle& collar = RationalAngle(1, 4));

/// min(d1, d2, pi/4) / 4, further capped by the eta-distance from the
/// boundary of every vertex not on it, so the interiorized path clears the band.
RationalAngle default_epsilon(const Slope& a, const Slope& b, const BrokenLine& path);

/// Pushes corners on eta = 0, 2pi into W* by horizontal segments at height eps.
BrokenLine interiorize(const BrokenLine& path, const RationalAngle& eps);

bool is_symmetric(const BrokenLine& path);
bool is_weakly_forward(const BrokenLine& path);
bool is_strictly_interior(const BrokenLine& path);

/// Moves an interior path by (0, -pi) and applies (theta, eta) -> (theta + g1(eta), eta).
/// An empty r0 is the identity shear.
BrokenLine shear(const BrokenLine& path, const std::optional<Rational>& r0,
                 const RationalAngle& eps);

/// Graph of an odd periodic g2 that stays within `radius` of the sheared path.
PiecewisePeriodicFunction extract_g2(const BrokenLine& sheared, const RationalAngle& radius);

/// Exact sup-norm distance from point to segment.
RationalAngle linf_distance(const PlanePoint& pt, const PlanePoint& s0, const PlanePoint& s1);

/// Exact bound on how far the graph of g over [-pi, pi] strays from the path.
/// Each graph segment is certified against a single path segment.
RationalAngle tube_deviation(const PiecewisePeriodicFunction& g, const BrokenLine& path);

/// Half the sup-distance from the sheared path to lattice points of S(a) ∩ S(b)
/// off the path (after the same transform), capped at eps/2.
RationalAngle default_tube_radius(const Slope& a, const Slope& b, const BrokenLine& sheared,
                                  const PiecewisePeriodicFunction& g1, const RationalAngle& eps);

struct ScheduleOptions {
  std::optional<RationalAngle> epsilon;
  std::optional<Rational> r0;
  std::optional<RationalAngle> tube_radius;
};

struct SeparationResult {
  double margin = 0.0;  // <= 0 when the graph meets the transformed arcs
  double theta = 0.0;   // arc point (untransformed) realizing the margin
  double eta = 0.0;
  bool crossing = false;
};

struct PerturbationSchedule {
  Slope a;
  Slope b;
  BrokenLine path;
  BrokenLine interior;
  BrokenLine sheared;
  RationalAngle epsilon;
  std::optional<Rational> r0;  // empty for the identity shear
  RationalAngle tube_radius;
  PiecewisePeriodicFunction g1 = PiecewisePeriodicFunction::zero();
  PiecewisePeriodicFunction g2 = PiecewisePeriodicFunction::zero();
  PeriodicAntiderivative f1{PiecewisePeriodicFunction::zero(), 1};
  PeriodicAntiderivative f2{PiecewisePeriodicFunction::zero(), -1};
  std::optional<SeparationResult> separation;
};

PerturbationSchedule make_schedule(const Slope& a, const Slope& b,
                                   const PillowArcSet* arcs = nullptr,
                                   const ScheduleOptions& options = {});

/// Minimal torus distance from the graph of g2 to arcs moved by
/// (theta, eta) -> (theta + g1(eta - pi), eta - pi). Includes the reducible circle eta = 0.
SeparationResult separation_margin(const PiecewisePeriodicFunction& g1,
                                   const PiecewisePeriodicFunction& g2, const PillowArcSet& arcs);

struct TouchPoint {
  RationalAngle theta0;
  RationalAngle eta;  // 0 or 2pi
  int on_set = 1;     // 1: S(a), 2: S(b)
  std::int64_t unity_order = 1;
};

/// Walk of build_path in the closed strip W for a pair with gap sum exactly 2pi.
BrokenLine build_boundary_path(const Slope& a, const Slope& b);

/// Off-axis points where the boundary-case path meets eta in {0, 2pi}.
std::vector<TouchPoint> boundary_touch_points(const Slope& a, const Slope& b);

/// Order predicted for a touch point on S(r) with numerator p: divides p for
/// odd p and p/2 for even p.
bool obeys_parity_rule(const TouchPoint& tp, std::int64_t p);

}  // namespace su2cyc
