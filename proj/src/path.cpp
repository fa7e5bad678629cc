#include "su2cyc/path.hpp"

#include "su2cyc/error.hpp"
#include "su2cyc/rep_variety.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace su2cyc {

namespace {

using Vertices = std::vector<PlanePoint>;
using Labels = std::vector<SegmentLabel>;

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

struct Half {
  Vertices v;
  Labels l;
  void push(const PlanePoint& p, SegmentLabel label) {
    v.push_back(p);
    l.push_back(label);
  }
};

std::string point_str(const PlanePoint& p) {
  return "(" + p.theta.to_string() + ", " + p.eta.to_string() + ")";
}

std::size_t walk_cap(const Slope& a, const Slope& b) {
  return static_cast<std::size_t>(4 * (iabs(a.p) + a.q + iabs(b.p) + b.q) * distance(a, b) + 16);
}

// Close the forward half with the vertical run up or down to (pi, pi).
void finish_at_pi(Half& h, const RationalAngle& eta) {
  if (eta != RationalAngle::pi())
    h.push(PlanePoint{RationalAngle::pi(), RationalAngle::pi()}, SegmentLabel::VerticalThetaKPi);
}

// Adds the segment from the current vertex to `target` along component k of
// `set`, stopping at theta = pi. Returns true once the walk reached theta = pi.
bool advance(Half& h, const ObstructionSet& set, std::int64_t k, const PlanePoint& target,
             SegmentLabel label) {
  const auto pi = RationalAngle::pi();
  if (target.theta < pi) {
    h.push(target, label);
    return false;
  }
  const PlanePoint stop = target.theta == pi ? target : PlanePoint{pi, set.eta_at(k, pi)};
  h.push(stop, label);
  finish_at_pi(h, stop.eta);
  return true;
}

Half start_half() {
  Half h;
  h.v.push_back(PlanePoint{RationalAngle(0), RationalAngle::pi()});
  h.push(PlanePoint{RationalAngle(0), RationalAngle::two_pi()}, SegmentLabel::VerticalThetaKPi);
  return h;
}

// Opposite signs: down along the positive family, up along the negative one.
Half walk_signs_differ(const ObstructionSet& pos, SegmentLabel pos_label,
                       const ObstructionSet& neg, SegmentLabel neg_label, Region region,
                       std::size_t cap) {
  Half h = start_half();
  for (std::size_t iter = 0; iter < cap; ++iter) {
    const PlanePoint cur = h.v.back();
    const auto k = *pos.component(cur);
    const auto low = component_progression(pos, neg, k).lowest(region);
    if (low >= cur.eta) throw Error(ErrorCode::WalkDidNotTerminate, "no descent from " + point_str(cur));
    if (advance(h, pos, k, PlanePoint{pos.theta_at(k, low), low}, pos_label)) return h;

    const PlanePoint mid = h.v.back();
    const auto k2 = *neg.component(mid);
    const auto high = component_progression(neg, pos, k2).highest(region);
    if (high <= mid.eta) throw Error(ErrorCode::WalkDidNotTerminate, "no ascent from " + point_str(mid));
    if (advance(h, neg, k2, PlanePoint{neg.theta_at(k2, high), high}, neg_label)) return h;
  }
  throw Error(ErrorCode::WalkDidNotTerminate, "zig-zag exceeded " + std::to_string(cap) + " steps");
}

// Same sign, 0 < lo < hi: down along S(lo), up along S(hi) until reaching the
// component of S(lo) through (pi, 0), then down it and up theta = pi.
Half walk_same_sign(const ObstructionSet& lo, SegmentLabel lo_label, const ObstructionSet& hi,
                    SegmentLabel hi_label, Region region, std::size_t cap) {
  const auto pi = RationalAngle::pi();
  const auto target_k = *lo.component(PlanePoint{pi, RationalAngle(0)});
  Half h = start_half();
  for (std::size_t iter = 0; iter < cap; ++iter) {
    const PlanePoint cur = h.v.back();
    const auto k = *lo.component(cur);
    if (k == target_k) {
      h.push(PlanePoint{pi, RationalAngle(0)}, lo_label);
      finish_at_pi(h, RationalAngle(0));
      return h;
    }
    const auto low = component_progression(lo, hi, k).lowest(region);
    const PlanePoint bottom{lo.theta_at(k, low), low};
    if (low >= cur.eta || bottom.theta >= pi)
      throw Error(ErrorCode::WalkDidNotTerminate,
                  "descent along " + lo.to_string() + " from " + point_str(cur) + " stalls");
    h.push(bottom, lo_label);

    const auto k2 = *hi.component(bottom);
    const auto prog = component_progression(hi, lo, k2);
    const auto high = prog.highest(region);
    if (high <= bottom.eta)
      throw Error(ErrorCode::WalkDidNotTerminate, "no ascent from " + point_str(bottom));
    PlanePoint next{hi.theta_at(k2, high), high};
    for (auto eta = bottom.eta + prog.step; eta <= high; eta += prog.step) {
      const PlanePoint p{hi.theta_at(k2, eta), eta};
      if (lo.component(p) == target_k) {
        next = p;
        break;
      }
    }
    h.push(next, hi_label);
  }
  throw Error(ErrorCode::WalkDidNotTerminate, "walk exceeded " + std::to_string(cap) + " steps");
}

PlanePoint reflect(const PlanePoint& p) { return apply(Transform::ReflectAboutZeroPi, p); }

BrokenLine assemble(const Half& h, const Slope& a, const Slope& b, PathCase c) {
  BrokenLine out;
  out.first = a;
  out.second = b;
  out.path_case = c;
  for (auto it = h.v.rbegin(); it != h.v.rend() - 1; ++it) out.vertices.push_back(reflect(*it));
  out.labels.assign(h.l.rbegin(), h.l.rend());
  out.vertices.insert(out.vertices.end(), h.v.begin(), h.v.end());
  out.labels.insert(out.labels.end(), h.l.begin(), h.l.end());
  return out;
}

BrokenLine walk(const Slope& a, const Slope& b, Region region) {
  const auto sa = ObstructionSet::S(a);
  const auto sb = ObstructionSet::S(b);
  const auto cap = walk_cap(a, b);
  if ((a.p > 0) != (b.p > 0)) {
    const bool a_pos = a.p > 0;
    const Half h = a_pos ? walk_signs_differ(sa, SegmentLabel::OnS1, sb, SegmentLabel::OnS2, region, cap)
                         : walk_signs_differ(sb, SegmentLabel::OnS2, sa, SegmentLabel::OnS1, region, cap);
    return assemble(h, a, b, PathCase::SignsDiffer);
  }
  if (a.p < 0) {
    // conjugate by theta -> -theta and reuse the positive case
    const BrokenLine m = walk(Slope{-a.p, a.q}, Slope{-b.p, b.q}, region);
    BrokenLine out = m;
    out.first = a;
    out.second = b;
    out.vertices.clear();
    for (auto it = m.vertices.rbegin(); it != m.vertices.rend(); ++it)
      out.vertices.push_back(PlanePoint{-it->theta, it->eta});
    out.labels.assign(m.labels.rbegin(), m.labels.rend());
    return out;
  }
  const bool a_lo = a.value() < b.value();
  const Half h = a_lo ? walk_same_sign(sa, SegmentLabel::OnS1, sb, SegmentLabel::OnS2, region, cap)
                      : walk_same_sign(sb, SegmentLabel::OnS2, sa, SegmentLabel::OnS1, region, cap);
  return assemble(h, a, b, PathCase::SameSign);
}

void check_walkable(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite())
    throw Error(ErrorCode::InvalidSlope, "the path needs finite slopes");
  if (a.p == 0 || b.p == 0) throw Error(ErrorCode::InvalidSlope, "the path needs p != 0");
  if (a == b) throw Error(ErrorCode::EqualSlopes, a.to_string());
}

bool on_boundary(const PlanePoint& p) {
  return p.eta.is_zero() || p.eta == RationalAngle::two_pi();
}

// Point of segment u -> w at height eta.
PlanePoint at_height(const PlanePoint& u, const PlanePoint& w, const RationalAngle& eta) {
  const Rational t = (eta - u.eta) / (w.eta - u.eta);
  return {u.theta + (w.theta - u.theta) * t, eta};
}

}  // namespace

const char* to_string(SegmentLabel l) {
  switch (l) {
    case SegmentLabel::OnS1: return "OnS1";
    case SegmentLabel::OnS2: return "OnS2";
    case SegmentLabel::VerticalThetaKPi: return "VerticalThetaKPi";
    case SegmentLabel::HorizontalPushoff: return "HorizontalPushoff";
  }
  return "?";
}

SegmentLabel parse_segment_label(std::string_view text) {
  for (auto l : {SegmentLabel::OnS1, SegmentLabel::OnS2, SegmentLabel::VerticalThetaKPi,
                 SegmentLabel::HorizontalPushoff})
    if (text == to_string(l)) return l;
  throw Error(ErrorCode::ParseError, "unknown segment label '" + std::string(text) + "'");
}

const char* to_string(PathCase c) {
  return c == PathCase::SignsDiffer ? "SignsDiffer" : "SameSign";
}

BrokenLine build_path(const Slope& a, const Slope& b) {
  check_walkable(a, b);
  const auto cls = pair_verdict(a, b).gap_sum_class;
  if (cls != GapSumClass::LessThan2Pi)
    throw Error(ErrorCode::GapSumNotLessThan2Pi,
                a.to_string() + ", " + b.to_string() + ": gap sum is " + to_string(cls));
  return walk(a, b, Region::WStar);
}

BrokenLine build_boundary_path(const Slope& a, const Slope& b) {
  check_walkable(a, b);
  const auto cls = pair_verdict(a, b).gap_sum_class;
  if (cls != GapSumClass::Exactly2Pi)
    throw Error(ErrorCode::NotBoundaryCase,
                a.to_string() + ", " + b.to_string() + ": gap sum is " + to_string(cls));
  return walk(a, b, Region::W);
}

bool validate_containment(const BrokenLine& path, const Slope& a, const Slope& b,
                          const RationalAngle& collar) {
  if (path.vertices.size() != path.labels.size() + 1) return false;
  const auto sa = ObstructionSet::S(a);
  const auto sb = ObstructionSet::S(b);
  for (std::size_t i = 0; i < path.labels.size(); ++i) {
    const auto& u = path.vertices[i];
    const auto& w = path.vertices[i + 1];
    if (u == w) return false;
    switch (path.labels[i]) {
      case SegmentLabel::OnS1:
      case SegmentLabel::OnS2: {
        const auto& s = path.labels[i] == SegmentLabel::OnS1 ? sa : sb;
        const auto ku = s.component(u);
        if (!ku || ku != s.component(w)) return false;
        break;
      }
      case SegmentLabel::VerticalThetaKPi:
        if (u.theta != w.theta || !u.theta.is_multiple_of_pi()) return false;
        break;
      case SegmentLabel::HorizontalPushoff: {
        if (u.eta != w.eta) return false;
        const Rational mid = (u.theta.multiple() + w.theta.multiple()) / 2;
        const RationalAngle k(floor_of(mid + Rational(1, 2)));
        if (abs(u.theta - k) > collar || abs(w.theta - k) > collar) return false;
        break;
      }
    }
  }
  return true;
}

RationalAngle default_epsilon(const Slope& a, const Slope& b, const BrokenLine& path) {
  const auto g = gap_widths(a, b);
  RationalAngle eps = min(min(g.d1, g.d2), RationalAngle(1, 4)) / Rational(4);
  for (const auto& v : path.vertices) {
    if (on_boundary(v)) continue;
    eps = min(eps, min(v.eta, RationalAngle::two_pi() - v.eta) / Rational(4));
  }
  return eps;
}

BrokenLine interiorize(const BrokenLine& path, const RationalAngle& eps) {
  if (eps <= RationalAngle(0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  BrokenLine out = path;
  out.vertices.clear();
  out.labels.clear();
  const auto& v = path.vertices;
  const auto two_pi = RationalAngle::two_pi();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!on_boundary(v[i])) {
      out.vertices.push_back(v[i]);
      if (i + 1 < v.size()) out.labels.push_back(path.labels[i]);
      continue;
    }
    if (!v[i].theta.is_multiple_of_pi())
      throw Error(ErrorCode::TouchesBoundaryOffAxis, "path meets the boundary at " + point_str(v[i]));
    if (i == 0 || i + 1 == v.size())
      throw Error(ErrorCode::InvalidArgument, "path starts or ends on the boundary");
    const auto in_extent = abs(v[i].eta - v[i - 1].eta);
    const auto out_extent = abs(v[i + 1].eta - v[i].eta);
    if (in_extent <= eps * Rational(2) || out_extent <= eps * Rational(2))
      throw Error(ErrorCode::EpsilonTooLarge,
                  "eps " + eps.to_string() + " too large at corner " + point_str(v[i]));
    const auto h = v[i].eta.is_zero() ? eps : two_pi - eps;
    out.vertices.push_back(at_height(v[i - 1], v[i], h));
    out.labels.push_back(SegmentLabel::HorizontalPushoff);
    out.vertices.push_back(at_height(v[i], v[i + 1], h));
    out.labels.push_back(path.labels[i]);
  }
  return out;
}

bool is_symmetric(const BrokenLine& path) {
  const auto& v = path.vertices;
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = v[n - 1 - i];
    if (path.frame == PathFrame::Strip) {
      if (reflect(v[i]) != w) return false;
    } else if (v[i].theta != -w.theta || v[i].eta != -w.eta) {
      return false;
    }
  }
  return true;
}

bool is_weakly_forward(const BrokenLine& path) {
  for (std::size_t i = 1; i < path.vertices.size(); ++i)
    if (path.vertices[i].theta < path.vertices[i - 1].theta) return false;
  return true;
}

bool is_strictly_interior(const BrokenLine& path) {
  return std::all_of(path.vertices.begin(), path.vertices.end(),
                     [](const PlanePoint& p) { return in_region(p, Region::WStar); });
}

BrokenLine shear(const BrokenLine& path, const std::optional<Rational>& r0,
                 const RationalAngle& eps) {
  if (path.frame != PathFrame::Strip)
    throw Error(ErrorCode::InvalidArgument, "shear expects a path in the strip frame");
  if (path.first && path.second && !path.first->is_infinite() && !path.second->is_infinite()) {
    const auto x = path.first->value();
    const auto y = path.second->value();
    if (path.path_case == PathCase::SameSign) {
      if (!r0) throw Error(ErrorCode::R0OutOfRange, "same-sign paths need a finite r0");
      if (!(std::min(x, y) < *r0 && *r0 < std::max(x, y)))
        throw Error(ErrorCode::R0OutOfRange,
                    "r0 must lie strictly between " + path.first->to_string() + " and " +
                        path.second->to_string());
    } else if (r0) {
      throw Error(ErrorCode::R0OutOfRange, "opposite-sign paths use the identity shear");
    }
  }
  const auto upper = RationalAngle::two_pi() - eps;
  for (const auto& v : path.vertices)
    if (v.eta < eps || v.eta > upper)
      throw Error(ErrorCode::PathExceedsEpsilonBand,
                  point_str(v) + " outside [" + eps.to_string() + ", " + upper.to_string() + "]");
  const auto g1 = r0 ? PiecewisePeriodicFunction::shear_profile(*r0, eps)
                     : PiecewisePeriodicFunction::zero();
  BrokenLine out = path;
  out.frame = PathFrame::Shifted;
  for (auto& v : out.vertices) {
    const auto y = v.eta - RationalAngle::pi();
    v = PlanePoint{v.theta + g1(y), y};
  }
  if (!is_weakly_forward(out)) throw Error(ErrorCode::NotForward, "sheared path turns back");
  return out;
}

PiecewisePeriodicFunction extract_g2(const BrokenLine& sheared, const RationalAngle& radius) {
  if (radius <= RationalAngle(0)) throw Error(ErrorCode::TubeTooTight, "radius must be positive");
  if (sheared.frame != PathFrame::Shifted)
    throw Error(ErrorCode::InvalidArgument, "extract_g2 expects a path in the shifted frame");
  if (!is_weakly_forward(sheared)) throw Error(ErrorCode::NotForward, "path is not weakly forward");
  const auto& all = sheared.vertices;
  const auto pi = RationalAngle::pi();
  if (all.size() < 3 || all.size() % 2 == 0 || !is_symmetric(sheared))
    throw Error(ErrorCode::InvalidArgument, "path is not symmetric about the origin");
  const std::size_t c = all.size() / 2;
  if (all[c] != PlanePoint{} || all.back() != PlanePoint{pi, RationalAngle(0)})
    throw Error(ErrorCode::InvalidArgument, "path must run (-pi,0) -> (0,0) -> (pi,0)");

  // forward half with collinear vertical runs merged
  std::vector<PlanePoint> h{all[c]};
  for (std::size_t i = c + 1; i < all.size(); ++i) {
    if (all[i] == h.back()) continue;
    if (h.size() >= 2 && h[h.size() - 2].theta == h.back().theta && h.back().theta == all[i].theta)
      h.back() = all[i];
    else
      h.push_back(all[i]);
  }
  auto vertical = [&](std::size_t i) { return h[i].theta == h[i + 1].theta; };

  RationalAngle delta = radius / Rational(2);
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (!vertical(i)) delta = min(delta, (h[i + 1].theta - h[i].theta) / Rational(3));

  std::vector<PiecewisePeriodicFunction::Breakpoint> graph;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const bool before = i > 0 && vertical(i - 1);
    const bool after = i + 1 < h.size() && vertical(i);
    PlanePoint p = h[i];
    if (after && i > 0) p.theta -= delta;
    if (before && i + 1 < h.size()) p.theta += delta;
    graph.emplace_back(p.theta, p.eta);
  }
  for (std::size_t i = 1; i < graph.size(); ++i)
    if (!(graph[i - 1].first < graph[i].first))
      throw Error(ErrorCode::TubeTooTight, "vertical runs too close to resolve");
  return PiecewisePeriodicFunction::odd_extension(graph);
}

RationalAngle linf_distance(const PlanePoint& pt, const PlanePoint& s0, const PlanePoint& s1) {
  // f(t) = max(|a + t b|, |c + t d|) is convex piecewise linear in t; its
  // minimum over [0, 1] sits at an endpoint or a kink.
  const Rational a = s0.theta.multiple() - pt.theta.multiple();
  const Rational b = s1.theta.multiple() - s0.theta.multiple();
  const Rational c = s0.eta.multiple() - pt.eta.multiple();
  const Rational d = s1.eta.multiple() - s0.eta.multiple();
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const Rational zero(0), one(1);
  if (b != zero) ts.push_back(-a / b);
  if (d != zero) ts.push_back(-c / d);
  if (b != d) ts.push_back((c - a) / (b - d));
  if (b != -d) ts.push_back(-(a + c) / (b + d));
  std::optional<Rational> best;
  for (const auto& t : ts) {
    if (t < zero || t > one) continue;
    const Rational x = boost::abs(a + t * b);
    const Rational y = boost::abs(c + t * d);
    const Rational f = std::max(x, y);
    if (!best || f < *best) best = f;
  }
  return RationalAngle(*best);
}

RationalAngle tube_deviation(const PiecewisePeriodicFunction& g, const BrokenLine& path) {
  const auto& bp = g.breakpoints();
  const auto& v = path.vertices;
  RationalAngle worst(0);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const PlanePoint A{bp[i].first, bp[i].second};
    const PlanePoint B{bp[i + 1].first, bp[i + 1].second};
    std::optional<RationalAngle> best;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      const auto dev = max(linf_distance(A, v[j], v[j + 1]), linf_distance(B, v[j], v[j + 1]));
      if (!best || dev < *best) best = dev;
    }
    if (!best) throw Error(ErrorCode::InvalidArgument, "empty path");
    worst = max(worst, *best);
  }
  return worst;
}

RationalAngle default_tube_radius(const Slope& a, const Slope& b, const BrokenLine& sheared,
                                  const PiecewisePeriodicFunction& g1, const RationalAngle& eps) {
  RationalAngle radius = eps / Rational(2);
  const auto lattice = intersection_lattice(ObstructionSet::S(a), ObstructionSet::S(b),
                                            Region::WStar, RationalAngle(-3), RationalAngle(3));
  const auto& v = sheared.vertices;
  for (const auto& lp : lattice) {
    const auto y = lp.point.eta() - RationalAngle::pi();
    const PlanePoint q{lp.point.theta() + g1(y), y};
    std::optional<RationalAngle> d;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      const auto dj = linf_distance(q, v[j], v[j + 1]);
      if (!d || dj < *d) d = dj;
    }
    if (d && !d->is_zero()) radius = min(radius, *d / Rational(2));
  }
  return radius;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec {
  double x, y;
};

double cross(const Vec& o, const Vec& a, const Vec& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double point_segment(const Vec& p, const Vec& a, const Vec& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

bool segments_cross(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const double d1 = cross(c, d, a), d2 = cross(c, d, b);
  const double d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0) != (d2 > 0) || d1 == 0 || d2 == 0) && ((d3 > 0) != (d4 > 0) || d3 == 0 || d4 == 0) &&
         std::min(a.x, b.x) <= std::max(c.x, d.x) && std::min(c.x, d.x) <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= std::max(c.y, d.y) && std::min(c.y, d.y) <= std::max(a.y, b.y);
}

double segment_segment(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  if (segments_cross(a, b, c, d)) return 0.0;
  return std::min({point_segment(a, c, d), point_segment(b, c, d), point_segment(c, a, b),
                   point_segment(d, a, b)});
}

// Graph of g2 over one period as a polyline.
struct GraphPolyline {
  std::vector<Vec> v;

  explicit GraphPolyline(const PiecewisePeriodicFunction& g) {
    for (const auto& [bx, by] : g.breakpoints()) v.push_back({bx.radians(), by.radians()});
  }

  // Euclidean torus distance from segment ab to the graph; 0 when they meet.
  double distance(Vec a, Vec b) const {
    // move a into [-pi, pi)^2; pieces are shorter than 2pi in each coordinate
    const double sx = std::floor((a.x + kPi) / kTwoPi) * kTwoPi;
    const double sy = std::floor((a.y + kPi) / kTwoPi) * kTwoPi;
    a = {a.x - sx, a.y - sy};
    b = {b.x - sx, b.y - sy};
    double best = std::numeric_limits<double>::infinity();
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) {
        const Vec a2{a.x + i * kTwoPi, a.y + j * kTwoPi}, b2{b.x + i * kTwoPi, b.y + j * kTwoPi};
        if (std::max(a2.x, b2.x) < -kPi - 4 || std::min(a2.x, b2.x) > kPi + 4) continue;
        for (std::size_t k = 0; k + 1 < v.size(); ++k) best = std::min(best, segment_segment(a2, b2, v[k], v[k + 1]));
      }
    return best;
  }
};

}  // namespace

SeparationResult separation_margin(const PiecewisePeriodicFunction& g1,
                                   const PiecewisePeriodicFunction& g2, const PillowArcSet& arcs) {
  const GraphPolyline graph(g2);
  SeparationResult res;
  res.margin = kPi - g2.max_abs().radians();  // reducible circle eta = 0
  auto record = [&](double d, double th, double et) {
    if (d < res.margin) {
      res.margin = d;
      res.theta = th;
      res.eta = et;
      res.crossing = d == 0.0;
    }
  };
  auto transform = [&](double th, double et) { return Vec{th + g1(et - kPi), et - kPi}; };

  std::vector<double> g1_breaks;
  for (const auto& [x, y] : g1.breakpoints()) g1_breaks.push_back(x.radians());

  for (const auto& arc : arcs.exact_arcs) {
    const double lo = arc.theta_lo.radians();
    const double hi = arc.theta_hi.radians();
    // unwrapped eta(theta) = e0 - c theta; the transform is linear between
    // the thetas where eta - pi meets a breakpoint of g1 (mod 2pi)
    const double c = static_cast<double>(arc.c_eta == 1 ? arc.c_theta : -arc.c_theta);
    const double e0 = arc.eta_at(lo) + c * lo;
    std::vector<double> cuts{lo, hi};
    if (c != 0) {
      for (double xb : g1_breaks) {
        const double n_lo = std::ceil(std::min((e0 - c * lo - kPi - xb) / kTwoPi, (e0 - c * hi - kPi - xb) / kTwoPi) - 1);
        const double n_hi = std::floor(std::max((e0 - c * lo - kPi - xb) / kTwoPi, (e0 - c * hi - kPi - xb) / kTwoPi) + 1);
        for (double n = n_lo; n <= n_hi; n += 1) {
          const double th = (e0 - kPi - xb - n * kTwoPi) / c;
          if (th > lo && th < hi) cuts.push_back(th);
        }
      }
      // keep every piece below 2pi in eta so the torus shifts above suffice
      const double step = kPi / std::abs(c);
      for (double th = lo + step; th < hi; th += step) cuts.push_back(th);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double t0 = cuts[i], t1 = cuts[i + 1];
      if (t1 <= t0) continue;
      const Vec a = transform(t0, e0 - c * t0);
      const Vec b = transform(t1, e0 - c * t1);
      const double d = graph.distance(a, b);
      const double tm = 0.5 * (t0 + t1);
      record(d, tm, arc.eta_at(tm));
    }
  }
  for (const auto& s : arcs.samples) {
    const Vec p = transform(s.theta, s.eta);
    record(graph.distance(p, p), s.theta, s.eta);
  }
  return res;
}

PerturbationSchedule make_schedule(const Slope& a, const Slope& b, const PillowArcSet* arcs,
                                   const ScheduleOptions& options) {
  PerturbationSchedule s;
  s.a = a;
  s.b = b;
  s.path = build_path(a, b);
  s.epsilon = options.epsilon.value_or(default_epsilon(a, b, s.path));
  s.interior = interiorize(s.path, s.epsilon);
  if (options.r0) {
    s.r0 = options.r0;
  } else if (s.path.path_case == PathCase::SameSign) {
    s.r0 = Rational(a.p + b.p, a.q + b.q);
  }
  s.sheared = shear(s.interior, s.r0, s.epsilon);
  s.g1 = s.r0 ? PiecewisePeriodicFunction::shear_profile(*s.r0, s.epsilon)
              : PiecewisePeriodicFunction::zero();
  s.tube_radius =
      options.tube_radius.value_or(default_tube_radius(a, b, s.sheared, s.g1, s.epsilon));
  s.g2 = extract_g2(s.sheared, s.tube_radius);
  s.f1 = PeriodicAntiderivative(s.g1, 1);
  s.f2 = PeriodicAntiderivative(s.g2, -1);
  if (arcs) {
    s.separation = separation_margin(s.g1, s.g2, *arcs);
    if (s.separation->margin <= 0.0)
      throw Error(ErrorCode::SeparationFailed,
                  "graph of g2 meets the transformed arcs near arc point (" +
                      std::to_string(s.separation->theta) + ", " +
                      std::to_string(s.separation->eta) + ")");
  }
  return s;
}

std::vector<TouchPoint> boundary_touch_points(const Slope& a, const Slope& b) {
  const BrokenLine path = build_boundary_path(a, b);
  std::vector<TouchPoint> out;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const auto& v = path.vertices[i];
    if (!on_boundary(v) || v.theta.is_multiple_of_pi()) continue;
    TouchPoint tp;
    tp.theta0 = v.theta;
    tp.eta = v.eta;
    tp.on_set = path.labels[i - 1] == SegmentLabel::OnS1 ? 1 : 2;
    tp.unity_order = unity_order(v.theta);
    out.push_back(tp);
  }
  std::sort(out.begin(), out.end(),
            [](const TouchPoint& x, const TouchPoint& y) { return x.theta0 < y.theta0; });
  return out;
}

bool obeys_parity_rule(const TouchPoint& tp, std::int64_t p) {
  p = iabs(p);
  const auto bound = p % 2 != 0 ? p : p / 2;
  return bound != 0 && bound % tp.unity_order == 0;
}

}  // namespace su2cyc
