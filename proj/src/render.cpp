#include "su2cyc/render.hpp"

#include "su2cyc/error.hpp"
#include "su2cyc/path.hpp"
#include "su2cyc/rep_variety.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace su2cyc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Canvas {
  Canvas(double width, double height, double bottom) : w(width), h(height), eta_lo(bottom) {}

  double w, h, margin = 30;
  double eta_lo;  // bottom of the viewport; the window is 2pi tall and theta in [-pi, pi]
  std::ostringstream out;

  double X(double theta) const { return margin + (theta + kPi) / (2 * kPi) * (w - 2 * margin); }
  double Y(double eta) const { return h - margin - (eta - eta_lo) / (2 * kPi) * (h - 2 * margin); }

  void line(double t0, double e0, double t1, double e1, const char* style) {
    out << "<line x1=\"" << num(X(t0)) << "\" y1=\"" << num(Y(e0)) << "\" x2=\"" << num(X(t1))
        << "\" y2=\"" << num(Y(e1)) << "\" " << style << "/>\n";
  }
  void dot(double t, double e, double r, const char* style) {
    out << "<circle cx=\"" << num(X(t)) << "\" cy=\"" << num(Y(e)) << "\" r=\"" << num(r) << "\" "
        << style << "/>\n";
  }
};

// Clip the line p theta + q eta = c to the viewport box.
void clipped_line(Canvas& cv, double p, double q, double c, const char* style) {
  const double t_lo = -kPi, t_hi = kPi, e_lo = cv.eta_lo, e_hi = cv.eta_lo + 2 * kPi;
  std::vector<std::pair<double, double>> pts;
  auto add = [&](double t, double e) {
    if (t < t_lo - 1e-12 || t > t_hi + 1e-12 || e < e_lo - 1e-12 || e > e_hi + 1e-12) return;
    for (const auto& [pt, pe] : pts)
      if (std::abs(pt - t) < 1e-9 && std::abs(pe - e) < 1e-9) return;
    pts.emplace_back(t, e);
  };
  if (q != 0) {
    add(t_lo, (c - p * t_lo) / q);
    add(t_hi, (c - p * t_hi) / q);
  }
  if (p != 0) {
    add((c - q * e_lo) / p, e_lo);
    add((c - q * e_hi) / p, e_hi);
  }
  if (pts.size() >= 2) cv.line(pts[0].first, pts[0].second, pts[1].first, pts[1].second, style);
}

void draw_family(Canvas& cv, const Slope& s, const char* style) {
  const auto set = ObstructionSet::S(s);
  const double p = static_cast<double>(s.p), q = static_cast<double>(s.q);
  const double m = static_cast<double>(set.modulus());
  double lo = 1e300, hi = -1e300;
  for (double t : {-kPi, kPi})
    for (double e : {cv.eta_lo, cv.eta_lo + 2 * kPi}) {
      lo = std::min(lo, (p * t + q * e) / (m * kPi));
      hi = std::max(hi, (p * t + q * e) / (m * kPi));
    }
  for (auto k = static_cast<long>(std::ceil(lo)); k <= static_cast<long>(std::floor(hi)); ++k)
    clipped_line(cv, p, q, m * kPi * static_cast<double>(k), style);
}

const char* label_style(SegmentLabel l) {
  switch (l) {
    case SegmentLabel::OnS1: return "stroke=\"#c0392b\" stroke-width=\"2.5\"";
    case SegmentLabel::OnS2: return "stroke=\"#2471a3\" stroke-width=\"2.5\"";
    case SegmentLabel::VerticalThetaKPi: return "stroke=\"#1e8449\" stroke-width=\"2.5\"";
    case SegmentLabel::HorizontalPushoff: return "stroke=\"#7d3c98\" stroke-width=\"2.5\"";
  }
  return "stroke=\"black\"";
}

void draw_path(Canvas& cv, const BrokenLine& l) {
  for (std::size_t i = 0; i < l.labels.size(); ++i) {
    const auto& u = l.vertices[i];
    const auto& w = l.vertices[i + 1];
    cv.line(u.theta.radians(), u.eta.radians(), w.theta.radians(), w.eta.radians(),
            label_style(l.labels[i]));
  }
}

}  // namespace

std::string render_pillowcase(const DrawSpec& spec) {
  if (spec.width < 100 || spec.height < 100)
    throw Error(ErrorCode::InvalidArgument, "canvas must be at least 100x100");
  if ((spec.path || spec.interior || spec.sheared) && !(spec.a && spec.b))
    throw Error(ErrorCode::InvalidArgument, "path overlays need two slopes");
  Canvas cv(spec.width, spec.height, spec.sheared ? -kPi : 0.0);
  auto& o = cv.out;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
    << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
    << "\" fill=\"white\"/>\n";
  o << "<rect x=\"" << num(cv.X(-kPi)) << "\" y=\"" << num(cv.Y(cv.eta_lo + 2 * kPi))
    << "\" width=\"" << num(cv.X(kPi) - cv.X(-kPi)) << "\" height=\""
    << num(cv.Y(cv.eta_lo) - cv.Y(cv.eta_lo + 2 * kPi))
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  cv.line(0, cv.eta_lo, 0, cv.eta_lo + 2 * kPi, "stroke=\"#999\" stroke-dasharray=\"4 3\"");
  cv.line(-kPi, cv.eta_lo + kPi, kPi, cv.eta_lo + kPi, "stroke=\"#999\" stroke-dasharray=\"4 3\"");

  if (!spec.sheared) {
    if (spec.a) draw_family(cv, *spec.a, "stroke=\"#e6b0aa\" stroke-width=\"1\"");
    if (spec.b) draw_family(cv, *spec.b, "stroke=\"#a9cce3\" stroke-width=\"1\"");
    if (spec.a && spec.b && !(*spec.a == *spec.b)) {
      for (const auto& lp : intersection_lattice(ObstructionSet::S(*spec.a), ObstructionSet::S(*spec.b),
                                                 Region::W, RationalAngle(-1), RationalAngle(1)))
        cv.dot(lp.point.theta().radians(), lp.point.eta().radians(), 2.5, "fill=\"#555\"");
    }
  }
  if (spec.torus_knot) {
    const auto arcs = torus_knot_arcs(spec.torus_knot->first, spec.torus_knot->second, spec.mirror);
    for (const auto& arc : arcs.exact_arcs) {
      const double lo = arc.theta_lo.radians(), hi = arc.theta_hi.radians();
      constexpr int n = 240;
      for (int i = 0; i < n; ++i) {
        const double t = lo + (hi - lo) * (i + 0.5) / n;
        double e = arc.eta_at(t);
        if (spec.sheared) e -= kPi;
        double th = t;
        while (th >= kPi) th -= 2 * kPi;
        while (th < -kPi) th += 2 * kPi;
        cv.dot(th, e, 1.0, "fill=\"#b7950b\"");
      }
    }
  }
  if (spec.path || spec.interior || spec.sheared) {
    const auto sched = make_schedule(*spec.a, *spec.b);
    if (spec.path && !spec.sheared) draw_path(cv, sched.path);
    if (spec.interior && !spec.sheared) draw_path(cv, sched.interior);
    if (spec.sheared) {
      draw_path(cv, sched.sheared);
      const auto& bp = sched.g2.breakpoints();
      for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        cv.line(bp[i].first.radians(), bp[i].second.radians(), bp[i + 1].first.radians(),
                bp[i + 1].second.radians(), "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2 2\"");
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace su2cyc
