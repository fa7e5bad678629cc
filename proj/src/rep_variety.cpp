#include "su2cyc/rep_variety.hpp"

#include "su2cyc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace su2cyc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

// distance from x to the nearest multiple of period
double dist_to_multiple(double x, double period) {
  const double r = std::fmod(std::abs(x), period);
  return std::min(r, period - r);
}

struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat conj() const { return {w, -x, -y, -z}; }
  double vec_norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// norm of the commutator AB - BA for unit quaternions: 2 |v_A x v_B|
double commutator_norm(const Quat& a, const Quat& b) {
  const double cx = a.y * b.z - a.z * b.y;
  const double cy = a.z * b.x - a.x * b.z;
  const double cz = a.x * b.y - a.y * b.x;
  return 2.0 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

struct Generators {
  Quat X, Y;
  std::array<Quat, 3> dX, dY;  // derivatives in (alpha, beta, gamma)

  explicit Generators(const Eigen::Vector3d& v) {
    const double a = v[0], b = v[1], g = v[2];
    X = {std::cos(a), std::sin(a), 0, 0};
    Y = {std::cos(b), std::sin(b) * std::cos(g), std::sin(b) * std::sin(g), 0};
    dX = {Quat{-std::sin(a), std::cos(a), 0, 0}, Quat{0, 0, 0, 0}, Quat{0, 0, 0, 0}};
    dY = {Quat{0, 0, 0, 0},
          Quat{-std::sin(b), std::cos(b) * std::cos(g), std::cos(b) * std::sin(g), 0},
          Quat{0, -std::sin(b) * std::sin(g), std::sin(b) * std::cos(g), 0}};
  }

  Quat letter(int l) const {
    const Quat& g = std::abs(l) == 1 ? X : Y;
    return l > 0 ? g : g.conj();
  }
  Quat dletter(int l, int k) const {
    const Quat& g = std::abs(l) == 1 ? dX[k] : dY[k];
    return l > 0 ? g : g.conj();
  }

  Quat eval(const Word& w) const {
    Quat r;
    for (int l : w) r = r * letter(l);
    return r;
  }
};

struct Residual {
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  double norm2 = 0;
};

Residual residual(const std::vector<Word>& relators, const Eigen::Vector3d& v, bool with_jacobian) {
  const Generators G(v);
  const auto n = static_cast<Eigen::Index>(relators.size());
  Residual out;
  out.r.resize(4 * n);
  if (with_jacobian) out.J.setZero(4 * n, 3);
  const double s = std::sqrt(2.0);  // quaternion norm -> Frobenius norm of the 2x2 matrix
  for (Eigen::Index i = 0; i < n; ++i) {
    const Word& w = relators[static_cast<std::size_t>(i)];
    std::vector<Quat> prefix(w.size() + 1), suffix(w.size() + 1);
    for (std::size_t k = 0; k < w.size(); ++k) prefix[k + 1] = prefix[k] * G.letter(w[k]);
    for (std::size_t k = w.size(); k-- > 0;) suffix[k] = G.letter(w[k]) * suffix[k + 1];
    const Quat W = prefix.back();
    out.r.segment<4>(4 * i) << s * (W.w - 1.0), s * W.x, s * W.y, s * W.z;
    if (!with_jacobian) continue;
    for (int p = 0; p < 3; ++p) {
      Quat d{0, 0, 0, 0};
      for (std::size_t k = 0; k < w.size(); ++k)
        d = d + prefix[k] * G.dletter(w[k], p) * suffix[k + 1];
      out.J.block<4, 1>(4 * i, p) << s * d.w, s * d.x, s * d.y, s * d.z;
    }
  }
  out.norm2 = out.r.squaredNorm();
  return out;
}

// Minimal-norm Gauss-Newton with backtracking. With free_gamma false the axis angle stays put;
// letting it move from a rough seed tends to collapse Y onto the axis of X (abelian reps).
void gauss_newton(const std::vector<Word>& relators, Eigen::Vector3d& v, Residual& cur, bool free_gamma,
                  int max_iter) {
  for (int iter = 0; iter < max_iter && cur.norm2 > 1e-28; ++iter) {
    if (!free_gamma) cur.J.col(2).setZero();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(cur.J);
    cod.setThreshold(1e-10);
    const Eigen::Vector3d step = cod.solve(-cur.r);
    if (step.norm() < 1e-16) break;
    double t = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 30; ++ls, t *= 0.5) {
      const Eigen::Vector3d trial = v + t * step;
      const Residual r = residual(relators, trial, false);
      if (r.norm2 < cur.norm2) {
        v = trial;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    cur = residual(relators, v, true);
  }
}

Eigen::Vector3d refine(const std::vector<Word>& relators, Eigen::Vector3d v, double& norm2) {
  Residual cur = residual(relators, v, true);
  gauss_newton(relators, v, cur, false, 60);
  gauss_newton(relators, v, cur, true, 10);
  norm2 = cur.norm2;
  return v;
}

struct SeedResult {
  bool kept = false;
  bool bad_peripheral = false;
  SamplePoint a, b;
};

std::int64_t inverse_mod(std::int64_t q, std::int64_t p) {
  for (std::int64_t a = 0; a < p; ++a)
    if (((a * q) % p + p) % p == 1 % p) return a;
  throw Error(ErrorCode::NotCoprime, std::to_string(q) + " has no inverse mod " + std::to_string(p));
}

// arccos(cos x) for x a rational multiple of pi
RationalAngle fold(const RationalAngle& x) { return abs(x.centered()); }

struct LineKey {
  std::int64_t c;
  RationalAngle offset;
  friend bool operator<(const LineKey& a, const LineKey& b) {
    if (a.c != b.c) return a.c < b.c;
    return a.offset < b.offset;
  }
  friend bool operator==(const LineKey&, const LineKey&) = default;
};

using Intervals = std::vector<std::pair<RationalAngle, RationalAngle>>;

// Arc in the form eta ≡ offset - c theta.
std::pair<std::int64_t, RationalAngle> normal_form(const ExactArc& a) {
  if (a.c_eta == 1) return {a.c_theta, a.offset.mod_two_pi()};
  return {-a.c_theta, (-a.offset).mod_two_pi()};
}

// Union of closed arcs per line, theta folded into [-pi, pi).
std::map<LineKey, Intervals> canonical(const std::vector<ExactArc>& arcs) {
  std::map<LineKey, Intervals> raw;
  for (const auto& a : arcs) {
    const auto [c, off] = normal_form(a);
    auto& iv = raw[LineKey{c, off}];
    if (a.theta_hi - a.theta_lo >= RationalAngle::two_pi()) {
      iv.emplace_back(RationalAngle(-1), RationalAngle(1));
      continue;
    }
    const auto lo = a.theta_lo.centered();
    const auto hi = lo + (a.theta_hi - a.theta_lo);
    if (hi <= RationalAngle(1)) {
      iv.emplace_back(lo, hi);
    } else {
      iv.emplace_back(lo, RationalAngle(1));
      iv.emplace_back(RationalAngle(-1), hi - RationalAngle::two_pi());
    }
  }
  for (auto& [key, iv] : raw) {
    std::sort(iv.begin(), iv.end());
    Intervals merged;
    for (const auto& x : iv) {
      if (!merged.empty() && x.first <= merged.back().second)
        merged.back().second = max(merged.back().second, x.second);
      else
        merged.push_back(x);
    }
    iv = std::move(merged);
  }
  return raw;
}

}  // namespace

RationalAngle ExactArc::eta_at(const RationalAngle& theta) const {
  const auto [c, off] = normal_form(*this);
  return (off - theta * Rational(c)).mod_two_pi();
}

double ExactArc::eta_at(double theta) const {
  const auto [c, off] = normal_form(*this);
  return wrap_two_pi(off.radians() - static_cast<double>(c) * theta);
}

const char* to_string(Provenance p) { return p == Provenance::Exact ? "Exact" : "Sampled"; }

PillowArcSet torus_knot_arcs(std::int64_t p, std::int64_t q, bool mirror) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "torus knot parameters must be positive");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + ", " + std::to_string(q));
  PillowArcSet out;
  out.provenance = Provenance::Exact;
  if (p == 1 || q == 1) return out;
  const auto a = inverse_mod(q, p);
  const auto b = (1 - a * q) / p;
  for (std::int64_t k = 1; k < p; ++k) {
    for (std::int64_t j = 1; j < q; ++j) {
      if ((k - j) % 2 != 0) continue;
      const RationalAngle A(a * k, p);
      const RationalAngle B(b * j, q);
      const auto e1 = fold(A - B);
      const auto e2 = fold(A + B);
      if (e1 == e2) continue;
      ExactArc arc;
      arc.c_theta = mirror ? -p * q : p * q;
      arc.offset = RationalAngle(mirror ? -k : k).mod_two_pi();
      arc.theta_lo = min(e1, e2);
      arc.theta_hi = max(e1, e2);
      out.exact_arcs.push_back(arc);
      ExactArc neg = arc;
      neg.theta_lo = -arc.theta_hi;
      neg.theta_hi = -arc.theta_lo;
      out.exact_arcs.push_back(neg);
    }
  }
  return out;
}

Word reduce_word(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void GroupPresentation::validate() const {
  if (generator_count != 2) throw Error(ErrorCode::SchemaError, "exactly two generators are supported");
  auto check = [](const Word& w, const std::string& what) {
    for (int l : w)
      if (l != 1 && l != -1 && l != 2 && l != -2)
        throw Error(ErrorCode::SchemaError, what + ": letter " + std::to_string(l) + " is not +-1 or +-2");
    if (reduce_word(w) != w) throw Error(ErrorCode::SchemaError, what + " is not reduced");
  };
  for (std::size_t i = 0; i < relators.size(); ++i) check(relators[i], "relator " + std::to_string(i));
  check(meridian, "meridian");
  check(longitude, "longitude");
}

GroupPresentation torus_knot_presentation(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::InvalidArgument, "need p, q >= 2");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + ", " + std::to_string(q));
  const auto a = inverse_mod(q, p);
  const auto b = (1 - a * q) / p;
  GroupPresentation g;
  Word rel(static_cast<std::size_t>(p), 1);
  rel.insert(rel.end(), static_cast<std::size_t>(q), -2);
  g.relators.push_back(rel);
  Word m(static_cast<std::size_t>(a), 1);
  m.insert(m.end(), static_cast<std::size_t>(b < 0 ? -b : b), b < 0 ? -2 : 2);
  g.meridian = reduce_word(m);
  Word m_inv;
  for (auto it = g.meridian.rbegin(); it != g.meridian.rend(); ++it) m_inv.push_back(-*it);
  Word l(static_cast<std::size_t>(p), 1);
  for (std::int64_t i = 0; i < p * q; ++i) l.insert(l.end(), m_inv.begin(), m_inv.end());
  g.longitude = reduce_word(l);
  return g;
}

PillowArcSet sample_reps(const GroupPresentation& pres, const SampleOptions& options) {
  pres.validate();
  if (pres.relators.empty()) throw Error(ErrorCode::NoSolutions, "presentation has no relators");
  if (options.grid < 8) throw Error(ErrorCode::InvalidArgument, "grid must be at least 8");
  if (!(options.tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");

  const auto n = static_cast<std::size_t>(options.grid);
  const std::size_t total = n * n * n;
  std::vector<SeedResult> results(total);
  const double h = kPi / static_cast<double>(n);
  // exact solutions commute to ~1e-12; anything far above means the peripheral words are wrong
  constexpr double kPeripheralTol = 1e-6;

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const std::size_t i = s / (n * n), j = (s / n) % n, k = s % n;
      Eigen::Vector3d v((i + 0.5) * h, (j + 0.5) * h, (k + 0.5) * h);
      double norm2 = 0;
      v = refine(pres.relators, v, norm2);
      if (!(norm2 < options.tol)) continue;
      const Generators G(v);
      if (commutator_norm(G.X, G.Y) < options.reducible) continue;
      const Quat M = G.eval(pres.meridian);
      const Quat L = G.eval(pres.longitude);
      auto& out = results[s];
      if (commutator_norm(M, L) > kPeripheralTol) {
        out.bad_peripheral = true;
        continue;
      }
      const double vm = M.vec_norm();
      if (vm < 1e-12) continue;
      const double theta = std::acos(std::clamp(M.w, -1.0, 1.0));
      const double proj = (L.x * M.x + L.y * M.y + L.z * M.z) / vm;
      double eta = std::atan2(proj, L.w);
      if (options.mirror) eta = -eta;
      out.kept = true;
      out.a = {wrap_two_pi(theta), wrap_two_pi(eta)};
      out.b = {wrap_two_pi(-theta), wrap_two_pi(-eta)};
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<std::thread> pool;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();

  PillowArcSet out;
  out.provenance = Provenance::Sampled;
  out.tolerance = options.tol;
  out.resolution = h;
  for (const auto& r : results) {
    if (r.bad_peripheral)
      throw Error(ErrorCode::NonCommutingPeripheral, "meridian and longitude images do not commute");
    if (!r.kept) continue;
    out.samples.push_back(r.a);
    out.samples.push_back(r.b);
  }
  std::sort(out.samples.begin(), out.samples.end(), [](const SamplePoint& x, const SamplePoint& y) {
    return x.theta != y.theta ? x.theta < y.theta : x.eta < y.eta;
  });
  auto last = std::unique(out.samples.begin(), out.samples.end(),
                          [](const SamplePoint& x, const SamplePoint& y) {
                            return std::abs(x.theta - y.theta) < 1e-12 && std::abs(x.eta - y.eta) < 1e-12;
                          });
  out.samples.erase(last, out.samples.end());
  return out;
}

ObstructionResult obstruct(const PillowArcSet& arcs, const ObstructionSet& set, double tol) {
  ObstructionResult res;
  const auto p = set.slope().p;
  const auto q = set.slope().q;
  const auto m = set.modulus();
  for (std::size_t idx = 0; idx < arcs.exact_arcs.size(); ++idx) {
    const auto& arc = arcs.exact_arcs[idx];
    const auto [c, off] = normal_form(arc);
    if (c == 0 && off.is_zero()) continue;  // arc lies in eta ≡ 0
    const auto coef = p - q * c;
    const Rational qoff = off.multiple() * q;
    if (coef == 0) {
      if (!is_integer(qoff / m)) continue;
      ObstructionWitness w;
      w.arc = idx;
      w.entire_arc = true;
      const RationalAngle mid = (arc.theta_lo + arc.theta_hi) / Rational(2);
      w.exact = PlanePoint{mid, arc.eta_at(mid)};
      w.theta = mid.radians();
      w.eta = w.exact->eta.radians();
      res.witnesses.push_back(w);
      continue;
    }
    // theta/pi = (m j - q off/pi) / coef
    Rational A = arc.theta_lo.multiple() * coef + qoff;
    Rational B = arc.theta_hi.multiple() * coef + qoff;
    if (A > B) std::swap(A, B);
    for (auto j = floor_of(A / m) + 1; j <= ceil_of(B / m) - 1; ++j) {
      const RationalAngle theta((Rational(m * j) - qoff) / coef);
      const auto eta = arc.eta_at(theta);
      if (eta.is_multiple_of_two_pi()) continue;
      ObstructionWitness w;
      w.arc = idx;
      w.exact = PlanePoint{theta, eta};
      w.theta = theta.radians();
      w.eta = eta.radians();
      res.witnesses.push_back(w);
    }
  }
  const double norm = std::hypot(static_cast<double>(p), static_cast<double>(q));
  for (const auto& s : arcs.samples) {
    if (dist_to_multiple(s.eta, kTwoPi) < tol) continue;
    const double level = (static_cast<double>(p) * s.theta + static_cast<double>(q) * s.eta) /
                         (static_cast<double>(m) * kPi);
    const double off = std::abs(level - std::round(level)) * static_cast<double>(m) * kPi / norm;
    if (off < tol) {
      ObstructionWitness w;
      w.theta = s.theta;
      w.eta = s.eta;
      res.witnesses.push_back(w);
    }
  }
  res.empty = res.witnesses.empty();
  return res;
}

AxiomsReport pillowcase_axioms_check(const PillowArcSet& arcs) {
  AxiomsReport rep;
  if (arcs.empty()) {
    for (auto* c : {&rep.closed, &rep.translation, &rep.axis, &rep.collar}) {
      c->vacuous = true;
      c->details = "empty arc set";
    }
    return rep;
  }
  std::optional<RationalAngle> collar;
  if (!arcs.exact_arcs.empty()) {
    rep.closed.vacuous = true;
    rep.closed.details = "closure of finitely many exact arcs";

    std::vector<ExactArc> moved;
    for (const auto& a : arcs.exact_arcs) {
      ExactArc t = a;
      const auto [c, off] = normal_form(a);
      t.c_theta = c;
      t.c_eta = 1;
      t.offset = (off + RationalAngle::pi() * Rational(c)).mod_two_pi();
      t.theta_lo = a.theta_lo + RationalAngle::pi();
      t.theta_hi = a.theta_hi + RationalAngle::pi();
      moved.push_back(t);
    }
    rep.translation.pass = canonical(arcs.exact_arcs) == canonical(moved);
    if (!rep.translation.pass) rep.translation.details = "arc set changes under (pi, 0) translation";

    for (std::size_t i = 0; i < arcs.exact_arcs.size(); ++i) {
      const auto& a = arcs.exact_arcs[i];
      for (auto k = ceil_of(a.theta_lo.multiple()); k <= floor_of(a.theta_hi.multiple()); ++k) {
        const auto eta = a.eta_at(RationalAngle(k));
        if (!eta.is_multiple_of_two_pi()) {
          rep.axis.pass = false;
          rep.axis.details = "arc " + std::to_string(i) + " meets theta = " +
                             RationalAngle(k).to_string() + " at eta = " + eta.to_string();
        }
      }
      const auto k = floor_of(a.theta_lo.multiple());
      RationalAngle gap(0);
      if (a.theta_hi <= RationalAngle(k + 1))
        gap = min(a.theta_lo - RationalAngle(k), RationalAngle(k + 1) - a.theta_hi);
      collar = collar ? min(*collar, gap) : gap;
    }
    rep.collar_exact = collar;
    rep.collar_width = collar->radians();
    rep.collar.pass = collar->multiple() > Rational(0);
    rep.collar.details = "collar " + collar->to_string();
  }
  if (!arcs.samples.empty()) {
    const double axis_tol = 1e-6;
    bool finite = true;
    for (const auto& s : arcs.samples)
      if (!std::isfinite(s.theta) || !std::isfinite(s.eta)) finite = false;
    rep.closed.pass = rep.closed.pass && finite;
    rep.closed.vacuous = false;
    rep.closed.details = finite ? "finite bounded cloud" : "non-finite sample";

    // translation: every moved sample has a neighbour within three seed spacings
    const double radius = std::max(3.0 * arcs.resolution, 1e-6);
    const auto cells = static_cast<long>(std::max(1.0, std::floor(kTwoPi / radius)));
    const double cell = kTwoPi / static_cast<double>(cells);
    auto cell_of = [&](double v) {
      return std::min(cells - 1, static_cast<long>(std::floor(wrap_two_pi(v) / cell)));
    };
    std::unordered_map<long, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < arcs.samples.size(); ++i)
      grid[cell_of(arcs.samples[i].theta) * cells + cell_of(arcs.samples[i].eta)].push_back(i);
    std::size_t unmatched = 0;
    for (const auto& s : arcs.samples) {
      const double th = wrap_two_pi(s.theta + kPi);
      const long cx = cell_of(th), cy = cell_of(s.eta);
      bool found = false;
      for (long dx = -1; dx <= 1 && !found; ++dx) {
        for (long dy = -1; dy <= 1 && !found; ++dy) {
          const long key = ((cx + dx + cells) % cells) * cells + (cy + dy + cells) % cells;
          auto it = grid.find(key);
          if (it == grid.end()) continue;
          for (auto idx : it->second) {
            const auto& o = arcs.samples[idx];
            const double d = std::hypot(dist_to_multiple(o.theta - th, kTwoPi),
                                        dist_to_multiple(o.eta - s.eta, kTwoPi));
            if (d <= radius) {
              found = true;
              break;
            }
          }
        }
      }
      if (!found) ++unmatched;
    }
    if (unmatched) {
      rep.translation.pass = false;
      rep.translation.details = std::to_string(unmatched) + " samples lack a (pi, 0) partner";
    }

    double est = std::numeric_limits<double>::infinity();
    for (const auto& s : arcs.samples) {
      if (dist_to_multiple(s.eta, kTwoPi) <= axis_tol) continue;
      const double d = dist_to_multiple(s.theta, kPi);
      if (d < axis_tol) {
        rep.axis.pass = false;
        rep.axis.details = "sample on theta = k pi off eta = 2k' pi";
      }
      est = std::min(est, d);
    }
    if (std::isfinite(est)) {
      rep.collar_width = collar ? std::min(collar->radians(), est) : est;
      rep.collar_is_estimate = true;
      rep.collar.pass = rep.collar.pass && rep.collar_width > 0;
      rep.collar.details = "collar estimate " + std::to_string(rep.collar_width);
    }
  }
  return rep;
}

double distance_to_arc(double theta, double eta, const ExactArc& arc) {
  const auto [c, off] = normal_form(arc);
  const double x0 = arc.theta_lo.radians(), x1 = arc.theta_hi.radians();
  const double y0 = off.radians() - static_cast<double>(c) * x0;
  const double y1 = off.radians() - static_cast<double>(c) * x1;
  const double dx = x1 - x0, dy = y1 - y0;
  const double len2 = dx * dx + dy * dy;
  const double ylo = std::min(y0, y1), yhi = std::max(y0, y1);
  double best = std::numeric_limits<double>::infinity();
  for (int sx = -1; sx <= 1; ++sx) {
    const double px = wrap_two_pi(theta) + sx * kTwoPi;
    const double base = wrap_two_pi(eta);
    const auto n_lo = static_cast<long>(std::floor((ylo - base) / kTwoPi)) - 1;
    const auto n_hi = static_cast<long>(std::ceil((yhi - base) / kTwoPi)) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
      const double py = base + static_cast<double>(n) * kTwoPi;
      double t = ((px - x0) * dx + (py - y0) * dy) / len2;
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::hypot(px - x0 - t * dx, py - y0 - t * dy));
    }
  }
  return best;
}

CloudComparison compare_cloud(const PillowArcSet& sampled, const PillowArcSet& exact,
                              double match_tol) {
  CloudComparison cmp;
  std::vector<std::vector<double>> hits(exact.exact_arcs.size());
  for (const auto& s : sampled.samples) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < exact.exact_arcs.size(); ++i) {
      const auto& arc = exact.exact_arcs[i];
      const double d = distance_to_arc(s.theta, s.eta, arc);
      best = std::min(best, d);
      if (d < match_tol) {
        const double lo = arc.theta_lo.radians();
        double th = s.theta;
        while (th > lo + kPi) th -= kTwoPi;
        while (th < lo - kPi) th += kTwoPi;
        hits[i].push_back(th);
      }
    }
    cmp.max_distance = std::max(cmp.max_distance, best);
  }
  for (std::size_t i = 0; i < exact.exact_arcs.size(); ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end());
    double prev = exact.exact_arcs[i].theta_lo.radians();
    double gap = 0;
    for (double th : h) {
      gap = std::max(gap, th - prev);
      prev = std::max(prev, th);
    }
    gap = std::max(gap, exact.exact_arcs[i].theta_hi.radians() - prev);
    cmp.max_coverage_gap = std::max(cmp.max_coverage_gap, gap);
  }
  return cmp;
}

}  // namespace su2cyc
