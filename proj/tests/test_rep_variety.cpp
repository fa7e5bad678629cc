#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>

#include "su2cyc/alexander.hpp"
#include "su2cyc/error.hpp"
#include "su2cyc/rep_variety.hpp"

using namespace su2cyc;

namespace {

RationalAngle A(std::int64_t n, std::int64_t d = 1) { return RationalAngle(n, d); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::complex<double> eval(const IntPolynomial& p, std::complex<double> t) {
  std::complex<double> acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + static_cast<double>(*it);
  return acc;
}

// Alexander polynomial of T(p,q): (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by long division here.
IntPolynomial torus_alexander_oracle(std::int64_t p, std::int64_t q) {
  auto xn_minus_1 = [](std::int64_t n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = -1;
    c.back() = 1;
    return c;
  };
  auto mul = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto div = [](std::vector<std::int64_t> n, const std::vector<std::int64_t>& d) {
    std::vector<std::int64_t> quo(n.size() - d.size() + 1, 0);
    for (std::size_t i = quo.size(); i-- > 0;) {
      quo[i] = n[i + d.size() - 1] / d.back();
      for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= quo[i] * d[j];
    }
    for (auto v : n) REQUIRE(v == 0);
    return quo;
  };
  const auto num = mul(xn_minus_1(p * q), xn_minus_1(1));
  const auto den = mul(xn_minus_1(p), xn_minus_1(q));
  return IntPolynomial(div(num, den));
}

PillowArcSet single_arc(std::int64_t c, RationalAngle off, RationalAngle lo, RationalAngle hi) {
  PillowArcSet s;
  ExactArc a;
  a.c_theta = c;
  a.offset = off;
  a.theta_lo = lo;
  a.theta_hi = hi;
  s.exact_arcs.push_back(a);
  return s;
}

}  // namespace

TEST_CASE("trefoil arcs") {
  const auto arcs = torus_knot_arcs(2, 3);
  REQUIRE(arcs.exact_arcs.size() == 2);
  const auto& a = arcs.exact_arcs[0];
  CHECK(a.c_theta == 6);
  CHECK(a.c_eta == 1);
  CHECK(a.offset == A(1));
  CHECK(a.theta_lo == A(1, 6));
  CHECK(a.theta_hi == A(5, 6));
  CHECK(a.eta_at(A(1, 2)) == A(0));  // pi - 3 pi = -2pi
  CHECK(a.eta_at(A(1, 3)) == A(1));
  const auto& b = arcs.exact_arcs[1];
  CHECK(b.theta_lo == A(-5, 6));
  CHECK(b.theta_hi == A(-1, 6));
  CHECK(arcs.provenance == Provenance::Exact);
}

TEST_CASE("degenerate and invalid torus knots") {
  CHECK(torus_knot_arcs(1, 5).empty());
  CHECK(torus_knot_arcs(4, 1).empty());
  CHECK(code_of([] { torus_knot_arcs(2, 4); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { torus_knot_arcs(0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { torus_knot_presentation(3, 6); }) == ErrorCode::NotCoprime);
}

TEST_CASE("T(2,5) arcs: slope -10, endpoints odd multiples of pi/10") {
  const auto arcs = torus_knot_arcs(2, 5);
  CHECK_FALSE(arcs.exact_arcs.empty());
  for (const auto& a : arcs.exact_arcs) {
    CHECK(a.c_theta == 10);
    for (const auto& e : {a.theta_lo, a.theta_hi}) {
      const Rational m = e.multiple() * Rational(10);
      REQUIRE(m.denominator() == 1);
      CHECK(m.numerator() % 2 != 0);
    }
  }
}

TEST_CASE("property: arc endpoints are roots of the Alexander polynomial") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {2, 7}, {3, 5}, {4, 5}, {3, 7}}) {
    const auto delta = torus_alexander_oracle(p, q);
    CHECK(torus_knot_alexander(p, q) == delta);
    const auto arcs = torus_knot_arcs(p, q);
    CHECK_FALSE(arcs.exact_arcs.empty());
    for (const auto& a : arcs.exact_arcs)
      for (const auto& e : {a.theta_lo, a.theta_hi}) {
        const auto z = std::polar(1.0, 2 * e.radians());
        CHECK(std::abs(eval(delta, z)) < 1e-9);
        CHECK(touchpoint_root_check(e, delta));
        // the arc meets the reducible circle at its endpoints
        CHECK(a.eta_at(e).is_multiple_of_two_pi());
      }
  }
}

TEST_CASE("presentations") {
  const auto g = torus_knot_presentation(2, 3);
  CHECK(g.generator_count == 2);
  REQUIRE(g.relators.size() == 1);
  CHECK(g.relators[0] == Word{1, 1, -2, -2, -2});
  CHECK_NOTHROW(g.validate());
  auto bad = g;
  bad.meridian = {1, -1};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::SchemaError);
  bad = g;
  bad.relators[0].push_back(3);
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::SchemaError);
  CHECK(reduce_word({1, 2, -2, -1, 2}) == Word{2});
}

TEST_CASE("sampler matches exact arcs") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(q);
    SampleOptions opt;
    opt.grid = 64;
    const auto cloud = sample_reps(torus_knot_presentation(p, q), opt);
    CHECK(cloud.provenance == Provenance::Sampled);
    CHECK(cloud.samples.size() > 50);
    const auto cmp = compare_cloud(cloud, torus_knot_arcs(p, q));
    CHECK(cmp.max_distance < 1e-6);
    CHECK(cmp.max_coverage_gap < 3 * cloud.resolution);
    for (const auto& s : cloud.samples) {
      CHECK(s.theta >= 0);
      CHECK(s.theta < 2 * std::numbers::pi);
      CHECK(s.eta >= 0);
      CHECK(s.eta < 2 * std::numbers::pi);
    }
  }
}

TEST_CASE("sampler: mirror, determinism, errors") {
  SampleOptions opt;
  opt.grid = 24;
  const auto pres = torus_knot_presentation(2, 3);
  const auto one = sample_reps(pres, [&] { auto o = opt; o.threads = 1; return o; }());
  const auto three = sample_reps(pres, [&] { auto o = opt; o.threads = 3; return o; }());
  CHECK(one.samples == three.samples);

  auto mopt = opt;
  mopt.mirror = true;
  const auto mirrored = sample_reps(pres, mopt);
  CHECK(compare_cloud(mirrored, torus_knot_arcs(2, 3, true)).max_distance < 1e-6);

  // commuting generators: only abelian solutions
  GroupPresentation abel;
  abel.relators = {{1, 2, -1, -2}};
  abel.meridian = {1};
  abel.longitude = {2};
  CHECK(sample_reps(abel, opt).samples.empty());

  // a "longitude" that is not peripheral
  auto wrong = pres;
  wrong.longitude = {2};
  CHECK(code_of([&] { sample_reps(wrong, opt); }) == ErrorCode::NonCommutingPeripheral);

  CHECK(code_of([&] { auto o = opt; o.grid = 4; sample_reps(pres, o); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { auto o = opt; o.tol = 0; sample_reps(pres, o); }) == ErrorCode::InvalidArgument);
  GroupPresentation none;
  none.meridian = {1};
  CHECK(code_of([&] { sample_reps(none, opt); }) == ErrorCode::NoSolutions);
}

TEST_CASE("obstruct on the trefoil") {
  const auto arcs = torus_knot_arcs(2, 3);
  for (const auto& s : {Slope{5, 1}, Slope{7, 1}, Slope{11, 2}, Slope{13, 2}}) {
    CAPTURE(s.to_string());
    CHECK(obstruct(arcs, ObstructionSet::SHat(s)).empty);
    CHECK(obstruct(arcs, ObstructionSet::S(s)).empty);
  }
  const auto one = obstruct(arcs, ObstructionSet::S(Slope{1, 1}));
  CHECK_FALSE(one.empty);
  std::set<RationalAngle> thetas;
  for (const auto& w : one.witnesses) {
    REQUIRE(w.exact.has_value());
    thetas.insert(abs(w.exact->theta));
    CHECK_FALSE(w.entire_arc);
    CHECK_FALSE(w.exact->eta.is_multiple_of_two_pi());
  }
  CHECK(thetas == std::set<RationalAngle>{A(1, 5), A(2, 5), A(3, 5), A(4, 5)});

  const auto six = obstruct(arcs, ObstructionSet::SHat(Slope{6, 1}));
  CHECK_FALSE(six.empty);
  REQUIRE_FALSE(six.witnesses.empty());
  for (const auto& w : six.witnesses) CHECK(w.entire_arc);
}

TEST_CASE("property: exact obstruct agrees with a dense scan") {
  // witnesses exist iff some arc point off eta in 2piZ has p theta + q eta in m pi Z
  const double pi = std::numbers::pi;
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}})
    for (std::int64_t sp = -12; sp <= 12; ++sp)
      for (std::int64_t sq = 1; sq <= 3; ++sq) {
        if (sp == 0 || std::gcd(sp, sq) != 1) continue;
        const auto arcs = torus_knot_arcs(p, q);
        const Slope s{sp, sq};
        for (const auto& set : {ObstructionSet::S(s), ObstructionSet::SHat(s)}) {
          const auto res = obstruct(arcs, set);
          const double m = static_cast<double>(set.modulus()) * pi;
          bool scan_hit = false;
          for (const auto& a : arcs.exact_arcs) {
            const double lo = a.theta_lo.radians(), hi = a.theta_hi.radians();
            const int n = 20000;
            double prev = 0;
            for (int i = 0; i <= n; ++i) {
              const double th = lo + (hi - lo) * i / n;
              // unwrapped eta keeps the level continuous along the arc
              const double eta = a.offset.radians() - static_cast<double>(a.c_theta) * th;
              const double level = static_cast<double>(sp) * th + static_cast<double>(sq) * eta;
              const double r = std::remainder(level, m);
              const double off_axis = std::abs(std::remainder(eta, 2 * pi));
              if (i > 0 && off_axis > 0.05 && (std::abs(r) < 1e-12 || ((r > 0) != (prev > 0) && std::abs(r - prev) < m / 2)))
                scan_hit = true;
              prev = r;
            }
            // a constant level on the lattice counts as a hit too
            const double mid = 0.5 * (lo + hi);
            const double lev = static_cast<double>(sp) * mid + static_cast<double>(sq) * (a.offset.radians() - static_cast<double>(a.c_theta) * mid);
            if (sp == sq * a.c_theta && std::abs(std::remainder(lev, m)) < 1e-9) scan_hit = true;
          }
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(set.to_string());
          CHECK(res.empty == !scan_hit);
        }
      }
}

TEST_CASE("obstruct on a sampled cloud") {
  SampleOptions opt;
  opt.grid = 32;
  const auto cloud = sample_reps(torus_knot_presentation(2, 3), opt);
  CHECK(obstruct(cloud, ObstructionSet::SHat(Slope{6, 1}), 1e-6).witnesses.size() == cloud.samples.size());
  CHECK(obstruct(cloud, ObstructionSet::SHat(Slope{5, 1}), 1e-6).empty);
}

TEST_CASE("axioms") {
  const auto rep = pillowcase_axioms_check(torus_knot_arcs(2, 3));
  CHECK(rep.all_pass());
  CHECK(rep.closed.vacuous);
  REQUIRE(rep.collar_exact.has_value());
  CHECK(*rep.collar_exact == A(1, 6));
  CHECK_FALSE(rep.collar_is_estimate);

  auto shifted = torus_knot_arcs(2, 3);
  shifted.exact_arcs[0].offset = (shifted.exact_arcs[0].offset + A(1, 2)).mod_two_pi();
  const auto bad = pillowcase_axioms_check(shifted);
  CHECK_FALSE(bad.translation.pass);
  CHECK_FALSE(bad.all_pass());

  const auto empty = pillowcase_axioms_check(PillowArcSet{});
  CHECK(empty.all_pass());
  CHECK(empty.translation.vacuous);

  // an arc crossing theta = 0 off the reducible circle breaks the axis axiom
  const auto axis = pillowcase_axioms_check(single_arc(2, A(1), A(-1, 4), A(1, 4)));
  CHECK_FALSE(axis.axis.pass);

  for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}}) CHECK(pillowcase_axioms_check(torus_knot_arcs(p, q)).all_pass());

  SampleOptions opt;
  opt.grid = 32;
  const auto cloud_rep = pillowcase_axioms_check(sample_reps(torus_knot_presentation(2, 3), opt));
  CHECK(cloud_rep.all_pass());
  CHECK(cloud_rep.collar_is_estimate);
  CHECK(cloud_rep.collar_width > 0);
  CHECK(cloud_rep.collar_width <= std::numbers::pi / 6 + 0.1);
}

TEST_CASE("distance to arcs") {
  const auto arcs = torus_knot_arcs(2, 3);
  const auto& a = arcs.exact_arcs[0];
  const double th = A(1, 3).radians();
  CHECK(distance_to_arc(th, a.eta_at(th), a) == doctest::Approx(0).epsilon(1e-12));
  CHECK(distance_to_arc(th, a.eta_at(th) + 0.01, a) > 0);
}
