#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "su2cyc/audit.hpp"
#include "su2cyc/error.hpp"
#include "su2cyc/slope.hpp"

using namespace su2cyc;

namespace {

Slope random_slope(std::mt19937_64& rng, int p_max = 40, int q_max = 6) {
  std::uniform_int_distribution<int> P(-p_max, p_max), Q(1, q_max);
  for (;;) {
    const int p = P(rng), q = Q(rng);
    if (p == 0 || std::gcd(p, q) != 1) continue;
    return normalize(p, q);
  }
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize(37, 2) == Slope{37, 2});
  CHECK(normalize(-6, -2) == Slope{3, 1});
  CHECK(normalize(5, 0) == Slope{1, 0});
  CHECK(normalize(-5, 0) == Slope{1, 0});
  CHECK(normalize(4, -6) == Slope{-2, 3});
  CHECK_THROWS_AS(normalize(0, 0), Error);
  try {
    normalize(0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroSlopePair);
  }
}

TEST_CASE("parse_slope") {
  CHECK(parse_slope("37/2") == Slope{37, 2});
  CHECK(parse_slope("-3") == Slope{-3, 1});
  CHECK(parse_slope("1/0") == Slope{1, 0});
  CHECK(parse_slope(" 6/-4 ") == Slope{-3, 2});
  CHECK(parse_slope("7/3").to_string() == "7/3");
  CHECK(parse_slope("5").to_string() == "5");
  CHECK_THROWS_AS(parse_slope("x"), Error);
  CHECK_THROWS_AS(parse_slope("3/"), Error);
  CHECK_THROWS_AS(parse_slope("0/0"), Error);
}

TEST_CASE("distance") {
  CHECK(distance(Slope{18, 1}, Slope{37, 2}) == 1);
  CHECK(distance(Slope{-3, 1}, Slope{4, 1}) == 7);
  CHECK(distance(Slope{7, 3}, Slope{7, 3}) == 0);
  CHECK(distance(Slope{1, 0}, Slope{5, 3}) == 3);
}

TEST_CASE("gap widths") {
  auto g = gap_widths(Slope{-3, 1}, Slope{4, 1});
  CHECK(g.d1 == RationalAngle(6, 7));
  CHECK(g.d2 == RationalAngle(4, 7));
  g = gap_widths(Slope{7, 3}, Slope{5, 1});
  CHECK(g.d1 == RationalAngle(7, 8));
  CHECK(g.d2 == RationalAngle(5, 8));
  for (int k = 1; k <= 6; ++k) {
    g = gap_widths(Slope{2 * k, 1}, Slope{-2 * k, 1});
    CHECK(g.d1 == RationalAngle::pi());
    CHECK(g.d2 == RationalAngle::pi());
  }
  CHECK_THROWS_AS(gap_widths(Slope{3, 1}, Slope{3, 1}), Error);
}

TEST_CASE("pair verdict examples") {
  auto v = pair_verdict(Slope{18, 1}, Slope{37, 2});
  CHECK(v.delta == 1);
  CHECK(v.so3_bound_ok);
  CHECK(v.su2_bound_ok);

  v = pair_verdict(Slope{-3, 1}, Slope{5, 1});
  CHECK(v.delta == 8);
  CHECK_FALSE(v.odd_pair_ok);

  v = pair_verdict(Slope{-4, 1}, Slope{6, 1});
  CHECK(v.sign_rule_ok);
  CHECK_FALSE(v.so3_sign_rule_ok);

  v = pair_verdict(Slope{-3, 1}, Slope{4, 1});
  CHECK_FALSE(v.sign_rule_ok);
  CHECK(v.gap_sum_class == GapSumClass::LessThan2Pi);

  v = pair_verdict(Slope{4, 1}, Slope{-4, 1});
  CHECK(v.gap_sum_class == GapSumClass::Exactly2Pi);

  v = pair_verdict(Slope{7, 3}, Slope{7, 3});
  CHECK(v.delta == 0);
  CHECK_FALSE(v.d1.has_value());
  CHECK(v.gap_sum_class == GapSumClass::NotApplicable);
  CHECK(v.su2_bound_ok);
  CHECK(v.so3_bound_ok);
  CHECK(v.odd_pair_ok);
}

TEST_CASE("km filter and lift") {
  CHECK(km_filter(Slope{2, 1}));
  CHECK_FALSE(km_filter(Slope{37, 2}));
  CHECK(km_filter(Slope{-5, 3}));
  CHECK_FALSE(km_filter(Slope{1, 0}));
  CHECK_FALSE(km_filter(Slope{-3, 1}));
  CHECK(lift_applicable(Slope{19, 1}));
  CHECK_FALSE(lift_applicable(Slope{18, 1}));
  CHECK(lift_applicable(Slope{37, 2}));
}

TEST_CASE("compatible slopes") {
  const auto so3 = compatible_slopes(Slope{5, 1}, CyclicMode::SO3, 1, 20);
  CHECK_FALSE(so3.empty());
  for (const auto& s : so3) {
    CHECK(2 * std::abs(5 * s.q - s.p) <= 5 + std::abs(s.p));
    CHECK_FALSE(km_filter(s));
  }
  // brute force over the same grid
  std::size_t expected = 0;
  for (int p = -20; p <= 20; ++p)
    if (p != 0 && std::abs(p) > 2 && 2 * std::abs(5 - p) <= 5 + std::abs(p)) ++expected;
  CHECK(so3.size() == expected);

  const auto inf = compatible_slopes(Slope{1, 0}, CyclicMode::SU2, 4, 30);
  CHECK_FALSE(inf.empty());
  for (const auto& s : inf) CHECK(s.q <= 1 + std::abs(s.p));
  for (std::size_t i = 1; i < inf.size(); ++i) {
    const auto& a = inf[i - 1];
    const auto& b = inf[i];
    CHECK((a.q < b.q || (a.q == b.q && a.p < b.p)));
  }

  CHECK(compatible_slopes(Slope{5, 1}, CyclicMode::SU2, 3, 2).empty());
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("su2") == CyclicMode::SU2);
  CHECK(parse_mode("so3") == CyclicMode::SO3);
  CHECK_THROWS_AS(parse_mode("u1"), Error);
}

TEST_CASE("property: distance symmetric, zero iff equal") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_slope(rng), b = random_slope(rng);
    CHECK(distance(a, b) == distance(b, a));
    CHECK((distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("property: d1 * delta is pi|p1| or 2pi|p1| by parity of p2") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_slope(rng), b = random_slope(rng);
    if (a == b) continue;
    const auto g = gap_widths(a, b);
    const auto delta = distance(a, b);
    const Rational lhs1 = g.d1.multiple() * Rational(delta);
    const Rational lhs2 = g.d2.multiple() * Rational(delta);
    CHECK(lhs1 == Rational((b.p % 2 == 0 ? 2 : 1) * std::abs(a.p)));
    CHECK(lhs2 == Rational((a.p % 2 == 0 ? 2 : 1) * std::abs(b.p)));
  }
}

TEST_CASE("property: both-odd bound implies su2 bound") {
  std::mt19937_64 rng(13);
  int exercised = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_slope(rng), b = random_slope(rng);
    if (a == b || a.p % 2 == 0 || b.p % 2 == 0) continue;
    const auto v = pair_verdict(a, b);
    if (v.odd_pair_ok) {
      CHECK(v.su2_bound_ok);
      ++exercised;
    }
  }
  CHECK(exercised > 100);
}

TEST_CASE("property: gap-sum class matches the parity-selected inequality") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 5000; ++i) {
    const auto a = random_slope(rng), b = random_slope(rng);
    if (a == b) continue;
    const auto v = pair_verdict(a, b);
    const std::int64_t m1 = b.p % 2 == 0 ? 2 : 1;
    const std::int64_t m2 = a.p % 2 == 0 ? 2 : 1;
    const std::int64_t lhs = m1 * std::abs(a.p) + m2 * std::abs(b.p);  // in units of pi / delta
    const std::int64_t rhs = 2 * v.delta;
    const auto expected = lhs < rhs    ? GapSumClass::LessThan2Pi
                          : lhs == rhs ? GapSumClass::Exactly2Pi
                                       : GapSumClass::GreaterThan2Pi;
    CHECK(v.gap_sum_class == expected);
    // a gap sum below 2pi is the sharper obstruction and is always reported
    if (v.gap_sum_class == GapSumClass::LessThan2Pi && i % 10 == 0)
      CHECK(check_pair(a, b, CyclicMode::SU2).exit_code == 2);
  }
}
