#include "su2cyc/slope.hpp"

#include "su2cyc/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace su2cyc {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

bool is_odd(std::int64_t v) { return v % 2 != 0; }

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational Slope::value() const {
  if (q == 0) throw Error(ErrorCode::InvalidSlope, "1/0 has no rational value");
  return Rational(p, q);
}

std::string Slope::to_string() const {
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

Slope normalize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::ZeroSlopePair, "(0,0) is not a slope");
  if (q == 0) return Slope{1, 0};
  const auto g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

Slope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return normalize(parse_int(text), 1);
  return normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t distance(const Slope& a, const Slope& b) { return iabs(a.p * b.q - b.p * a.q); }

GapWidths gap_widths(const Slope& a, const Slope& b) {
  const auto delta = distance(a, b);
  if (delta == 0) throw Error(ErrorCode::EqualSlopes, a.to_string() + " and " + b.to_string());
  // the gap along S(a) doubles when the other family has even numerator
  const std::int64_t m1 = is_odd(b.p) ? 1 : 2;
  const std::int64_t m2 = is_odd(a.p) ? 1 : 2;
  return {RationalAngle(m1 * iabs(a.p), delta), RationalAngle(m2 * iabs(b.p), delta)};
}

const char* to_string(GapSumClass c) {
  switch (c) {
    case GapSumClass::LessThan2Pi: return "LessThan2Pi";
    case GapSumClass::Exactly2Pi: return "Exactly2Pi";
    case GapSumClass::GreaterThan2Pi: return "GreaterThan2Pi";
    case GapSumClass::NotApplicable: return "NotApplicable";
  }
  return "?";
}

PairVerdict pair_verdict(const Slope& a, const Slope& b) {
  PairVerdict v;
  v.delta = distance(a, b);
  if (v.delta == 0) return v;

  const auto gaps = gap_widths(a, b);
  v.d1 = gaps.d1;
  v.d2 = gaps.d2;
  const auto sum = gaps.d1 + gaps.d2;
  if (sum < RationalAngle::two_pi()) v.gap_sum_class = GapSumClass::LessThan2Pi;
  else if (sum == RationalAngle::two_pi()) v.gap_sum_class = GapSumClass::Exactly2Pi;
  else v.gap_sum_class = GapSumClass::GreaterThan2Pi;

  const auto abs1 = iabs(a.p);
  const auto abs2 = iabs(b.p);
  const auto delta = v.delta;
  v.su2_bound_ok = delta <= abs1 + abs2;
  v.so3_bound_ok = 2 * delta <= abs1 + abs2;

  bool ok = true;
  if (is_odd(a.p)) ok = ok && 2 * delta <= 2 * abs1 + abs2;
  if (is_odd(b.p)) ok = ok && 2 * delta <= abs1 + 2 * abs2;
  if (is_odd(a.p) && is_odd(b.p)) ok = ok && 2 * delta <= abs1 + abs2;
  v.odd_pair_ok = ok;

  if (a.is_infinite() || b.is_infinite()) {
    // the trivial surgery carries no sign; the corollary is vacuous there
    v.sign_rule_ok = true;
    v.so3_sign_rule_ok = true;
  } else {
    // sign(r1 r2) = sign(p1 p2) since q > 0
    const bool positive = (a.p > 0 && b.p > 0) || (a.p < 0 && b.p < 0);
    v.so3_sign_rule_ok = positive;
    v.sign_rule_ok = positive || (a.is_even_integer() && b.is_even_integer());
  }
  return v;
}

bool km_filter(const Slope& s) {
  if (s.is_infinite()) return false;
  return iabs(s.p) <= 2 * s.q;
}

bool lift_applicable(const Slope& s) { return is_odd(s.p); }

const char* to_string(CyclicMode m) { return m == CyclicMode::SU2 ? "su2" : "so3"; }

CyclicMode parse_mode(std::string_view text) {
  if (text == "su2" || text == "SU2") return CyclicMode::SU2;
  if (text == "so3" || text == "SO3") return CyclicMode::SO3;
  throw Error(ErrorCode::ParseError, "mode must be su2 or so3, got '" + std::string(text) + "'");
}

std::vector<Slope> compatible_slopes(const Slope& s0, CyclicMode mode, std::int64_t q_max,
                                     std::int64_t p_max) {
  if (q_max < 1 || p_max < 1)
    throw Error(ErrorCode::InvalidArgument, "q_max and p_max must be positive");
  std::vector<Slope> out;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t p = -p_max; p <= p_max; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Slope s{p, q};
      if (km_filter(s)) continue;
      const auto delta = distance(s0, s);
      const auto bound = iabs(s0.p) + iabs(p);
      const bool ok = mode == CyclicMode::SU2 ? delta <= bound : 2 * delta <= bound;
      if (ok) out.push_back(s);
    }
  }
  return out;
}

}  // namespace su2cyc
