#pragma once

#include "su2cyc/rational_angle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace su2cyc {

/// Reduced surgery coefficient p/q with q >= 0. The slope 1/0 is the trivial
/// surgery; the sign always lives in p.
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  bool is_infinite() const { return q == 0; }
  bool is_integer() const { return q == 1; }
  bool is_even_integer() const { return q == 1 && p % 2 == 0; }
  Rational value() const;  // undefined for 1/0
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
};

Slope normalize(std::int64_t p, std::int64_t q);

/// Parses "p/q", "p" or "1/0".
Slope parse_slope(std::string_view text);

/// |p_a q_b - p_b q_a|
std::int64_t distance(const Slope& a, const Slope& b);

struct GapWidths {
  RationalAngle d1;  // eta-gap between adjacent intersections along S(a)
  RationalAngle d2;  // same along S(b)
};

GapWidths gap_widths(const Slope& a, const Slope& b);

enum class GapSumClass { LessThan2Pi, Exactly2Pi, GreaterThan2Pi, NotApplicable };
const char* to_string(GapSumClass c);

struct PairVerdict {
  std::int64_t delta = 0;
  std::optional<RationalAngle> d1;  // empty when the slopes coincide
  std::optional<RationalAngle> d2;
  bool su2_bound_ok = true;   // delta <= |p1| + |p2|
  bool so3_bound_ok = true;   // 2 delta <= |p1| + |p2|
  bool odd_pair_ok = true;      // odd-numerator refinements
  bool sign_rule_ok = true;   // r1 r2 > 0 unless both even integers
  bool so3_sign_rule_ok = true;  // r1 r2 > 0
  GapSumClass gap_sum_class = GapSumClass::NotApplicable;
};

PairVerdict pair_verdict(const Slope& a, const Slope& b);

/// True when |r| <= 2, i.e. the slope can never be SU(2)-cyclic on a
/// nontrivial knot. The slope 1/0 is not filtered.
bool km_filter(const Slope& s);

/// True when p is odd: an SU(2)-cyclic slope is then SO(3)-cyclic as well.
bool lift_applicable(const Slope& s);

enum class CyclicMode { SU2, SO3 };
const char* to_string(CyclicMode m);
CyclicMode parse_mode(std::string_view text);

/// Slopes p/q with |p| <= p_max, 1 <= q <= q_max, gcd 1, not removed by
/// km_filter, and whose pair with s0 meets the bound of `mode`. Sorted by (q, p).
std::vector<Slope> compatible_slopes(const Slope& s0, CyclicMode mode, std::int64_t q_max,
                                     std::int64_t p_max);

}  // namespace su2cyc
