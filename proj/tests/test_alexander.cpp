#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "su2cyc/alexander.hpp"
#include "su2cyc/audit.hpp"
#include "su2cyc/error.hpp"

using namespace su2cyc;

namespace {

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

// A primitive d-th root of unity is a root, checked numerically on every primitive root.
bool numeric_primitive_root(const IntPolynomial& p, std::int64_t d) {
  for (std::int64_t k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    const auto z = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    if (std::abs(eval(p, z)) < 1e-7) return true;
  }
  return false;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::int64_t phi_oracle(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::vector<KnotRecord> bundled() { return load_knot_table(std::string(SU2CYC_DATA_DIR) + "/knots_le10.json"); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, -1, 1};
  CHECK(a.degree() == 2);
  CHECK(a.eval(1) == 1);
  CHECK(a.eval(2) == 3);
  CHECK(a.is_palindromic());
  CHECK_FALSE(IntPolynomial({1, 2}).is_palindromic());
  CHECK(IntPolynomial({0, 0, -1, 1}).normalized() == IntPolynomial({-1, 1}));
  CHECK(IntPolynomial({1, 0, 0}).degree() == 0);
  CHECK(IntPolynomial().degree() == -1);
  CHECK(a * IntPolynomial{1, 1} == IntPolynomial({1, 0, 0, 1}));
  const auto dr = divide_monic(IntPolynomial({-1, 0, 0, 1}), IntPolynomial({-1, 1}));
  CHECK(dr.quotient == IntPolynomial({1, 1, 1}));
  CHECK(dr.remainder.is_zero());
  CHECK(divides(IntPolynomial({1, 1}), IntPolynomial({1, 0, 0, 1})));
  CHECK_FALSE(divides(IntPolynomial({1, 1}), IntPolynomial({1, 0, 1})));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 97}) CHECK(cyclotomic(p).eval(1) == p);
  CHECK(code_of([] { cyclotomic(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: deg Phi_d = phi(d), and the product over d | n is t^n - 1") {
  for (std::int64_t d = 1; d <= 200; ++d) {
    CHECK(euler_phi(d) == phi_oracle(d));
    CHECK(cyclotomic(d).degree() == phi_oracle(d));
  }
  for (std::int64_t n = 1; n <= 60; ++n) {
    IntPolynomial prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1});
  }
}

TEST_CASE("root of unity orders") {
  const IntPolynomial k818{1, -5, 10, -13, 10, -5, 1};
  CHECK(root_of_unity_orders(k818) == std::set<std::int64_t>{6});
  CHECK(root_of_unity_orders(IntPolynomial{1, -1, 1}) == std::set<std::int64_t>{6});
  CHECK(root_of_unity_orders(IntPolynomial{2, -3, 2}).empty());
  CHECK(has_dth_root(k818, 6));
  CHECK(has_dth_root(k818, 12));
  CHECK_FALSE(has_dth_root(k818, 9));
  CHECK(has_primitive_dth_root(k818, 6));
  CHECK_FALSE(has_primitive_dth_root(k818, 12));
}

TEST_CASE("property: exact orders agree with numeric roots on the bundled table") {
  for (const auto& k : bundled()) {
    CAPTURE(k.name);
    const auto orders = root_of_unity_orders(k.alexander);
    for (std::int64_t d = 1; d <= 60; ++d) CHECK((orders.count(d) == 1) == numeric_primitive_root(k.alexander, d));
  }
}

TEST_CASE("amphichiral candidates") {
  const IntPolynomial k818{1, -5, 10, -13, 10, -5, 1};
  CHECK(amphichiral_candidates(k818, 40) == std::vector<std::int64_t>{-36, -24, -12, 12, 24, 36});
  CHECK(amphichiral_candidates(IntPolynomial{1, -3, 1}, 100).empty());
  CHECK(code_of([] { amphichiral_candidates(IntPolynomial{1, 1, 1}, 10); }) == ErrorCode::NotAKnotPolynomial);
}

TEST_CASE("property: r = 2p for an odd prime p is never a candidate") {
  // Phi_p(1) = p while a knot polynomial is +-1 at t = 1
  for (const auto& k : bundled()) {
    const auto c = amphichiral_candidates(k.alexander, 200);
    for (auto r : c) {
      CHECK(r % 2 == 0);
      CHECK(std::abs(r) > 2);
      CHECK_FALSE(is_prime(std::abs(r) / 2));
    }
  }
}

TEST_CASE("touch point root check") {
  const IntPolynomial trefoil{1, -1, 1};
  CHECK(touchpoint_root_check(RationalAngle(1, 6), trefoil));   // exp(i pi/3)
  CHECK(touchpoint_root_check(RationalAngle(5, 6), trefoil));
  CHECK_FALSE(touchpoint_root_check(RationalAngle(1, 4), trefoil));
  CHECK_FALSE(touchpoint_root_check(RationalAngle(1, 3), trefoil));  // exp(2i pi/3) has order 3
}

TEST_CASE("even pair criterion") {
  const IntPolynomial trefoil{1, -1, 1};
  CHECK(even_pair_criterion(Slope{12, 1}, Slope{-12, 1}, trefoil));
  CHECK_FALSE(even_pair_criterion(Slope{4, 1}, Slope{-4, 1}, trefoil));
  CHECK_FALSE(even_pair_criterion(Slope{8, 1}, Slope{-8, 1}, IntPolynomial{1, -3, 1}));
  CHECK(code_of([&] { even_pair_criterion(Slope{3, 1}, Slope{-4, 1}, trefoil); }) == ErrorCode::ParityMismatch);
  CHECK(code_of([&] { even_pair_criterion(Slope{4, 1}, Slope{6, 1}, trefoil); }) == ErrorCode::NotBoundaryCase);
  CHECK(code_of([&] { even_pair_criterion(Slope{4, 1}, Slope{4, 1}, trefoil); }) == ErrorCode::NotBoundaryCase);
}

TEST_CASE("torus knot polynomials") {
  CHECK(torus_knot_alexander(2, 3) == IntPolynomial({1, -1, 1}));
  CHECK(torus_knot_alexander(2, 5) == IntPolynomial({1, -1, 1, -1, 1}));
  CHECK(torus_knot_alexander(3, 4) == IntPolynomial({1, -1, 0, 1, 0, -1, 1}));
  CHECK(code_of([] { torus_knot_alexander(2, 4); }) == ErrorCode::NotCoprime);
  for (std::int64_t p = 2; p <= 6; ++p)
    for (std::int64_t q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto d = torus_knot_alexander(p, q);
      CHECK(d.degree() == (p - 1) * (q - 1));
      CHECK(d.eval(1) == 1);
      CHECK(d.is_palindromic());
    }
  // the table agrees where the names overlap
  const auto t = bundled();
  CHECK(find_knot(t, "3_1")->alexander.normalized() == torus_knot_alexander(2, 3));
  CHECK(find_knot(t, "8_19")->alexander.normalized() == torus_knot_alexander(3, 4));
}

TEST_CASE("record validation") {
  KnotRecord ok{"3_1", 3, false, IntPolynomial{1, -1, 1}};
  CHECK_NOTHROW(validate(ok));
  KnotRecord bad = ok;
  bad.alexander = IntPolynomial{1, 1, 1};
  CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvariantViolation);
  bad.alexander = IntPolynomial{2, -1};
  CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvariantViolation);
  for (const auto& k : bundled()) CHECK_NOTHROW(validate(k));
}
