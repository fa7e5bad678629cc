#include "su2cyc/alexander.hpp"

#include "su2cyc/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace su2cyc {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : c_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::int64_t coeff, std::size_t degree) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPolynomial::eval(std::int64_t t) const {
  std::int64_t v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

IntPolynomial IntPolynomial::normalized() const {
  if (c_.empty()) return {};
  auto first = std::find_if(c_.begin(), c_.end(), [](std::int64_t v) { return v != 0; });
  std::vector<std::int64_t> c(first, c_.end());
  if (c.back() < 0)
    for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::is_palindromic() const {
  std::vector<std::int64_t> r(c_.rbegin(), c_.rend());
  if (r == c_) return true;
  for (auto& v : r) v = -v;
  return r == c_;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const auto v = c_[i];
    if (v == 0) continue;
    const auto mag = v < 0 ? -v : v;
    if (s.empty())
      s += v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

DivisionResult divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const auto lead = den.leading();
  if (lead != 1 && lead != -1)
    throw Error(ErrorCode::InvalidArgument, "divisor must have leading coefficient +-1");
  std::vector<std::int64_t> r = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial{}, num};
  std::vector<std::int64_t> q(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  for (int i = num.degree(); i >= dd; --i) {
    const auto coef = r[static_cast<std::size_t>(i)] * lead;  // lead is its own inverse
    q[static_cast<std::size_t>(i - dd)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= coef * d[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& poly) {
  return divide_monic(poly, divisor).remainder.is_zero();
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "divisors of a non-positive integer");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "phi of a non-positive integer");
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

IntPolynomial cyclotomic(std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial{1};
  for (auto e : divisors(d)) {
    if (e == d) continue;
    auto res = divide_monic(p, cyclotomic(e));
    if (!res.remainder.is_zero())
      throw Error(ErrorCode::InvariantViolation, "t^d - 1 not divisible by Phi_" + std::to_string(e));
    p = res.quotient;
  }
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

std::set<std::int64_t> root_of_unity_orders(const IntPolynomial& poly) {
  if (poly.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial");
  std::set<std::int64_t> out;
  const auto deg = poly.degree();
  if (deg < 1) return out;
  // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2
  const std::int64_t bound = 2 * static_cast<std::int64_t>(deg) * deg + 2;
  for (std::int64_t d = 1; d <= bound; ++d)
    if (euler_phi(d) <= deg && divides(cyclotomic(d), poly)) out.insert(d);
  return out;
}

bool has_primitive_dth_root(const IntPolynomial& poly, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (poly.is_zero()) return true;
  if (euler_phi(d) > poly.degree()) return false;
  return divides(cyclotomic(d), poly);
}

bool has_dth_root(const IntPolynomial& poly, std::int64_t d) {
  for (auto e : divisors(d))
    if (has_primitive_dth_root(poly, e)) return true;
  return false;
}

std::vector<std::int64_t> amphichiral_candidates(const IntPolynomial& poly, std::int64_t r_max) {
  const auto at_one = poly.eval(1);
  if (at_one != 1 && at_one != -1)
    throw Error(ErrorCode::NotAKnotPolynomial, poly.to_string() + " at t = 1 is " + std::to_string(at_one));
  std::vector<std::int64_t> pos;
  for (std::int64_t r = 4; r <= r_max; r += 2)
    if (has_dth_root(poly, r / 2)) pos.push_back(r);
  std::vector<std::int64_t> out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

bool touchpoint_root_check(const RationalAngle& theta0, const IntPolynomial& poly) {
  return has_primitive_dth_root(poly, unity_order(theta0));
}

bool even_pair_criterion(const Slope& a, const Slope& b, const IntPolynomial& poly) {
  if (a.p % 2 != 0 || b.p % 2 != 0)
    throw Error(ErrorCode::ParityMismatch, a.to_string() + ", " + b.to_string() + " need even numerators");
  if (a == b || pair_verdict(a, b).gap_sum_class != GapSumClass::Exactly2Pi)
    throw Error(ErrorCode::NotBoundaryCase, a.to_string() + ", " + b.to_string());
  const auto pa = a.p < 0 ? -a.p : a.p;
  const auto pb = b.p < 0 ? -b.p : b.p;
  return has_dth_root(poly, pa / 2) || has_dth_root(poly, pb / 2);
}

IntPolynomial torus_knot_alexander(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "torus knot parameters must be positive");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, std::to_string(p) + ", " + std::to_string(q));
  IntPolynomial out{1};
  for (auto d : divisors(p * q))
    if (p % d != 0 && q % d != 0) out = out * cyclotomic(d);
  return out;
}

void validate(const KnotRecord& k) {
  const auto v = k.alexander.eval(1);
  if (v != 1 && v != -1)
    throw Error(ErrorCode::InvariantViolation,
                k.name + ": Alexander polynomial at t = 1 is " + std::to_string(v));
  if (!k.alexander.is_palindromic())
    throw Error(ErrorCode::InvariantViolation, k.name + ": Alexander polynomial is not palindromic");
}

}  // namespace su2cyc
