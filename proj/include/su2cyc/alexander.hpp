#pragma once

#include "su2cyc/rational_angle.hpp"
#include "su2cyc/slope.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace su2cyc {

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending);
  IntPolynomial(std::initializer_list<std::int64_t> ascending)
      : IntPolynomial(std::vector<std::int64_t>(ascending)) {}

  static IntPolynomial monomial(std::int64_t coeff, std::size_t degree);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::int64_t eval(std::int64_t t) const;
  /// Strips factors of t and makes the leading coefficient positive.
  IntPolynomial normalized() const;
  /// Reversed coefficients equal +-the coefficients.
  bool is_palindromic() const;
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by a divisor with leading coefficient +-1; exact over Z.
DivisionResult divide_monic(const IntPolynomial& num, const IntPolynomial& den);
bool divides(const IntPolynomial& divisor, const IntPolynomial& poly);

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Phi_d by dividing t^d - 1 by Phi_e for every proper divisor e of d.
IntPolynomial cyclotomic(std::int64_t d);

/// {d : Phi_d | poly}, over every d with phi(d) <= deg(poly).
std::set<std::int64_t> root_of_unity_orders(const IntPolynomial& poly);

/// Some d-th root of unity (any primitive e-th root with e | d) is a root.
bool has_dth_root(const IntPolynomial& poly, std::int64_t d);
/// A primitive d-th root of unity is a root.
bool has_primitive_dth_root(const IntPolynomial& poly, std::int64_t d);

/// Even r with 2 < |r| <= r_max and a |r|/2-th root of unity as a root, ascending.
std::vector<std::int64_t> amphichiral_candidates(const IntPolynomial& poly, std::int64_t r_max);

/// Phi_N | poly, N the order of exp(2i theta0).
bool touchpoint_root_check(const RationalAngle& theta0, const IntPolynomial& poly);

/// For a boundary pair with even numerators: a |p1|/2-th or |p2|/2-th root of unity is a root.
bool even_pair_criterion(const Slope& a, const Slope& b, const IntPolynomial& poly);

/// Product of Phi_d over d | pq with d not dividing p or q.
IntPolynomial torus_knot_alexander(std::int64_t p, std::int64_t q);

struct KnotRecord {
  std::string name;
  int crossings = 0;
  bool amphichiral = false;
  IntPolynomial alexander;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// Throws InvariantViolation unless alexander(1) = +-1 and it is palindromic.
void validate(const KnotRecord& k);

}  // namespace su2cyc
