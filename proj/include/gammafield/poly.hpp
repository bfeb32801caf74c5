#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammafield/integer.hpp"

namespace gammafield {

/// Univariate polynomial over Z, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
  /// c * x^k
  static IntPoly monomial(const Integer& c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k (zero beyond the degree).
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Integer evaluate(const Integer& x) const;
  /// Sign of f(x) for rational x, computed exactly.
  int sign_at(const Rational& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  /// Lexicographic on (degree, coefficients from x^0 upward).
  friend bool canonical_less(const IntPoly& a, const IntPoly& b);

  /// Human form, e.g. "x^4 - 41*x^2 + 144".
  std::string to_string() const;
  /// Comma-separated coefficients, lowest degree first.
  std::string to_coeff_list() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Exact division a / b over Z; throws DomainError when b does not divide a.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Division by a monic polynomial; returns (quotient, remainder).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Resultant via the subresultant PRS.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws DegenerateInputError for constants.
Integer poly_discriminant(const IntPoly& f);

/// Number of distinct real roots of a squarefree polynomial via a Sturm sequence.
unsigned sturm_count_real_roots(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/// Parse "c0,c1,...,cn" or a symbolic form like "x^4 - 41*x^2 + 144".
IntPoly parse_poly(std::string_view text);

}  // namespace gammafield
