#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/poly.hpp"

namespace gammafield {

/// Polynomial over F_p with coefficients in [0, p), lowest degree first. The
/// modulus is passed explicitly to every operation.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::vector<Integer> coeffs, const Integer& p);
  FpPoly(const IntPoly& f, const Integer& p);
  static FpPoly one() { return FpPoly(std::vector<Integer>{1}); }
  /// x + c
  static FpPoly linear(const Integer& c, const Integer& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  /// Representative in Z[x] with coefficients in [0, p).
  IntPoly lift() const { return IntPoly(coeffs_); }
  bool operator==(const FpPoly&) const = default;
  friend bool canonical_less(const FpPoly& a, const FpPoly& b);
  std::string to_string() const { return lift().to_string(); }

 private:
  explicit FpPoly(std::vector<Integer> reduced) : coeffs_(std::move(reduced)) { trim(); }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;

  friend FpPoly fp_add(const FpPoly&, const FpPoly&, const Integer&);
  friend FpPoly fp_sub(const FpPoly&, const FpPoly&, const Integer&);
  friend FpPoly fp_mul(const FpPoly&, const FpPoly&, const Integer&);
  friend FpPoly fp_scale(const FpPoly&, const Integer&, const Integer&);
  friend std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly&, const FpPoly&, const Integer&);
  friend FpPoly fp_derivative(const FpPoly&, const Integer&);
  friend FpPoly fp_pth_root(const FpPoly&, const Integer&);
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Integer& p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Integer& p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Integer& p);
FpPoly fp_scale(const FpPoly& a, const Integer& c, const Integer& p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, const Integer& p);
inline FpPoly fp_rem(const FpPoly& a, const FpPoly& b, const Integer& p) { return fp_divmod(a, b, p).second; }
inline FpPoly fp_quo(const FpPoly& a, const FpPoly& b, const Integer& p) { return fp_divmod(a, b, p).first; }
FpPoly fp_monic(const FpPoly& a, const Integer& p);
/// Monic gcd (zero if both inputs are zero).
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, const Integer& p);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b, const Integer& p);
FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& modulus, const Integer& p);
FpPoly fp_derivative(const FpPoly& a, const Integer& p);
/// Inverse Frobenius for a polynomial in x^p.
FpPoly fp_pth_root(const FpPoly& a, const Integer& p);

struct FpFactor {
  FpPoly factor;
  unsigned multiplicity;
  bool operator==(const FpFactor&) const = default;
};

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<FpFactor> fp_squarefree(const FpPoly& f, const Integer& p);

/// Complete factorization of f * lc(f)^-1 over F_p into monic irreducibles.
/// Output is sorted by (degree, coefficients). Randomized splitting is seeded
/// from a hash of (f, p), so the result is reproducible.
std::vector<FpFactor> factor_mod_p(const FpPoly& f, const Integer& p);

/// Throws InvalidPrimeError for composite p and DegenerateInputError when f vanishes mod p.
std::vector<FpFactor> factor_mod_p(const IntPoly& f, const Integer& p);

}  // namespace gammafield
