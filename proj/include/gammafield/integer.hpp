#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace gammafield {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sign and prime-power decomposition of a nonzero integer.
struct PrimeFactorization {
  int sign = 1;
  std::map<Integer, unsigned> factors;

  Integer value() const;
  unsigned exponent(const Integer& p) const;
  bool operator==(const PrimeFactorization&) const = default;
};

bool is_prime(const Integer& n);

/// Exponent of p in n (n != 0).
unsigned valuation(const Integer& n, const Integer& p);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Least u in {1, ..., p-1} with (u/p) = -1.
Integer smallest_nonresidue(const Integer& p);

/// Complete factorization: trial division up to 10^5, then Pollard rho (Brent).
PrimeFactorization factor_integer(const Integer& n);

/// num/den in lowest terms (mpq_class's two-argument constructor does not canonicalize).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Residue of a in [0, m).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Stable 64-bit FNV-1a hash; used for deterministic seeds and cache keys.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 1469598103934665603ull);

}  // namespace gammafield
