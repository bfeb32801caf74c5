#include "gammafield/integer.hpp"

#include <vector>

#include "gammafield/errors.hpp"

namespace gammafield {

Integer PrimeFactorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= pow(p, e);
  return v;
}

unsigned PrimeFactorization::exponent(const Integer& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? 0 : it->second;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DegenerateInputError("valuation of zero");
  if (p < 2) throw InvalidPrimeError("valuation base must be at least 2");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

namespace {

void require_odd_prime(const Integer& p) {
  if (p == 2) throw InvalidPrimeError("p = 2 is not an odd prime");
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long m = std::min<unsigned long>(128, r - k);
        for (unsigned long i = 0; i < m; ++i) {
          y = step(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(Integer(abs(Integer(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, out);
    split_into(root, out);
    return;
  }
  Integer d = rho_factor(n);
  split_into(d, out);
  split_into(Integer(n / d), out);
}

}  // namespace

int legendre(const Integer& a, const Integer& p) {
  require_odd_prime(p);
  Integer r = mod(a, p);
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

Integer smallest_nonresidue(const Integer& p) {
  require_odd_prime(p);
  for (Integer u = 2;; ++u)
    if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == -1) return u;
}

PrimeFactorization factor_integer(const Integer& n) {
  if (n == 0) throw DegenerateInputError("cannot factor zero");
  PrimeFactorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  for (unsigned long d = 2; d <= 100000 && Integer(d) * d <= m; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++out.factors[Integer(d)];
    }
  }
  split_into(m, out.factors);
  return out;
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gammafield
