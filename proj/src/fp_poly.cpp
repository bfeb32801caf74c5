#include "gammafield/fp_poly.hpp"

#include <algorithm>

#include "gammafield/errors.hpp"

namespace gammafield {

FpPoly::FpPoly(std::vector<Integer> coeffs, const Integer& p) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = mod(c, p);
  trim();
}

FpPoly::FpPoly(const IntPoly& f, const Integer& p) : FpPoly(f.coeffs(), p) {}

FpPoly FpPoly::linear(const Integer& c, const Integer& p) { return FpPoly({c, Integer(1)}, p); }

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Integer& p) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a[i] + b[i];
    if (v[i] >= p) v[i] -= p;
  }
  return FpPoly(std::move(v));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Integer& p) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a[i] - b[i];
    if (v[i] < 0) v[i] += p;
  }
  return FpPoly(std::move(v));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Integer& p) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  for (auto& c : v) c %= p;
  return FpPoly(std::move(v));
}

FpPoly fp_scale(const FpPoly& a, const Integer& c, const Integer& p) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x = mod(x * c, p);
  return FpPoly(std::move(v));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, const Integer& p) {
  if (b.is_zero()) throw DegenerateInputError("division by zero polynomial mod p");
  if (a.degree() < b.degree()) return {FpPoly{}, a};
  const int db = b.degree();
  Integer inv = invmod(b.leading(), p);
  std::vector<Integer> r = a.coeffs_;
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Integer c = r[k] * inv % p;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] = mod(r[k - db + j] - c * b.coeffs_[j], p);
  }
  r.resize(db);
  return {FpPoly(std::move(q)), FpPoly(std::move(r))};
}

FpPoly fp_monic(const FpPoly& a, const Integer& p) {
  if (a.is_zero()) return a;
  return fp_scale(a, invmod(a.leading(), p), p);
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, const Integer& p) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return fp_monic(x, p);
}

std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b, const Integer& p) {
  FpPoly r0 = a, r1 = b, s0 = FpPoly::one(), s1, t0, t1 = FpPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Integer inv = invmod(r0.leading(), p);
  return {fp_scale(r0, inv, p), fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& modulus, const Integer& p) {
  FpPoly result = fp_rem(FpPoly::one(), modulus, p);
  FpPoly b = fp_rem(base, modulus, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(fp_mul(result, b, p), modulus, p);
  }
  return result;
}

FpPoly fp_derivative(const FpPoly& a, const Integer& p) {
  if (a.coeffs_.size() <= 1) return {};
  std::vector<Integer> v(a.coeffs_.size() - 1);
  for (std::size_t k = 1; k < a.coeffs_.size(); ++k) v[k - 1] = a.coeffs_[k] * static_cast<unsigned long>(k) % p;
  return FpPoly(std::move(v));
}

FpPoly fp_pth_root(const FpPoly& a, const Integer& p) {
  if (!p.fits_ulong_p()) throw DomainError("p-th root requested for a huge prime");
  const unsigned long q = p.get_ui();
  std::vector<Integer> v;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (k % q == 0)
      v.push_back(a.coeffs_[k]);
    else if (a.coeffs_[k] != 0)
      throw DomainError("polynomial is not a p-th power");
  }
  return FpPoly(std::move(v));
}

std::vector<FpFactor> fp_squarefree(const FpPoly& f_in, const Integer& p) {
  std::vector<FpFactor> out;
  FpPoly f = fp_monic(f_in, p);
  if (f.degree() < 1) return out;
  FpPoly d = fp_derivative(f, p);
  if (d.is_zero()) {
    for (auto& [g, m] : fp_squarefree(fp_pth_root(f, p), p))
      out.push_back({g, static_cast<unsigned>(m * p.get_ui())});
    return out;
  }
  FpPoly c = fp_gcd(f, d, p);
  FpPoly w = fp_quo(f, c, p);
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = fp_gcd(w, c, p);
    FpPoly z = fp_quo(w, y, p);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = fp_quo(c, w, p);
  }
  if (c.degree() > 0)
    for (auto& [g, m] : fp_squarefree(fp_pth_root(c, p), p))
      out.push_back({g, static_cast<unsigned>(m * p.get_ui())});
  return out;
}

namespace {

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(const FpPoly& f_in, const Integer& p) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly f = f_in;
  const FpPoly x = FpPoly({Integer(0), Integer(1)}, p);
  FpPoly h = fp_rem(x, f, p);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = fp_powmod(h, p, f, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = fp_quo(f, g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

FpPoly random_poly(gmp_randclass& rng, int degree_bound, const Integer& p) {
  std::vector<Integer> v(degree_bound);
  for (auto& c : v) c = rng.get_z_range(p);
  return FpPoly(std::move(v), p);
}

// Cantor-Zassenhaus equal-degree splitting (trace map for p = 2).
void equal_degree(const FpPoly& g, unsigned d, const Integer& p, gmp_randclass& rng,
                  std::vector<FpPoly>& out) {
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const Integer exponent = (pow(p, d) - 1) / 2;
  while (true) {
    FpPoly a = random_poly(rng, g.degree(), p);
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly term = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        term = fp_rem(fp_mul(term, term, p), g, p);
        b = fp_add(b, term, p);
      }
    } else {
      b = fp_sub(fp_powmod(a, exponent, g, p), FpPoly::one(), p);
    }
    FpPoly h = fp_gcd(b, g, p);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, p, rng, out);
      equal_degree(fp_quo(g, h, p), d, p, rng, out);
      return;
    }
  }
}

std::uint64_t seed_for(const FpPoly& f, const Integer& p) {
  std::string key = p.get_str() + ":";
  for (const auto& c : f.coeffs()) key += c.get_str() + ",";
  return fnv1a(key);
}

}  // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f, const Integer& p) {
  if (f.is_zero()) throw DegenerateInputError("polynomial vanishes modulo p");
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(Integer(std::to_string(seed_for(f, p))));
  std::vector<FpFactor> out;
  for (const auto& [part, mult] : fp_squarefree(f, p)) {
    for (const auto& [block, d] : distinct_degree(part, p)) {
      std::vector<FpPoly> irreducibles;
      equal_degree(block, d, p, rng, irreducibles);
      for (auto& q : irreducibles) out.push_back({std::move(q), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return canonical_less(a.factor, b.factor);
  });
  return out;
}

std::vector<FpFactor> factor_mod_p(const IntPoly& f, const Integer& p) {
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
  return factor_mod_p(FpPoly(f, p), p);
}

}  // namespace gammafield
