#include "gammafield/zfactor.hpp"

#include <algorithm>
#include <functional>

#include "gammafield/errors.hpp"
#include "gammafield/fp_poly.hpp"

namespace gammafield {

IntPoly ZFactorization::product() const {
  IntPoly acc = IntPoly::constant(content);
  for (const auto& [g, m] : factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

std::vector<ZFactor> squarefree_decomposition(const IntPoly& f) {
  std::vector<ZFactor> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm; characteristic zero.
  IntPoly a = f.primitive_part();
  IntPoly b = a.derivative();
  IntPoly c = gcd(a, b);
  IntPoly w = exact_divide(a, c);
  IntPoly y = exact_divide(b, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    IntPoly z = y - w.derivative();
    IntPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    IntPoly w_next = exact_divide(w, g);
    y = exact_divide(z, g);
    w = std::move(w_next);
    ++i;
  }
  return out;
}

namespace {

IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  const Integer half = m / 2;
  for (auto& c : v) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  return IntPoly(std::move(v));
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  for (auto& c : v) c = mod(c, m);
  return IntPoly(std::move(v));
}

// Lift f = g*h (mod p), g monic, to f = G*H (mod p^k) with G monic and
// lc(H) = lc(f). Linear Hensel lifting.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const FpPoly& g0, const FpPoly& h0,
                                        const Integer& p, unsigned k) {
  auto [one, s, t] = fp_xgcd(g0, h0, p);
  if (!one.is_one()) throw ConsistencyError("Hensel lifting: factors not coprime mod p");
  IntPoly g = g0.lift();
  std::vector<Integer> hv = h0.lift().coeffs();
  hv.back() = f.leading();
  IntPoly h(std::move(hv));
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    IntPoly diff = f - g * h;
    std::vector<Integer> ev = diff.coeffs();
    for (auto& c : ev) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()))
        throw ConsistencyError("Hensel lifting: residue not divisible");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    }
    FpPoly e(ev, p);
    // tau = t*e mod g, sigma = (e - tau*h)/g; then sigma*g + tau*h = e.
    FpPoly tau = fp_rem(fp_mul(t, e, p), g0, p);
    FpPoly sigma = fp_quo(fp_sub(e, fp_mul(tau, h0, p), p), g0, p);
    g = g + pj * tau.lift();
    h = h + pj * sigma.lift();
    pj *= p;
  }
  return {reduce_mod(g, pj), h};
}

struct PrimeChoice {
  Integer p;
  std::vector<FpFactor> factors;
};

// Pick, among the first few good primes, the one giving the fewest modular factors.
PrimeChoice choose_prime(const IntPoly& f) {
  PrimeChoice best;
  int good = 0;
  for (Integer p = 3; good < 5; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) continue;
    FpPoly fp(f, p);
    if (fp_gcd(fp, fp_derivative(fp, p), p).degree() > 0) continue;
    ++good;
    auto facs = factor_mod_p(fp, p);
    if (best.factors.empty() || facs.size() < best.factors.size()) best = {p, std::move(facs)};
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Zassenhaus factorization of a squarefree primitive polynomial.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  PrimeChoice choice = choose_prime(f);
  if (choice.factors.size() == 1) return {f};
  const Integer& p = choice.p;

  // Mignotte: any factor's coefficients are bounded by 2^n * ||f||_2 * |lc|.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * pow(Integer(2), f.degree()) * norm * abs(f.leading());
  unsigned k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  IntPoly rest = f;
  std::vector<FpPoly> modular;
  for (auto& fac : choice.factors) modular.push_back(fac.factor);
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    FpPoly cofactor = FpPoly(IntPoly::constant(f.leading()), p);
    for (std::size_t j = i + 1; j < modular.size(); ++j) cofactor = fp_mul(cofactor, modular[j], p);
    auto [g, h] = hensel_lift(rest, modular[i], cofactor, p, k);
    lifted.push_back(std::move(g));
    rest = reduce_mod(h, pk);
  }
  {
    std::vector<Integer> v = rest.coeffs();
    Integer inv = invmod(f.leading(), pk);
    for (auto& c : v) c = mod(c * inv, pk);
    lifted.emplace_back(std::move(v));
  }

  std::vector<IntPoly> found;
  IntPoly remaining = f;
  std::vector<bool> used(lifted.size(), false);
  std::size_t r = lifted.size();
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    bool restart = true;
    while (restart) {
      restart = false;
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) live.push_back(i);
      if (2 * size > live.size()) break;
      std::vector<std::size_t> pick(size);
      std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) {
        if (depth == size) {
          IntPoly cand = IntPoly::constant(remaining.leading());
          for (std::size_t idx : pick) cand = reduce_mod(cand * lifted[idx], pk);
          cand = symmetric_mod(cand, pk).primitive_part();
          if (cand.degree() < 1) return false;
          try {
            IntPoly quotient = exact_divide(remaining, cand);
            found.push_back(cand);
            remaining = quotient;
            for (std::size_t idx : pick) used[idx] = true;
            return true;
          } catch (const DomainError&) {
            return false;
          }
        }
        for (std::size_t i = start; i < live.size(); ++i) {
          pick[depth] = live[i];
          if (search(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (search(0, 0)) restart = true;
    }
    r = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
  }
  if (remaining.degree() > 0) found.push_back(remaining.primitive_part());
  return found;
}

}  // namespace

ZFactorization factor_over_Z(const IntPoly& f) {
  if (f.is_zero()) throw DegenerateInputError("cannot factor the zero polynomial");
  ZFactorization out;
  out.content = f.content();
  for (const auto& [part, mult] : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(part)) out.factors.push_back({g.primitive_part(), mult});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const ZFactor& a, const ZFactor& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  if (f.content() != 1 && f.content() != -1) return false;
  auto fac = factor_over_Z(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace gammafield
