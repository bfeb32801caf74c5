#include "gammafield/invariants.hpp"

#include <algorithm>

#include "gammafield/errors.hpp"

namespace gammafield {

FieldSignature field_signature(const IntPoly& f) {
  const unsigned r = sturm_count_real_roots(f);
  return {r, (static_cast<unsigned>(f.degree()) - r) / 2};
}

std::vector<Integer> power_sums(const IntPoly& f, std::size_t count) {
  if (!f.is_monic()) throw DomainError("power sums need a monic polynomial");
  const std::size_t n = f.degree();
  std::vector<Integer> s(count);
  if (count == 0) return s;
  s[0] = static_cast<unsigned long>(n);
  for (std::size_t k = 1; k < count; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) acc += f[n - i] * s[k - i];
    if (k <= n) acc += static_cast<unsigned long>(k) * f[n - k];
    s[k] = -acc;
  }
  return s;
}

TraceForm gram_matrix(const Order& o) {
  const std::size_t n = o.degree();
  auto sums = power_sums(o.defining_poly, 2 * n - 1);
  IntMatrix hankel(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) hankel(k, l) = sums[k + l];
  IntMatrix g = o.basis * hankel * o.basis.transpose();
  const Integer den2 = o.denom * o.denom;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(g(i, j).get_mpz_t(), den2.get_mpz_t()))
        throw ConsistencyError("non-integral trace: order basis is not integral");
      mpz_divexact(g(i, j).get_mpz_t(), g(i, j).get_mpz_t(), den2.get_mpz_t());
    }
  TraceForm t;
  t.det = determinant(g);
  t.signature = form_signature(g);
  t.gram = std::move(g);
  return t;
}

TraceForm gram_matrix(const MaximalOrder& m) { return gram_matrix(m.order); }

FormSignature form_signature(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix a = to_rational(gram);
  auto swap_sym = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    a.swap_rows(i, k);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, k));
  };
  FormSignature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal.
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) throw SingularFormError("trace form is singular");
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      piv = bi;
    }
    swap_sym(piv, k);
    const Rational d = a(k, k);
    if (d > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return sig;
}

AlphaClass alpha_invariant(const SplittingType& s) {
  if (s.p == 2) throw InvalidPrimeError("alpha invariant is defined for odd primes only");
  if (!is_tame(s)) throw WildRamificationError("alpha invariant at a wild prime " + s.p.get_str());
  int symbol = (s.F() - s.g()) % 2 == 0 ? 1 : -1;
  for (const auto& [e, f] : s.pairs)
    if (f % 2 == 1) symbol *= legendre(Integer(e), s.p);
  AlphaClass out;
  out.p = s.p;
  out.legendre = symbol;
  out.unit_rep = symbol == 1 ? Integer(1) : smallest_nonresidue(s.p);
  return out;
}

bool is_epsilon_split_homogeneous(const SplittingType& s) {
  return std::adjacent_find(s.pairs.begin(), s.pairs.end(), [](const RamificationPair& a, const RamificationPair& b) {
           return a.e != b.e;
         }) == s.pairs.end();
}

GammaClassification classify_gamma(unsigned degree, const std::map<Integer, SplittingType>& splittings) {
  GammaClassification out;
  std::vector<Integer> failing;
  for (const auto& [p, s] : splittings) {
    if (!s.is_ramified()) continue;
    if (!is_tame(s)) out.is_tame = false;
    if (p == 2) continue;
    PrimeConditions c;
    c.eps_split = is_epsilon_split_homogeneous(s);
    c.g_odd = s.g() % 2 == 1;
    c.n_over_e_odd = c.eps_split && (degree / s.pairs.front().e) % 2 == 1;
    if (!c.satisfied()) failing.push_back(p);
    out.per_prime[p] = c;
  }
  out.is_gamma = out.is_tame && failing.size() <= 1;
  if (out.is_gamma && failing.size() == 1) out.exceptional = failing.front();
  return out;
}

GammaClassification classify_gamma(const FieldAnalysis& a) { return classify_gamma(a.n, a.splittings); }

AlphaClass lemma_square_class(unsigned n, unsigned v, const Integer& p) {
  if (v == 0 || v >= n) throw DomainError("lemma needs 0 < v_p(d) < n");
  Integer num = n, den = n - v;
  Integer g = gcd(num, den);
  num /= g;
  den /= g;
  if (p == 2) throw InvalidPrimeError("square class at p = 2 is not defined");
  if (num % p == 0 || den % p == 0) throw DomainError("p divides n/(n - v): not a p-adic unit");
  AlphaClass out;
  out.p = p;
  out.legendre = legendre(num, p) * legendre(den, p);
  out.unit_rep = out.legendre == 1 ? Integer(1) : smallest_nonresidue(p);
  return out;
}

bool verify_lemma(const FieldAnalysis& a, const Integer& p) {
  if (!a.gamma.is_gamma) throw DomainError("lemma applies to Gamma fields only");
  if (p == 2) throw DomainError("lemma applies to odd primes only");
  auto it = a.splittings.find(p);
  if (it == a.splittings.end() || !it->second.is_ramified()) throw DomainError("p is not ramified");
  if (a.gamma.exceptional && *a.gamma.exceptional == p) throw DomainError("p is the exceptional prime");
  const unsigned v = a.disc_factored().exponent(p);
  return alpha_invariant(it->second).legendre == lemma_square_class(a.n, v, p).legendre;
}

FieldAnalysis analyze_field(const IntPoly& f) {
  FieldAnalysis a;
  a.max_order = maximal_order(f);
  a.f = f;
  a.n = static_cast<unsigned>(f.degree());
  a.signature = field_signature(f);
  a.poly_disc = poly_discriminant(f);
  a.disc = a.max_order.order.disc;
  for (const auto& [p, e] : a.disc_factored().factors) a.splittings.emplace(p, split_prime(a.max_order, p));
  a.trace_form = gram_matrix(a.max_order);
  if (a.trace_form.det != a.disc) throw ConsistencyError("trace form determinant differs from the discriminant");
  for (const auto& [p, s] : a.splittings)
    if (p != 2 && is_tame(s)) a.alphas.emplace(p, alpha_invariant(s));
  a.gamma = classify_gamma(a.n, a.splittings);
  return a;
}

}  // namespace gammafield
