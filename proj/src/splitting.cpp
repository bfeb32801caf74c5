#include "gammafield/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "gammafield/errors.hpp"
#include "gammafield/fp_poly.hpp"

namespace gammafield {

SplittingType::SplittingType(Integer prime, std::vector<RamificationPair> ps)
    : p(std::move(prime)), pairs(std::move(ps)) {
  std::sort(pairs.begin(), pairs.end());
}

unsigned SplittingType::F() const {
  unsigned total = 0;
  for (const auto& [e, f] : pairs) total += f;
  return total;
}

unsigned SplittingType::degree() const {
  unsigned total = 0;
  for (const auto& [e, f] : pairs) total += e * f;
  return total;
}

bool SplittingType::is_ramified() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const RamificationPair& r) { return r.e > 1; });
}

bool is_tame(const SplittingType& s) {
  return std::none_of(s.pairs.begin(), s.pairs.end(),
                      [&](const RamificationPair& r) { return Integer(r.e) % s.p == 0; });
}

QuotientAlgebra quotient_algebra(const MaximalOrder& m, const Integer& p) {
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
  std::vector<Integer> one(m.order.degree());
  one[0] = 1;
  return QuotientAlgebra(multiplication_table(m.order), p, std::move(one));
}

namespace {

using Vec = std::vector<Integer>;

IntMatrix stack(const std::vector<Vec>& rows, std::size_t n) {
  IntMatrix m(0, n);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t n, const Integer& p) {
  IntMatrix m = stack(rows, n);
  return row_reduce_mod(m, p);
}

// Minimal polynomial of b inside the component with identity e (monic, F_p coefficients).
FpPoly minimal_polynomial(const QuotientAlgebra& a, const Vec& e, const Vec& b) {
  std::vector<Vec> powers{e};
  while (true) {
    powers.push_back(a.multiply(powers.back(), b));
    IntMatrix kernel = left_kernel_mod(stack(powers, a.dim), a.p);
    if (kernel.rows() == 0) continue;
    Vec coeffs(kernel.row(0).begin(), kernel.row(0).end());
    return fp_monic(FpPoly(coeffs, a.p), a.p);
  }
}

// Primitive idempotents, found by splitting the subalgebra {x : x^p = x} = span of idempotents.
std::vector<Vec> primitive_idempotents(const QuotientAlgebra& a) {
  const Integer& p = a.p;
  const std::size_t n = a.dim;
  IntMatrix frob_minus_id = a.frobenius_matrix();
  for (std::size_t i = 0; i < n; ++i) frob_minus_id(i, i) = mod(frob_minus_id(i, i) - 1, p);
  IntMatrix fixed = left_kernel_mod(frob_minus_id, p);

  std::vector<Vec> done, work{a.unit};
  while (!work.empty()) {
    Vec e = std::move(work.back());
    work.pop_back();
    std::vector<Vec> component;
    for (std::size_t i = 0; i < fixed.rows(); ++i)
      component.push_back(a.multiply(e, Vec(fixed.row(i).begin(), fixed.row(i).end())));
    IntMatrix basis = row_space_mod(stack(component, n), p);
    if (basis.rows() <= 1) {
      done.push_back(std::move(e));
      continue;
    }
    Vec b;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Vec cand(basis.row(i).begin(), basis.row(i).end());
      if (rank_of({e, cand}, n, p) == 2) {
        b = std::move(cand);
        break;
      }
    }
    if (b.empty()) throw ConsistencyError("idempotent splitting found no separating element");
    FpPoly mp = minimal_polynomial(a, e, b);
    std::vector<Integer> roots;
    for (const auto& [q, mult] : factor_mod_p(mp, p)) {
      if (q.degree() != 1 || mult != 1) throw ConsistencyError("idempotent subalgebra is not split");
      roots.push_back(mod(-q[0], p));
    }
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Vec ej = e;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k == j) continue;
        Integer scale = invmod(mod(roots[j] - roots[k], p), p);
        Vec factor(n);
        for (std::size_t c = 0; c < n; ++c) factor[c] = mod((b[c] - roots[k] * e[c]) * scale, p);
        ej = a.multiply(ej, factor);
      }
      work.push_back(std::move(ej));
    }
  }
  return done;
}

}  // namespace

SplittingType split_prime_by_algebra(const MaximalOrder& m, const Integer& p) {
  QuotientAlgebra a = quotient_algebra(m, p);
  const std::size_t n = a.dim;
  IntMatrix radical = a.radical();
  std::vector<RamificationPair> pairs;
  std::size_t total = 0;
  for (const Vec& idem : primitive_idempotents(a)) {
    IntMatrix local = a.multiplication_matrix(idem);
    const std::size_t local_dim = row_reduce_mod(local, p);
    std::vector<Vec> nil;
    for (std::size_t i = 0; i < radical.rows(); ++i)
      nil.push_back(a.multiply(idem, Vec(radical.row(i).begin(), radical.row(i).end())));
    const std::size_t nil_dim = nil.empty() ? 0 : rank_of(nil, n, p);
    const std::size_t f = local_dim - nil_dim;
    if (f == 0 || local_dim % f != 0) throw ConsistencyError("inconsistent local factor dimensions");
    pairs.push_back({static_cast<unsigned>(local_dim / f), static_cast<unsigned>(f)});
    total += local_dim;
  }
  if (total != n) throw ConsistencyError("local factors do not fill O_K/pO_K");
  return SplittingType(p, std::move(pairs));
}

SplittingType split_prime_by_factorization(const IntPoly& f, const Integer& p) {
  std::vector<RamificationPair> pairs;
  for (const auto& [q, mult] : factor_mod_p(f, p))
    pairs.push_back({mult, static_cast<unsigned>(q.degree())});
  return SplittingType(p, std::move(pairs));
}

SplittingType split_prime(const MaximalOrder& m, const Integer& p) {
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
  if (m.index % p != 0) return split_prime_by_factorization(m.order.defining_poly, p);
  return split_prime_by_algebra(m, p);
}

}  // namespace gammafield
