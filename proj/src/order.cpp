#include "gammafield/order.hpp"

#include <algorithm>

#include "gammafield/algebra.hpp"
#include "gammafield/errors.hpp"
#include "gammafield/fp_poly.hpp"
#include "gammafield/zfactor.hpp"

namespace gammafield {

namespace {

IntMatrix reverse_columns(const IntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, m.cols() - 1 - j) = m(i, j);
  return r;
}

// Product of two power-basis numerators reduced modulo the monic f.
std::vector<Integer> multiply_numerators(const IntPoly& f, std::span<const Integer> a,
                                         std::span<const Integer> b) {
  IntPoly pa(std::vector<Integer>(a.begin(), a.end()));
  IntPoly pb(std::vector<Integer>(b.begin(), b.end()));
  IntPoly r = divmod_monic(pa * pb, f).second;
  std::vector<Integer> out(f.degree());
  for (int k = 0; k <= r.degree(); ++k) out[k] = r[k];
  return out;
}

void require_monic_irreducible(const IntPoly& f) {
  if (f.degree() < 1) throw InputError("defining polynomial must have degree at least 1");
  if (!f.is_monic()) throw InputError("defining polynomial must be monic");
  if (!is_irreducible(f)) throw InputError("defining polynomial is reducible over Q");
}

Order order_from_lattice(const Order& base, const IntMatrix& coords_in_base, const Integer& scale) {
  // Lattice spanned by rows of coords_in_base (in base-order coordinates) divided by scale.
  IntMatrix num = coords_in_base * base.basis;
  return order_from_generators(base.defining_poly, num, Integer(base.denom * scale));
}

DedekindResult dedekind_unchecked(const IntPoly& f, const Integer& p) {
  DedekindResult out;
  FpPoly fbar(f, p);
  auto factors = factor_mod_p(fbar, p);
  FpPoly g = FpPoly::one(), h = FpPoly::one();
  for (const auto& [q, e] : factors) {
    g = fp_mul(g, q, p);
    for (unsigned i = 1; i < e; ++i) h = fp_mul(h, q, p);
  }
  // F = (g h - f) / p over Z with monic lifts of g and h.
  IntPoly diff = g.lift() * h.lift() - f;
  std::vector<Integer> fc = diff.coeffs();
  for (auto& c : fc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  FpPoly big_f(fc, p);
  FpPoly u = fp_gcd(fp_gcd(big_f, g, p), h, p);
  if (u.degree() <= 0) return out;
  out.p_maximal = false;
  IntPoly cofactor = fp_quo(fbar, u, p).lift();
  const int n = f.degree();
  for (int j = 0; j < u.degree(); ++j) {
    IntPoly elt = divmod_monic(cofactor * IntPoly::monomial(1, j), f).second;
    FieldElement x(n);
    for (int k = 0; k < n; ++k) x[k] = make_rational(elt[k], p);
    out.enlargement.push_back(std::move(x));
  }
  return out;
}

// One Round 2 step: the ring of multipliers of the p-radical. Returns o when o is p-maximal.
Order round2_step(const Order& o, const Integer& p, bool& changed) {
  const std::size_t n = o.degree();
  MultTable table = multiplication_table(o);
  std::vector<Integer> one(n);
  one[0] = 1;
  QuotientAlgebra alg(table, p, one);

  // Radical I = pO + lift(ker Frob^k), in O-coordinates.
  IntMatrix rad_gens = alg.radical();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n);
    row[i] = p;
    rad_gens.append_row(row);
  }
  IntMatrix rad = hnf(rad_gens);
  RatMatrix rad_inv = inverse(to_rational(rad));

  // Phi: O/pO -> End(I/pI), y -> (y * beta_j mod pI)_j.
  IntMatrix phi(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> prod(n);  // omega_a * beta_j in O-coordinates
      for (std::size_t b = 0; b < n; ++b) {
        if (rad(j, b) == 0) continue;
        for (std::size_t c = 0; c < n; ++c) prod[c] += rad(j, b) * table(a, b, c);
      }
      for (std::size_t c = 0; c < n; ++c) {
        Rational coord = 0;
        for (std::size_t b = 0; b < n; ++b)
          if (prod[b] != 0) coord += prod[b] * rad_inv(b, c);
        if (coord.get_den() != 1) throw ConsistencyError("radical is not an ideal");
        phi(a, j * n + c) = mod(coord.get_num(), p);
      }
    }
  }
  IntMatrix kernel = left_kernel_mod(phi, p);
  if (kernel.rows() == 0) {
    changed = false;
    return o;
  }
  changed = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n);
    row[i] = p;
    kernel.append_row(row);
  }
  return order_from_lattice(o, kernel, p);
}

Order join_orders(const IntPoly& f, const std::vector<Order>& orders) {
  Integer den = 1;
  for (const auto& o : orders) den = lcm(den, o.denom);
  IntMatrix gens(0, f.degree());
  for (const auto& o : orders) {
    Integer scale = den / o.denom;
    for (std::size_t i = 0; i < o.basis.rows(); ++i) {
      std::vector<Integer> row(o.basis.row(i).begin(), o.basis.row(i).end());
      for (auto& x : row) x *= scale;
      gens.append_row(row);
    }
  }
  return order_from_generators(f, gens, den);
}

}  // namespace

FieldElement Order::element(std::size_t i) const {
  FieldElement x(basis.cols());
  for (std::size_t k = 0; k < basis.cols(); ++k) x[k] = make_rational(basis(i, k), denom);
  return x;
}

Integer Order::index() const {
  Integer det = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) det *= basis(i, i);
  return pow(denom, basis.rows()) / det;
}

IntMatrix lower_hnf(const IntMatrix& m) {
  IntMatrix h = reverse_columns(hnf(reverse_columns(m)));
  IntMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(h.rows() - 1 - i, j) = h(i, j);
  return out;
}

Order equation_order(const IntPoly& f) {
  Order o;
  o.defining_poly = f;
  o.basis = IntMatrix::identity(f.degree());
  o.denom = 1;
  o.disc = poly_discriminant(f);
  return o;
}

Order order_from_generators(const IntPoly& f, const IntMatrix& numerators, const Integer& denom) {
  IntMatrix basis = lower_hnf(numerators);
  if (basis.rows() != static_cast<std::size_t>(f.degree())) throw RankError("order generators do not span a full lattice");
  Integer g = denom;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) g = gcd(g, basis(i, j));
  Order o;
  o.defining_poly = f;
  o.basis = basis;
  o.denom = denom / g;
  if (g != 1)
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j) mpz_divexact(o.basis(i, j).get_mpz_t(), o.basis(i, j).get_mpz_t(), g.get_mpz_t());
  Integer idx = o.index();
  o.disc = poly_discriminant(f) / (idx * idx);
  return o;
}

std::vector<Rational> order_coordinates(const Order& o, const FieldElement& x) {
  // x = c * basis / denom, basis lower triangular: forward substitution from the last column.
  const std::size_t n = o.degree();
  std::vector<Rational> c(n);
  std::vector<Rational> rest(x.begin(), x.end());
  for (auto& r : rest) r *= o.denom;
  for (std::size_t i = n; i-- > 0;) {
    c[i] = rest[i] / o.basis(i, i);
    for (std::size_t j = 0; j <= i; ++j) rest[j] -= c[i] * o.basis(i, j);
  }
  return c;
}

bool contains(const Order& o, const FieldElement& x) {
  for (const auto& c : order_coordinates(o, x))
    if (c.get_den() != 1) return false;
  return true;
}

FieldElement multiply(const IntPoly& f, const FieldElement& a, const FieldElement& b) {
  std::vector<Rational> prod(2 * f.degree(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  const int n = f.degree();
  for (int k = 2 * n - 1; k >= n; --k) {
    if (prod[k] == 0) continue;
    for (int j = 0; j < n; ++j) prod[k - n + j] -= prod[k] * f[j];
    prod[k] = 0;
  }
  prod.resize(n);
  return prod;
}

MultTable multiplication_table(const Order& o) {
  const std::size_t n = o.degree();
  MultTable t(n);
  const Integer den2 = o.denom * o.denom;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto num = multiply_numerators(o.defining_poly, o.basis.row(i), o.basis.row(j));
      FieldElement x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = make_rational(num[k], den2);
      auto c = order_coordinates(o, x);
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].get_den() != 1) throw ConsistencyError("lattice is not closed under multiplication");
        t(i, j, k) = c[k].get_num();
        t(j, i, k) = c[k].get_num();
      }
    }
  return t;
}

DedekindResult dedekind_is_pmaximal(const IntPoly& f, const Integer& p) {
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
  if (!f.is_monic() || !is_irreducible(f)) throw PreconditionError("Dedekind criterion needs a monic irreducible polynomial");
  return dedekind_unchecked(f, p);
}

Order pmaximalize(const IntPoly& f, const Integer& p) {
  if (!is_prime(p)) throw InvalidPrimeError("modulus " + p.get_str() + " is not prime");
  if (!f.is_monic() || !is_irreducible(f)) throw PreconditionError("Round 2 needs a monic irreducible polynomial");
  Order o = equation_order(f);
  if (f.degree() == 1) return o;
  DedekindResult ded = dedekind_unchecked(f, p);
  if (ded.p_maximal) return o;
  const std::size_t n = f.degree();
  // Z[theta] + (u(theta)/p) Z[theta] is already an order.
  IntMatrix numerators(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n);
    row[i] = p;
    numerators.append_row(row);
  }
  for (const auto& x : ded.enlargement) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement theta_j(n);
      theta_j[j] = 1;
      FieldElement y = multiply(f, x, theta_j);
      std::vector<Integer> row(n);
      for (std::size_t k = 0; k < n; ++k) {
        Rational v = y[k] * p;
        row[k] = v.get_num();
      }
      numerators.append_row(row);
    }
  }
  o = order_from_generators(f, numerators, p);
  bool changed = true;
  while (changed) o = round2_step(o, p, changed);
  return o;
}

MaximalOrder maximal_order(const IntPoly& f) {
  require_monic_irreducible(f);
  MaximalOrder out;
  if (f.degree() == 1) {
    out.order = equation_order(f);
    out.index = 1;
    out.disc_factored = factor_integer(out.order.disc);
    return out;
  }
  const Integer poly_disc = poly_discriminant(f);
  PrimeFactorization pf = factor_integer(poly_disc);
  std::vector<Order> locals{equation_order(f)};
  for (const auto& [p, e] : pf.factors)
    if (e >= 2) locals.push_back(pmaximalize(f, p));
  out.order = join_orders(f, locals);
  out.index = out.order.index();
  out.disc_factored.sign = sgn(out.order.disc);
  for (const auto& [p, e] : pf.factors) {
    unsigned v = e - 2 * (out.index % p == 0 ? valuation(out.index, p) : 0);
    if (v > 0) out.disc_factored.factors[p] = v;
  }
  return out;
}

}  // namespace gammafield
