#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library routines it is used to check.

#include <functional>
#include <set>
#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/poly.hpp"

namespace oracle {

using gammafield::Integer;
using gammafield::IntPoly;
using gammafield::Rational;
using RatRows = std::vector<std::vector<Rational>>;

inline Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Determinant by plain Gaussian elimination over Q.
inline Rational determinant(RatRows m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  RatRows s(size, std::vector<Rational>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  Rational d = determinant(s);
  return d.get_num();
}

inline Integer discriminant(const IntPoly& f) {
  const long n = f.degree();
  if (n == 1) return 1;
  Integer r = sylvester_resultant(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : Integer(-r);
}

inline int sign_variations(const std::vector<Rational>& c) {
  int count = 0, prev = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Coefficients of (x+1)^n f((lo*x + hi)/(x+1)); its sign variations bound the roots in (lo, hi).
inline std::vector<Rational> mobius(const IntPoly& f, const Rational& lo, const Rational& hi) {
  const int n = f.degree();
  std::vector<Rational> out(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> term{Rational(f[i])};
    for (int k = 0; k < i; ++k) term = poly_mul(term, {hi, lo});
    for (int k = i; k < n; ++k) term = poly_mul(term, {Rational(1), Rational(1)});
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k];
  }
  return out;
}

inline Rational eval(const IntPoly& f, const Rational& x) {
  Rational acc = 0;
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f[k];
  return acc;
}

/// Real roots of a squarefree polynomial by Descartes bisection (Vincent-Collins-Akritas).
inline unsigned descartes_real_roots(const IntPoly& f) {
  Integer bound = 1;
  for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, Integer(abs(f[i]) / abs(f.leading()) + 2));
  std::function<unsigned(const IntPoly&, Rational, Rational)> count = [&](const IntPoly& g, Rational lo,
                                                                         Rational hi) -> unsigned {
    int v = sign_variations(mobius(g, lo, hi));
    if (v <= 1) return static_cast<unsigned>(v);
    Rational mid = (lo + hi) / 2;
    return count(g, lo, mid) + count(g, mid, hi) + (eval(g, mid) == 0 ? 1u : 0u);
  };
  std::vector<Integer> neg = f.coeffs();
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  IntPoly g(neg);
  unsigned total = f[0] == 0 ? 1 : 0;
  total += count(f, 0, Rational(bound));
  total += count(g, 0, Rational(bound));
  return total;
}

/// Solves x * M = v over Q for square nonsingular M.
inline std::vector<Rational> solve_left(const RatRows& m, const std::vector<Rational>& v) {
  const std::size_t n = m.size();
  // Transpose into an augmented system M^T x^T = v^T.
  RatRows a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];
    a[i][n] = v[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

/// v lies in the Z-span of the rows of a square nonsingular integer matrix.
template <typename Matrix>
bool lattice_contains(const Matrix& basis, const std::vector<Integer>& v) {
  RatRows m(basis.rows(), std::vector<Rational>(basis.cols()));
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) m[i][j] = basis(i, j);
  std::vector<Rational> rv(v.begin(), v.end());
  for (const auto& c : solve_left(m, rv))
    if (c.get_den() != 1) return false;
  return true;
}

template <typename Matrix>
bool same_lattice(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!lattice_contains(b, std::vector<Integer>(a.row(i).begin(), a.row(i).end()))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!lattice_contains(a, std::vector<Integer>(b.row(i).begin(), b.row(i).end()))) return false;
  return true;
}

/// Squares modulo p by enumeration.
inline std::set<long> squares_mod(long p) {
  std::set<long> s;
  for (long x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

/// Exhaustive search for a monic quadratic factor x^2 + a x + b of a monic
/// quartic with integer coefficients (|a| <= bound, b | f(0)).
inline bool has_quadratic_factor(const IntPoly& f, long bound) {
  Integer c0 = abs(f[0]);
  std::vector<Integer> divisors;
  for (Integer d = 1; d * d <= c0; ++d)
    if (c0 % d == 0) {
      divisors.push_back(d);
      divisors.push_back(c0 / d);
    }
  for (const auto& d : divisors)
    for (int sign : {1, -1})
      for (long a = -bound; a <= bound; ++a) {
        IntPoly q(std::vector<Integer>{Integer(sign * d), Integer(a), Integer(1)});
        // Remainder of f modulo the monic q.
        std::vector<Integer> r = f.coeffs();
        for (int k = f.degree(); k >= 2; --k) {
          Integer c = r[k];
          for (int j = 0; j <= 2; ++j) r[k - 2 + j] -= c * q[j];
        }
        if (r[0] == 0 && r[1] == 0) return true;
      }
  return false;
}

}  // namespace oracle
