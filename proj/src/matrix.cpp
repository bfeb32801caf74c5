#include "gammafield/matrix.hpp"

#include <utility>

#include "gammafield/errors.hpp"

namespace gammafield {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix hnf_rows(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    // Euclid on column c across rows pivot_row..rows-1.
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(pivot_row, c) == 0) {
        m.swap_rows(pivot_row, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(pivot_row, c).get_mpz_t(),
                 m(i, c).get_mpz_t());
      Integer a = m(pivot_row, c) / g, b = m(i, c) / g;
      for (std::size_t j = c; j < cols; ++j) {
        Integer top = s * m(pivot_row, j) + t * m(i, j);
        Integer bottom = a * m(i, j) - b * m(pivot_row, j);
        m(pivot_row, j) = std::move(top);
        m(i, j) = std::move(bottom);
      }
    }
    if (m(pivot_row, c) == 0) continue;
    if (m(pivot_row, c) < 0)
      for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) = -m(pivot_row, j);
    const Integer& piv = m(pivot_row, c);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(pivot_row, j);
    }
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = hnf_rows(m);
  if (h.rows() < std::min(m.rows(), m.cols())) throw RankError("matrix is rank deficient");
  return h;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = input, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularFormError("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv_inv = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= piv_inv;
      inv(c, j) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::size_t row_reduce_mod(IntMatrix& m, const Integer& p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = mod(m(i, j), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    Integer inv = invmod(m(r, c), p);
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Integer f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = mod(m(i, j) - f * m(r, j), p);
    }
    ++r;
  }
  return r;
}

IntMatrix left_kernel_mod(const IntMatrix& m, const Integer& p) {
  // v * M = 0  <=>  M^T v^T = 0: right nullspace of the transpose.
  IntMatrix t = m.transpose();
  const std::size_t rank = row_reduce_mod(t, p);
  const std::size_t n = t.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (t(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  IntMatrix kernel(0, n);
  std::vector<Integer> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    for (auto& x : v) x = 0;
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = mod(-t(i, free), p);
    kernel.append_row(v);
  }
  return kernel;
}

IntMatrix row_space_mod(const IntMatrix& m, const Integer& p) {
  IntMatrix r = m;
  const std::size_t rank = row_reduce_mod(r, p);
  IntMatrix out(rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

IntMatrix multiply_mod(const IntMatrix& a, const IntMatrix& b, const Integer& p) {
  IntMatrix c = a * b;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = mod(c(i, j), p);
  return c;
}

}  // namespace gammafield
