#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gammafield/integer.hpp"

namespace gammafield {

/// Dense row-major matrix over an exact scalar type.
template <typename Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const Scalar> r) { data_.insert(data_.end(), r.begin(), r.end()), ++rows_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix to_rational(const IntMatrix& m);

/// Row Hermite normal form: upper triangular, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are dropped. Throws RankError
/// unless rank = min(rows, cols).
IntMatrix hnf(const IntMatrix& m);

/// Same as hnf() but keeps rank-deficient inputs; returns the nonzero rows.
IntMatrix hnf_rows(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Exact inverse; throws SingularFormError when singular.
RatMatrix inverse(const RatMatrix& m);

// Linear algebra over F_p. Entries are reduced into [0, p) on input.

/// Reduced row echelon form modulo p; returns the rank.
std::size_t row_reduce_mod(IntMatrix& m, const Integer& p);

/// Basis (as rows) of {v : v * M = 0 mod p}.
IntMatrix left_kernel_mod(const IntMatrix& m, const Integer& p);

/// Basis (as rows) of the row space of M modulo p.
IntMatrix row_space_mod(const IntMatrix& m, const Integer& p);

IntMatrix multiply_mod(const IntMatrix& a, const IntMatrix& b, const Integer& p);

}  // namespace gammafield
