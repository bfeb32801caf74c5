#pragma once

#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/matrix.hpp"
#include "gammafield/order.hpp"

namespace gammafield {

/// Finite commutative F_p-algebra O/pO given by structure constants on the
/// reduced order basis. Elements are coordinate vectors with entries in [0, p).
struct QuotientAlgebra {
  Integer p;
  std::size_t dim = 0;
  MultTable mult_table;
  /// Coordinates of the identity element.
  std::vector<Integer> unit;

  QuotientAlgebra() = default;
  QuotientAlgebra(const MultTable& table, const Integer& p, std::vector<Integer> unit);

  std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const;
  std::vector<Integer> power(const std::vector<Integer>& a, const Integer& e) const;
  std::vector<Integer> basis_vector(std::size_t i) const;

  /// Row i holds the coordinates of (basis_i)^p; x -> x^p is F_p-linear.
  IntMatrix frobenius_matrix() const;
  /// Nilradical as the kernel of the k-fold Frobenius with p^k >= dim (rows = basis).
  IntMatrix radical() const;
  /// Matrix of multiplication by a: row i = a * basis_i.
  IntMatrix multiplication_matrix(const std::vector<Integer>& a) const;
};

}  // namespace gammafield
