#pragma once

#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/matrix.hpp"
#include "gammafield/poly.hpp"

namespace gammafield {

/// Element of Q(theta) in power-basis coordinates.
using FieldElement = std::vector<Rational>;

/// A full-rank Z-lattice in Q(theta) containing Z[theta] and closed under
/// multiplication. Row i of `basis` over `denom` is the i-th basis element in
/// power-basis coordinates. The basis is in lower-triangular row HNF, so row 0
/// is the element 1.
struct Order {
  IntPoly defining_poly;
  IntMatrix basis;
  Integer denom = 1;
  Integer disc;

  std::size_t degree() const { return basis.rows(); }
  FieldElement element(std::size_t i) const;
  /// [O : Z[theta]]
  Integer index() const;
  bool operator==(const Order& o) const { return basis == o.basis && denom == o.denom; }
};

struct MaximalOrder {
  Order order;
  Integer index;
  PrimeFactorization disc_factored;
};

/// Structure constants: basis_i * basis_j = sum_k table(i, j, k) basis_k.
class MultTable {
 public:
  MultTable() = default;
  explicit MultTable(std::size_t n) : n_(n), entries_(n * n * n) {}
  std::size_t dim() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * n_ + j) * n_ + k]; }
  const Integer& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * n_ + j) * n_ + k];
  }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

struct DedekindResult {
  bool p_maximal = true;
  /// Elements u(theta) * theta^j / p that enlarge Z[theta] at p; empty when p-maximal.
  std::vector<FieldElement> enlargement;
};

Order equation_order(const IntPoly& f);

/// Canonical order from generators: numerator rows over a common denominator.
/// The result spans the same lattice, with lower-triangular HNF basis and the
/// smallest possible denominator.
Order order_from_generators(const IntPoly& f, const IntMatrix& numerators, const Integer& denom);

/// Lower-triangular row HNF: row i has its pivot in column i; entries left of a
/// pivot in later rows are reduced modulo that pivot.
IntMatrix lower_hnf(const IntMatrix& m);

/// Coordinates of x in the order's basis (rational; integral iff x is in the order).
std::vector<Rational> order_coordinates(const Order& o, const FieldElement& x);
bool contains(const Order& o, const FieldElement& x);
FieldElement multiply(const IntPoly& f, const FieldElement& a, const FieldElement& b);

/// Throws ConsistencyError when the lattice is not closed under multiplication.
MultTable multiplication_table(const Order& o);

DedekindResult dedekind_is_pmaximal(const IntPoly& f, const Integer& p);

/// Round 2: p-maximal order containing Z[theta]; its denominator is a power of p.
Order pmaximalize(const IntPoly& f, const Integer& p);

/// Ring of integers. Throws InputError for non-monic or reducible input.
MaximalOrder maximal_order(const IntPoly& f);

}  // namespace gammafield
