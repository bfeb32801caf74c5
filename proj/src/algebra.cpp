#include "gammafield/algebra.hpp"

namespace gammafield {

QuotientAlgebra::QuotientAlgebra(const MultTable& table, const Integer& modulus, std::vector<Integer> one)
    : p(modulus), dim(table.dim()), mult_table(table.dim()), unit(std::move(one)) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) mult_table(i, j, k) = mod(table(i, j, k), p);
  for (auto& c : unit) c = mod(c, p);
}

std::vector<Integer> QuotientAlgebra::multiply(const std::vector<Integer>& a,
                                               const std::vector<Integer>& b) const {
  std::vector<Integer> c(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Integer ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (mult_table(i, j, k) != 0) c[k] += ab * mult_table(i, j, k);
    }
  }
  for (auto& x : c) x %= p;
  return c;
}

std::vector<Integer> QuotientAlgebra::power(const std::vector<Integer>& a, const Integer& e) const {
  std::vector<Integer> result = unit;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = multiply(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = multiply(result, a);
  }
  return result;
}

std::vector<Integer> QuotientAlgebra::basis_vector(std::size_t i) const {
  std::vector<Integer> v(dim);
  v[i] = 1;
  return v;
}

IntMatrix QuotientAlgebra::frobenius_matrix() const {
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto v = power(basis_vector(i), p);
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = v[j];
  }
  return m;
}

IntMatrix QuotientAlgebra::radical() const {
  IntMatrix frob = frobenius_matrix();
  IntMatrix iterated = frob;
  for (Integer pk = p; pk < Integer(dim); pk *= p) iterated = multiply_mod(iterated, frob, p);
  return left_kernel_mod(iterated, p);
}

IntMatrix QuotientAlgebra::multiplication_matrix(const std::vector<Integer>& a) const {
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto v = multiply(a, basis_vector(i));
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = v[j];
  }
  return m;
}

}  // namespace gammafield
