#pragma once

#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/poly.hpp"

namespace gammafield {

struct ZFactor {
  IntPoly factor;  // primitive, positive leading coefficient
  unsigned multiplicity;
  bool operator==(const ZFactor&) const = default;
};

struct ZFactorization {
  Integer content;  // signed, so that content * prod(factors^mult) == f
  std::vector<ZFactor> factors;

  IntPoly product() const;
};

/// Squarefree decomposition of a primitive polynomial with positive leading coefficient.
std::vector<ZFactor> squarefree_decomposition(const IntPoly& f);

/// Factorization over Z: squarefree decomposition, Hensel lifting of a mod-p
/// factorization past the Mignotte bound, then subset recombination.
/// Factors are sorted by (degree, coefficients).
ZFactorization factor_over_Z(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

}  // namespace gammafield
