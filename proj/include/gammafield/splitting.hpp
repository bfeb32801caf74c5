#pragma once

#include <compare>
#include <vector>

#include "gammafield/algebra.hpp"
#include "gammafield/integer.hpp"
#include "gammafield/order.hpp"

namespace gammafield {

/// Ramification index e and residue degree f of one prime above p.
struct RamificationPair {
  unsigned e = 1;
  unsigned f = 1;
  auto operator<=>(const RamificationPair&) const = default;
};

/// Splitting type of a rational prime: the multiset of (e_i, f_i), sorted ascending.
struct SplittingType {
  Integer p;
  std::vector<RamificationPair> pairs;

  SplittingType() = default;
  SplittingType(Integer prime, std::vector<RamificationPair> pairs);

  unsigned g() const { return static_cast<unsigned>(pairs.size()); }
  /// Sum of residue degrees.
  unsigned F() const;
  /// Sum of e_i f_i; equals the field degree.
  unsigned degree() const;
  bool is_ramified() const;
  bool operator==(const SplittingType&) const = default;
};

bool is_tame(const SplittingType& s);

QuotientAlgebra quotient_algebra(const MaximalOrder& m, const Integer& p);

/// Decomposition of O_K/pO_K into local factors. Valid for every prime.
SplittingType split_prime_by_algebra(const MaximalOrder& m, const Integer& p);

/// Shape of f mod p (multiplicity, degree). Valid only when p does not divide the index.
SplittingType split_prime_by_factorization(const IntPoly& f, const Integer& p);

/// Uses the factorization shortcut when p does not divide the index.
SplittingType split_prime(const MaximalOrder& m, const Integer& p);

}  // namespace gammafield
