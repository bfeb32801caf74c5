#pragma once

#include <map>
#include <set>
#include <string>

#include "gammafield/integer.hpp"
#include "gammafield/invariants.hpp"

namespace gammafield {

enum class Verdict { same, different, not_applicable };

std::string to_string(Verdict v);

struct PrimeComparison {
  int legendre_a = 1;
  int legendre_b = 1;
  bool equal = true;
  /// Reported for primes of gcd(disc_A, disc_B) when the discriminants differ.
  bool informational = false;
};

/// Outcome of the three-condition spinor genus test for tame trace forms.
struct SpinorReport {
  bool disc_equal = false;
  bool signature_equal = false;
  std::map<Integer, PrimeComparison> per_prime;
  Verdict verdict = Verdict::not_applicable;
  /// Set when verdict is not_applicable: "degree" or "wild".
  std::string reason;
};

struct TheoremPrediction {
  bool applicable = false;
  std::string reason;
  bool predicted_equivalent = false;
  bool isometry_claim = false;
  std::set<Integer> exceptional_primes;
};

struct CrossValidation {
  SpinorReport report;
  TheoremPrediction prediction;
  bool consistent = false;
};

SpinorReport compare_spinor_genus(const FieldAnalysis& a, const FieldAnalysis& b);

TheoremPrediction predict_by_theorem(const FieldAnalysis& a, const FieldAnalysis& b);

/// Runs both paths; throws DomainError when either is inapplicable.
CrossValidation cross_validate(const FieldAnalysis& a, const FieldAnalysis& b);

}  // namespace gammafield
