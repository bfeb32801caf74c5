#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gammafield/integer.hpp"
#include "gammafield/matrix.hpp"
#include "gammafield/order.hpp"
#include "gammafield/poly.hpp"
#include "gammafield/splitting.hpp"

namespace gammafield {

/// Field signature: r real embeddings, s pairs of complex embeddings.
struct FieldSignature {
  unsigned r = 0;
  unsigned s = 0;
  bool operator==(const FieldSignature&) const = default;
  auto operator<=>(const FieldSignature&) const = default;
};

/// Inertia of a real symmetric form.
struct FormSignature {
  unsigned pos = 0;
  unsigned neg = 0;
  bool operator==(const FormSignature&) const = default;
};

/// Integral trace form (x, y) -> Tr(xy) on an integral basis.
struct TraceForm {
  IntMatrix gram;
  Integer det;
  FormSignature signature;
};

/// Square class of the first ramification invariant at an odd prime.
struct AlphaClass {
  Integer p;
  int legendre = 1;
  /// 1 when the class is a square, otherwise the least non-residue u_p.
  Integer unit_rep = 1;
  bool operator==(const AlphaClass&) const = default;
};

/// The three conditions imposed on an odd ramified prime of a Gamma field.
struct PrimeConditions {
  bool eps_split = false;
  bool g_odd = false;
  bool n_over_e_odd = false;
  bool satisfied() const { return eps_split && g_odd && n_over_e_odd; }
  bool operator==(const PrimeConditions&) const = default;
};

struct GammaClassification {
  bool is_tame = true;
  bool is_gamma = false;
  std::optional<Integer> exceptional;
  std::map<Integer, PrimeConditions> per_prime;
};

struct FieldAnalysis {
  IntPoly f;
  unsigned n = 0;
  FieldSignature signature;
  MaximalOrder max_order;
  Integer poly_disc;
  Integer disc;
  /// Keyed by every prime dividing disc.
  std::map<Integer, SplittingType> splittings;
  TraceForm trace_form;
  /// Odd tame ramified primes only.
  std::map<Integer, AlphaClass> alphas;
  GammaClassification gamma;

  const PrimeFactorization& disc_factored() const { return max_order.disc_factored; }
  bool totally_real() const { return signature.s == 0; }
};

FieldSignature field_signature(const IntPoly& f);

/// Power sums Tr(theta^k), k = 0..count-1, via Newton's identities.
std::vector<Integer> power_sums(const IntPoly& f, std::size_t count);

TraceForm gram_matrix(const MaximalOrder& m);
TraceForm gram_matrix(const Order& o);

/// Exact congruence diagonalization over Q. Throws SingularFormError.
FormSignature form_signature(const IntMatrix& gram);

/// Legendre class of prod(e_i^f_i) * u_p^(F-g) at the odd prime S.p.
AlphaClass alpha_invariant(const SplittingType& s);

bool is_epsilon_split_homogeneous(const SplittingType& s);

/// Classification from the splitting data of every ramified prime.
GammaClassification classify_gamma(unsigned degree, const std::map<Integer, SplittingType>& splittings);
GammaClassification classify_gamma(const FieldAnalysis& a);

/// Square class at p of the rational n / (n - v).
AlphaClass lemma_square_class(unsigned n, unsigned v, const Integer& p);

/// alpha_invariant at p agrees with lemma_square_class(n, v_p(disc), p).
bool verify_lemma(const FieldAnalysis& a, const Integer& p);

/// Full analysis of the field defined by a monic irreducible polynomial.
FieldAnalysis analyze_field(const IntPoly& f);

}  // namespace gammafield
