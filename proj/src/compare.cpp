#include "gammafield/compare.hpp"

#include "gammafield/errors.hpp"

namespace gammafield {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::same:
      return "same-spinor-genus";
    case Verdict::different:
      return "different";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

SpinorReport compare_spinor_genus(const FieldAnalysis& a, const FieldAnalysis& b) {
  SpinorReport r;
  r.disc_equal = a.disc == b.disc;
  r.signature_equal = a.signature == b.signature;
  if (a.n != b.n || a.n < 3) {
    r.reason = "degree";
    return r;
  }
  if (!a.gamma.is_tame || !b.gamma.is_tame) {
    r.reason = "wild";
    return r;
  }
  bool all_equal = true;
  for (const auto& [p, e] : a.disc_factored().factors) {
    if (p == 2 || b.disc_factored().exponent(p) == 0) continue;
    PrimeComparison c;
    c.legendre_a = a.alphas.at(p).legendre;
    c.legendre_b = b.alphas.at(p).legendre;
    c.equal = c.legendre_a == c.legendre_b;
    c.informational = !r.disc_equal;
    all_equal = all_equal && c.equal;
    r.per_prime.emplace(p, c);
  }
  r.verdict = r.disc_equal && r.signature_equal && all_equal ? Verdict::same : Verdict::different;
  return r;
}

TheoremPrediction predict_by_theorem(const FieldAnalysis& a, const FieldAnalysis& b) {
  TheoremPrediction t;
  if (a.gamma.exceptional) t.exceptional_primes.insert(*a.gamma.exceptional);
  if (b.gamma.exceptional) t.exceptional_primes.insert(*b.gamma.exceptional);
  if (!a.gamma.is_gamma || !b.gamma.is_gamma) {
    t.reason = "not both Gamma fields";
    return t;
  }
  if (t.exceptional_primes.size() > 1) {
    t.reason = "more than one exceptional prime";
    return t;
  }
  t.applicable = true;
  t.predicted_equivalent = a.disc == b.disc && a.signature == b.signature;
  t.isometry_claim = t.predicted_equivalent && a.signature.s > 0;
  return t;
}

CrossValidation cross_validate(const FieldAnalysis& a, const FieldAnalysis& b) {
  CrossValidation cv;
  cv.prediction = predict_by_theorem(a, b);
  if (!cv.prediction.applicable) throw DomainError("theorem not applicable: " + cv.prediction.reason);
  cv.report = compare_spinor_genus(a, b);
  if (cv.report.verdict == Verdict::not_applicable)
    throw DomainError("comparator not applicable: " + cv.report.reason);
  cv.consistent = cv.prediction.predicted_equivalent == (cv.report.verdict == Verdict::same);
  return cv;
}

}  // namespace gammafield
