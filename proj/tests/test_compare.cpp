#include "doctest.h"
#include "corpus.hpp"

#include "gammafield/compare.hpp"
#include "gammafield/errors.hpp"

using namespace gammafield;

namespace {

FieldAnalysis analyze(const char* text) { return analyze_field(parse_poly(text)); }

const FieldAnalysis& klein_k() {
  static const FieldAnalysis a = analyze("x^4 - 41*x^2 + 144");
  return a;
}
const FieldAnalysis& klein_l() {
  static const FieldAnalysis a = analyze("x^4 - x^3 - 46*x^2 - 115*x - 35");
  return a;
}
const FieldAnalysis& sextic_k() {
  static const FieldAnalysis a = analyze("x^6 - x^5 - 2*x^4 + x^3 + 7*x^2 - 6*x + 4");
  return a;
}
const FieldAnalysis& sextic_l() {
  static const FieldAnalysis a = analyze("x^6 - 3*x^5 + 10*x^4 - 15*x^3 + 19*x^2 - 12*x + 3");
  return a;
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::same) == "same-spinor-genus");
  CHECK(to_string(Verdict::different) == "different");
  CHECK(to_string(Verdict::not_applicable) == "not-applicable");
}

TEST_CASE("klein pair is different") {
  auto r = compare_spinor_genus(klein_k(), klein_l());
  CHECK(r.disc_equal);
  CHECK(r.signature_equal);
  CHECK(r.verdict == Verdict::different);
  REQUIRE(r.per_prime.count(5));
  CHECK(r.per_prime.at(5).legendre_a == -1);
  CHECK(r.per_prime.at(5).legendre_b == 1);
  CHECK_FALSE(r.per_prime.at(5).equal);

  auto t = predict_by_theorem(klein_k(), klein_l());
  CHECK_FALSE(t.applicable);
  CHECK_THROWS_AS(cross_validate(klein_k(), klein_l()), DomainError);
}

TEST_CASE("sextic pair is the same") {
  auto r = compare_spinor_genus(sextic_k(), sextic_l());
  CHECK(r.verdict == Verdict::same);
  CHECK(r.per_prime.count(3));
  CHECK(r.per_prime.count(107));

  auto t = predict_by_theorem(sextic_k(), sextic_l());
  CHECK(t.applicable);
  CHECK(t.exceptional_primes == std::set<Integer>{107});
  CHECK(t.predicted_equivalent);
  CHECK(t.isometry_claim);

  auto c = cross_validate(sextic_k(), sextic_l());
  CHECK(c.consistent);
}

TEST_CASE("not applicable reasons") {
  auto q = analyze("x^2 + 1");
  auto r = compare_spinor_genus(q, q);
  CHECK(r.verdict == Verdict::not_applicable);
  CHECK(r.reason == "degree");
  CHECK(compare_spinor_genus(klein_k(), sextic_k()).reason == "degree");

  // 2 is wild in Q(2^(1/3)).
  auto w = analyze("x^3 - 2");
  auto rw = compare_spinor_genus(w, w);
  CHECK(rw.verdict == Verdict::not_applicable);
  CHECK(rw.reason == "wild");
  CHECK_FALSE(predict_by_theorem(w, w).applicable);
}

TEST_CASE("unequal discriminants keep informational data") {
  auto a = analyze("x^3 - x^2 - 2*x + 1");
  auto b = analyze("x^3 + x^2 - 4*x + 1");
  auto r = compare_spinor_genus(a, b);
  CHECK_FALSE(r.disc_equal);
  CHECK(r.verdict == Verdict::different);
  for (const auto& [p, pc] : r.per_prime) CHECK(pc.informational);
}

TEST_CASE("comparison is an equivalence relation on tame cubics and quartics") {
  std::vector<FieldAnalysis> fields;
  for (const auto& e : corpus::full_corpus()) {
    auto a = analyze_field(parse_poly(e.poly));
    if (a.n >= 3 && a.n <= 4 && a.gamma.is_tame) fields.push_back(std::move(a));
  }
  REQUIRE(fields.size() >= 10);
  const std::size_t n = fields.size();
  std::vector<std::vector<Verdict>> v(n, std::vector<Verdict>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i][j] = compare_spinor_genus(fields[i], fields[j]).verdict;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(v[i][i] == Verdict::same);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(v[i][j] == v[j][i]);
      if (v[i][j] == Verdict::same) {
        auto r = compare_spinor_genus(fields[i], fields[j]);
        CHECK(r.disc_equal);
        CHECK(r.signature_equal);
      }
      for (std::size_t k = 0; k < n; ++k)
        if (v[i][j] == Verdict::same && v[j][k] == Verdict::same && fields[i].n == fields[k].n)
          CHECK(v[i][k] == Verdict::same);
    }
  }
}

TEST_CASE("reflexive prediction for a Gamma field without exceptional prime") {
  auto s4 = analyze("x^4 - x^3 - 7*x^2 + 11*x + 3");
  auto t = predict_by_theorem(s4, s4);
  CHECK(t.applicable);
  CHECK(t.predicted_equivalent);
  // disc -205379 < 0, so the field has a complex pair.
  CHECK(t.isometry_claim);
  CHECK(cross_validate(s4, s4).consistent);
}
