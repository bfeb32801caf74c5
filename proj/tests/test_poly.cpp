#include "doctest.h"
#include "corpus.hpp"
#include "oracles.hpp"

#include "gammafield/errors.hpp"
#include "gammafield/fp_poly.hpp"
#include "gammafield/poly.hpp"
#include "gammafield/zfactor.hpp"

using namespace gammafield;

TEST_CASE("parse_poly") {
  CHECK(parse_poly("x^4 - 41*x^2 + 144") == IntPoly{144, 0, -41, 0, 1});
  CHECK(parse_poly("144,0,-41,0,1") == IntPoly{144, 0, -41, 0, 1});
  CHECK(parse_poly(" x^2+ 2x -3 ") == IntPoly{-3, 2, 1});
  CHECK(parse_poly("x - 1") == IntPoly{-1, 1});
  CHECK(parse_poly("7") == IntPoly{7});
  CHECK_THROWS_AS(parse_poly("x^2 + 0.5"), ParseError);
  CHECK_THROWS_AS(parse_poly("1,2.5"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^2 + y"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
}

TEST_CASE("to_string round trips") {
  for (const auto& e : corpus::full_corpus()) {
    IntPoly f = parse_poly(e.poly);
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_poly(f.to_coeff_list()) == f);
  }
}

TEST_CASE("poly_discriminant examples") {
  CHECK(poly_discriminant(IntPoly{1, 0, 1}) == -4);
  CHECK(poly_discriminant(IntPoly{-1, -1, 0, 1}) == -23);
  CHECK(poly_discriminant(IntPoly{144, 0, -41, 0, 1}) == Integer("2813241600"));
  CHECK(Integer("2813241600") == Integer(48 * 48) * 1221025);
  CHECK_THROWS_AS(poly_discriminant(IntPoly{5}), DegenerateInputError);
}

TEST_CASE("discriminant agrees with the Sylvester determinant") {
  for (const auto& e : corpus::full_corpus()) {
    IntPoly f = parse_poly(e.poly);
    CHECK(poly_discriminant(f) == oracle::discriminant(f));
  }
  // Non-monic and non-squarefree inputs.
  IntPoly g{3, -2, 0, 5};
  CHECK(poly_discriminant(g) == oracle::discriminant(g));
  IntPoly h = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 0, 1};
  CHECK(poly_discriminant(h) == 0);
}

TEST_CASE("discriminant vanishes iff gcd(f, f') is nontrivial") {
  std::vector<IntPoly> polys{IntPoly{1, 2, 1}, IntPoly{-1, 0, 1}, IntPoly{0, 0, 1, 1}, IntPoly{4, 4, 5, 4, 1},
                             IntPoly{1, 1, 1, 1}};
  for (const auto& e : corpus::generated_fields(20)) polys.push_back(parse_poly(e.poly));
  for (const auto& f : polys) CHECK((poly_discriminant(f) == 0) == (gcd(f, f.derivative()).degree() > 0));
}

TEST_CASE("resultant agrees with Sylvester") {
  IntPoly a{1, -3, 0, 2}, b{-7, 4, 1};
  CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  IntPoly c{2, 0, 0, 0, 1, 3};
  CHECK(resultant(c, a) == oracle::sylvester_resultant(c, a));
}

TEST_CASE("sturm examples") {
  CHECK(sturm_count_real_roots(IntPoly{1, 0, 1}) == 0);
  CHECK(sturm_count_real_roots(IntPoly{-1, -1, 0, 1}) == 1);
  CHECK(sturm_count_real_roots(IntPoly{144, 0, -41, 0, 1}) == 4);
  CHECK_THROWS_AS(sturm_count_real_roots(IntPoly{1, 2, 1}), PreconditionError);
}

TEST_CASE("sturm agrees with Descartes bisection on the corpus") {
  auto gen = corpus::generated_fields(50);
  REQUIRE(gen.size() == 50);
  for (const auto& e : gen) {
    IntPoly f = parse_poly(e.poly);
    unsigned r = sturm_count_real_roots(f);
    CHECK(r == oracle::descartes_real_roots(f));
    CHECK((f.degree() - static_cast<int>(r)) % 2 == 0);
  }
  for (const auto& e : corpus::example_fields()) {
    IntPoly f = parse_poly(e.poly);
    CHECK(sturm_count_real_roots(f) == oracle::descartes_real_roots(f));
  }
}

TEST_CASE("factor_mod_p examples") {
  auto f = factor_mod_p(IntPoly{1, 0, 1}, 5);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == FpPoly(IntPoly{2, 1}, 5));
  CHECK(f[1].factor == FpPoly(IntPoly{3, 1}, 5));
  CHECK(f[0].multiplicity == 1);

  auto g = factor_mod_p(IntPoly{1, 0, 1}, 3);
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor == FpPoly(IntPoly{1, 0, 1}, 3));

  auto k = factor_mod_p(IntPoly{144, 0, -41, 0, 1}, 5);
  REQUIRE(k.size() == 1);
  CHECK(k[0].factor.degree() == 2);
  CHECK(k[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 0, 1}, 15), InvalidPrimeError);
  CHECK_THROWS_AS(factor_mod_p(IntPoly{5, 10}, 5), DegenerateInputError);
}

namespace {

bool brute_irreducible(const FpPoly& f, const Integer& p) {
  // No monic factor of degree <= deg/2, by enumeration over tiny fields.
  const long q = p.get_si();
  for (int d = 1; d <= f.degree() / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long code = 0; code < count; ++code) {
      std::vector<Integer> c(d + 1);
      long t = code;
      for (int i = 0; i < d; ++i, t /= q) c[i] = t % q;
      c[d] = 1;
      if (fp_rem(f, FpPoly(c, p), p).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("factor_mod_p re-multiplies and factors are irreducible") {
  for (const auto& e : corpus::full_corpus()) {
    IntPoly f = parse_poly(e.poly);
    for (long p : {2L, 3L, 5L, 7L, 11L, 101L, 32009L}) {
      FpPoly fp(f, p);
      auto factors = factor_mod_p(f, p);
      FpPoly prod = FpPoly::one();
      for (const auto& [g, m] : factors)
        for (unsigned i = 0; i < m; ++i) prod = fp_mul(prod, g, p);
      CHECK(prod == fp_monic(fp, p));
      for (std::size_t i = 0; i < factors.size(); ++i) {
        CHECK(factors[i].factor.leading() == 1);
        if (i + 1 < factors.size()) CHECK(canonical_less(factors[i].factor, factors[i + 1].factor));
        if (p <= 7 && factors[i].factor.degree() <= 6) CHECK(brute_irreducible(factors[i].factor, p));
      }
    }
  }
}

TEST_CASE("factor_mod_p is deterministic") {
  IntPoly f = parse_poly("x^8 + 3*x^7 - x^5 + 2*x^2 - 1");
  for (long p : {2L, 3L, 13L, 10007L}) CHECK(factor_mod_p(f, p) == factor_mod_p(f, p));
}

TEST_CASE("factor_over_Z examples") {
  auto a = factor_over_Z(IntPoly{-1, 0, 1});
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].factor == IntPoly{-1, 1});
  CHECK(a.factors[1].factor == IntPoly{1, 1});

  IntPoly klein{144, 0, -41, 0, 1};
  CHECK(is_irreducible(klein));
  CHECK_FALSE(oracle::has_quadratic_factor(klein, 60));
  CHECK(factor_over_Z(klein).factors.size() == 1);

  CHECK(is_irreducible(parse_poly("x^6 - x^5 - 2*x^4 + x^3 + 7*x^2 - 6*x + 4")));
  // Swinnerton-Dyer polynomial: splits into linears or quadratics mod every prime.
  CHECK(is_irreducible(IntPoly{1, 0, -10, 0, 1}));
  CHECK_FALSE(is_irreducible(IntPoly{4, 0, -5, 0, 1}));
}

TEST_CASE("factor_over_Z reconstructs products") {
  std::vector<IntPoly> polys{
      IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 0, 1},
      IntPoly{6, 0, -5, 0, 1} * IntPoly{-3, 2},
      -Integer(6) * IntPoly{1, 0, -10, 0, 1} * IntPoly{1, 1, 1},
      IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{-7, 0, 0, 1},
  };
  for (const auto& e : corpus::generated_fields(10)) polys.push_back(parse_poly(e.poly) * IntPoly{5, -1, 1});
  for (const auto& f : polys) {
    auto z = factor_over_Z(f);
    CHECK(z.product() == f);
    for (const auto& [g, m] : z.factors) {
      CHECK(g.leading() > 0);
      CHECK(g.content() == 1);
      if (g.degree() == 4) CHECK_FALSE(oracle::has_quadratic_factor(g, 100));
    }
  }
  CHECK(factor_over_Z(polys[1]).factors.size() == 3);
  CHECK(factor_over_Z(polys[2]).content == -6);
}

TEST_CASE("squarefree decomposition") {
  IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 0, 1} * IntPoly{2, 0, 1} * IntPoly{2, 0, 1};
  auto d = squarefree_decomposition(f);
  REQUIRE(d.size() == 2);
  CHECK(d[0].factor == IntPoly{-1, 1});
  CHECK(d[0].multiplicity == 2);
  CHECK(d[1].factor == IntPoly{2, 0, 1});
  CHECK(d[1].multiplicity == 3);
}
