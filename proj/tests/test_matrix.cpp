#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "gammafield/errors.hpp"
#include "gammafield/matrix.hpp"

using namespace gammafield;

TEST_CASE("hnf examples") {
  CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hnf(IntMatrix{{2, 0}, {1, 1}}) == IntMatrix{{1, 1}, {0, 2}});
  CHECK(hnf(IntMatrix{{4, 6}, {2, 2}}) == IntMatrix{{2, 0}, {0, 2}});
  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), RankError);
}

TEST_CASE("hnf spans the same lattice and is canonical") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 41) - 20;
    if (determinant(m) == 0) continue;
    IntMatrix h = hnf(m);
    CHECK(oracle::same_lattice(h, m));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h(i, i) > 0);
      for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h(k, i) >= 0);
        CHECK(h(k, i) < h(i, i));
      }
    }
    CHECK(abs(determinant(m)) == abs(determinant(h)));
    // Unimodular change of basis leaves the HNF unchanged.
    IntMatrix u = m;
    for (std::size_t j = 0; j < n; ++j) u(0, j) += 3 * m(n - 1, j);
    u.swap_rows(0, n - 1);
    CHECK(hnf(u) == h);
  }
}

TEST_CASE("determinant agrees with elimination over Q") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 6;
    IntMatrix m(n, n);
    oracle::RatRows r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = m(i, j) = static_cast<long>(rng() % 21) - 10;
    CHECK(Rational(determinant(m)) == oracle::determinant(r));
  }
}

TEST_CASE("inverse") {
  RatMatrix m = to_rational(IntMatrix{{2, 1}, {1, 3}});
  RatMatrix inv = inverse(m);
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), SingularFormError);
}

TEST_CASE("linear algebra mod p") {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  IntMatrix work = m;
  CHECK(row_reduce_mod(work, 7) == 2);
  IntMatrix k = left_kernel_mod(m, 7);
  REQUIRE(k.rows() == 1);
  IntMatrix prod = multiply_mod(k, m, 7);
  for (std::size_t j = 0; j < 3; ++j) CHECK(prod(0, j) == 0);
  CHECK(row_space_mod(m, 7).rows() == 2);
  CHECK(left_kernel_mod(IntMatrix::identity(3), 5).rows() == 0);
}
