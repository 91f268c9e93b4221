#include <random>

#include "doctest.h"
#include "nsphere/errors.hpp"
#include "nsphere/matrix.hpp"
#include "oracle.hpp"

using namespace nsphere;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread = 5) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = BigRational(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("rational printing") {
  CHECK(to_string(BigRational(1, 6)) == "1/6");
  CHECK(to_string(BigRational(-2)) == "-2");
  CHECK(to_string(BigRational(-1, 2)) == "-1/2");
  CHECK(to_string(BigRational(0)) == "0");
  CHECK(parse_rational("3/12") == BigRational(1, 4));
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(factorial(5) == 120);
  CHECK(int_pow(-3, 3) == -27);
}

TEST_CASE("small fixed matrices") {
  const RationalMatrix a{{2, 1}, {1, 1}};
  CHECK(determinant(a) == 1);
  CHECK(invert(a) == RationalMatrix{{1, -1}, {-1, 2}});
  const RationalMatrix s{{1, 2}, {2, 4}};
  CHECK(determinant(s) == 0);
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS(invert(s), SingularMatrix);
  CHECK(pseudo_inverse(s) == RationalMatrix{{BigRational(1, 25), BigRational(2, 25)},
                                            {BigRational(2, 25), BigRational(4, 25)}});
  const auto e = row_echelon(s);
  CHECK(e.pivots == std::vector<std::size_t>{0});
  CHECK(e.reduced == RationalMatrix{{1, 2}, {0, 0}});
  CHECK(determinant(RationalMatrix{}) == 1);
}

TEST_CASE("property: inverse round trip and determinant against plain elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = 1 + trial % 6;
    const auto m = random_matrix(rng, size, size);
    const auto det = determinant(m);
    CHECK(det == oracle::determinant_gauss(m));
    if (det == 0) {
      CHECK_THROWS_AS(invert(m), SingularMatrix);
      continue;
    }
    const auto inv = invert(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    CHECK(determinant(inv) == 1 / det);
  }
}

TEST_CASE("property: det(AB) = det(A) det(B)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t size = 1 + trial % 5;
    const auto a = random_matrix(rng, size, size);
    const auto b = random_matrix(rng, size, size);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("property: rank(M) = rank(M^T), matches plain elimination") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + trial % 5;
    const std::size_t k = 1 + (trial / 5) % 3;
    // product of r x k and k x r has rank <= k
    const auto m = random_matrix(rng, r, k, 2) * random_matrix(rng, k, r + 1, 2);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) == oracle::rank_gauss(m));
    CHECK(rank(m) <= k);
  }
}

TEST_CASE("property: Penrose identities for the pseudo-inverse") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = 2 + trial % 4;
    const std::size_t k = 1 + trial % 3;
    const auto m = random_matrix(rng, r, k, 3) * random_matrix(rng, k, r, 3);
    const auto p = pseudo_inverse(m);
    CHECK(m * p * m == m);
    CHECK(p * m * p == p);
    CHECK((m * p).symmetric());
    CHECK((p * m).symmetric());
    if (determinant(m) != 0) CHECK(p == invert(m));
  }
  CHECK(pseudo_inverse(RationalMatrix(2, 3)) == RationalMatrix(3, 2));
}

TEST_CASE("matrix helpers") {
  const RationalMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.transpose().rows() == 3);
  CHECK(m.top_left(1, 2) == RationalMatrix{{1, 2}});
  CHECK_FALSE(m.symmetric());
  CHECK(RationalMatrix::identity(3).is_identity());
  CHECK_THROWS_AS(determinant(m), InvalidInput);
}
