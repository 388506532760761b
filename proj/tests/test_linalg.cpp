#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siltwb/matrix.hpp"

using namespace siltwb;

namespace {
const Field F101 = Field::prime(101);
const Field Q = Field::rationals();

Matrix random_matrix(const Field& f, int r, int c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, d(rng));
  return m;
}
}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  for (const Field& f : {F101, Q}) {
    Scalar a(f, 7), b(f, -7);
    CHECK((a + b).is_zero());
    CHECK((a * a.inverse()).is_one());
  }
  // 2 * 51 = 102 = 1 mod 101
  CHECK(Scalar(F101, 2).inverse() == Scalar(F101, 51));
  CHECK_THROWS_AS(Scalar(F101, 1) + Scalar(Q, 1), FieldMismatch);
}

TEST_CASE("kernel_basis examples") {
  CHECK(Matrix::identity(F101, 2).kernel_basis().empty());
  CHECK(Matrix(F101, 2, 3).kernel_basis().size() == 3);

  Matrix m = Matrix::from_ints(F101, {{1, 1}, {1, 1}});
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(k[0][0] == -k[0][1]);
  CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("cokernel_basis examples") {
  CHECK(Matrix::identity(Q, 3).cokernel_basis().dim == 0);
  CHECK(Matrix(Q, 4, 2).cokernel_basis().dim == 4);
  Matrix r1 = Matrix::from_ints(F101, {{1, 2}, {2, 4}});
  auto ck = r1.cokernel_basis();
  CHECK(ck.dim == 1);
  CHECK((ck.projection * r1).is_zero());
}

TEST_CASE("solve examples") {
  Matrix id = Matrix::identity(F101, 3);
  std::vector<Scalar> b{Scalar(F101, 5), Scalar(F101, 6), Scalar(F101, 7)};
  auto x = id.solve(b);
  REQUIRE(x);
  CHECK(*x == b);

  Matrix zero(F101, 2, 2);
  CHECK_FALSE(zero.solve({Scalar(F101, 1), Scalar(F101, 0)}));

  Matrix two = Matrix::from_ints(F101, {{2}});
  auto y = two.solve({Scalar(F101, 1)});
  REQUIRE(y);
  CHECK((*y)[0] == Scalar(F101, 51));
}

TEST_CASE("rank-nullity and cokernel annihilation on random matrices") {
  std::mt19937 rng(7);
  for (const Field& f : {F101, Q}) {
    for (int trial = 0; trial < 40; ++trial) {
      int r = trial % 5, c = (trial * 3) % 5;
      Matrix m = random_matrix(f, r, c, rng);
      CHECK(m.rank() + (int)m.kernel_basis().size() == c);
      auto ck = m.cokernel_basis();
      CHECK(ck.dim == r - m.rank());
      CHECK((ck.projection * m).is_zero());
      // solve(M, M x) reproduces M x
      Matrix x = random_matrix(f, c, 1, rng);
      auto sol = m.solve(column_of(m * x, 0));
      REQUIRE(sol);
      Matrix y(f, c, 1);
      for (int i = 0; i < c; ++i) y.at(i, 0) = (*sol)[i];
      CHECK(m * y == m * x);
    }
  }
}

TEST_CASE("rank stable under permutation") {
  std::mt19937 rng(11);
  Matrix m = random_matrix(F101, 4, 4, rng);
  Matrix p(F101, 4, 4);
  // cyclic permutation
  for (int i = 0; i < 4; ++i) p.at(i, (i + 1) % 4) = Scalar(F101, 1);
  CHECK((p * m).rank() == m.rank());
  CHECK((m * p).rank() == m.rank());
}
