#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siltwb/quiver.hpp"

using namespace siltwb;

TEST_CASE("topological order") {
  Quiver a2(2, {{1, 2}});
  CHECK(a2.topological_order() == std::vector<int>{1, 2});

  Quiver kron(2, {{1, 2}, {1, 2}});
  CHECK(kron.topological_order() == std::vector<int>{1, 2});

  CHECK_THROWS_AS(Quiver(1, {{1, 1}}), CyclicQuiver);
  CHECK_THROWS_AS(Quiver(3, {{1, 2}, {2, 3}, {3, 1}}), CyclicQuiver);
}

TEST_CASE("euler form") {
  Quiver a2(2, {{1, 2}});
  CHECK(a2.euler_form({1, 1}, {0, 1}) == 0);  // <P_1, S_2>
  CHECK(a2.euler_form({3, -2}, {0, 0}) == 0);

  Quiver kron(2, {{1, 2}, {1, 2}});
  CHECK(kron.euler_form({1, 1}, {1, 1}) == 0);
}

TEST_CASE("class basis determinant") {
  // projective classes of a linear A_3 are unitriangular
  CHECK(std::abs(class_basis_determinant({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})) == 1);
  CHECK(class_basis_determinant({{1, 0}, {1, 0}}) == 0);
  CHECK(std::abs(class_basis_determinant({{1, 0}, {0, 1}})) == 1);
}

TEST_CASE("path enumeration") {
  Quiver a3(3, {{1, 2}, {2, 3}});
  CHECK(a3.paths(1, 3).size() == 1);
  CHECK(a3.paths(1, 1).size() == 1);  // trivial path
  CHECK(a3.paths(3, 1).empty());

  Quiver kron(2, {{1, 2}, {1, 2}});
  CHECK(kron.paths(1, 2).size() == 2);
}

TEST_CASE("type A detection") {
  CHECK(Quiver(3, {{1, 2}, {3, 2}}).is_type_a_line());
  CHECK_FALSE(Quiver(2, {{1, 2}, {1, 2}}).is_type_a_line());
  CHECK_FALSE(Quiver(3, {{1, 3}, {2, 3}}).is_type_a_line());
}
