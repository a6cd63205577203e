#include "clusterseed/linsolve.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("exact solve")
{
  RatMat a = {{1, 2}, {3, 4}};
  auto s = solve_exact(a, {Rational(5), Rational(6)}, 2);
  REQUIRE(s.unique());
  CHECK(s.x == RatVec{Rational(-4), rat(9, 2)});
  CHECK(determinant(a) == -2);
  CHECK(multiply(a, inverse(a)) == RatMat{{1, 0}, {0, 1}});
}

TEST_CASE("kernel and inconsistency")
{
  RatMat a = {{1, 1}, {2, 2}};
  auto s = solve_exact(a, {Rational(1), Rational(2)}, 2);
  CHECK(s.consistent);
  CHECK(s.kernel.size() == 1);
  CHECK_FALSE(solve_exact(a, {Rational(1), Rational(3)}, 2).consistent);
}
