#include "clusterseed/linsolve.hpp"
#include "clusterseed/oracle.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("random flags are unimodular")
{
  std::mt19937_64 rng(5);
  FlagTuple f = random_flags(4, 3, rng);
  for (const auto& fl : f.flags)
    CHECK(determinant(flag_matrix(fl)) == 1);
}

TEST_CASE("ptolemy relation")
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    FlagTuple f = random_flags(2, 4, rng);
    auto d = [&](int a, int b) { return wedge_invariant({a, b}, {1, 1}, f); };
    CHECK(d(0, 2) * d(1, 3) == d(0, 1) * d(2, 3) + d(0, 3) * d(1, 2));
  }
}

TEST_CASE("weyl group lifts")
{
  RatMat minus2 = {{-1, 0}, {0, -1}};
  CHECK(s_g(2) == minus2);
  for (int n : {2, 3, 4, 5})
    CHECK(determinant(lift_w0(n)) == 1);
  RatMat s = lift_simple_reflection(3, 0);
  CHECK(determinant(s) == 1);
}

TEST_CASE("torus characters")
{
  RatVec h = {Rational(2), Rational(3), rat(1, 6)};
  CHECK(weight_character({Rational(1), Rational(0)}, h) == 2);
  CHECK(weight_character({Rational(0), Rational(1)}, h) == 6);
  std::mt19937_64 rng(3);
  FlagTuple f = random_flags(3, 3, rng);
  std::vector<RatVec> one(3, RatVec(3, Rational(1)));
  FlagTuple g = act_torus(f, one);
  for (std::size_t t = 0; t < 3; ++t)
    CHECK(flag_matrix(g.flags[t]) == flag_matrix(f.flags[t]));
}

TEST_CASE("shear of the identity")
{
  std::mt19937_64 rng(9);
  FlagTuple f = standard_quadrilateral_flags(3, rng);
  FlagTuple g = shear(f, RatVec(3, Rational(1)));
  CHECK(flag_matrix(g.flags[3]) == flag_matrix(f.flags[3]));
  CHECK(flag_matrix(f.flags[2]) == lift_w0(3));
}
