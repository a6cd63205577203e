#include "clusterseed/builder.hpp"
#include "clusterseed/xcoord.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("x mutation is an involution")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  std::vector<Rational> x0(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    x0[i] = rat(static_cast<long>(i) + 2, 3);
  for (int k : t.unfrozen()) {
    auto once = mutate_x(initial_x(t), t, k);
    auto twice = mutate_x(once, mutate(t, k), k);
    std::unordered_map<const XExpr*, Rational> cache;
    for (int i : t.unfrozen())
      CHECK(evaluate_x(twice[i], x0, cache) == x0[i]);
    CHECK(evaluate_x(once[k], x0, cache) == 1 / x0[k]);
  }
}

TEST_CASE("p-map of a path")
{
  RootDatum a3 = type_a(3);
  Seed t = triangle_seed(a3, a3.canonical_word());
  std::vector<Rational> a(t.size(), Rational(1));
  for (int i : t.unfrozen())
    CHECK(p_map(t, i, a) == 1);
}
