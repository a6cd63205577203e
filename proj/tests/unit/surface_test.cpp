#include "clusterseed/isomorphism.hpp"
#include "clusterseed/surface.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("triangulations")
{
  auto f = fan_triangulation(5);
  CHECK(f.triangles.size() == 3);
  CHECK(f.diagonals == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}});
  CHECK_THROWS_AS(from_diagonals(4, {{1, 3}, {2, 4}}), SurfaceError);
  CHECK_THROWS_AS(from_diagonals(5, {{1, 3}, {2, 4}}), SurfaceError);
  CHECK_THROWS_AS(from_diagonals(4, {{1, 2}}), SurfaceError);
  auto g = flip_diagonal(fan_triangulation(4), {1, 3});
  CHECK(g.diagonals == std::vector<std::pair<int, int>>{{2, 4}});
  CHECK(same_triangulation(flip_diagonal(g, {2, 4}), fan_triangulation(4)));
  CHECK(same_triangulation(triangulation_from_json(triangulation_to_json(f)), f));
}

TEST_CASE("permutation sign")
{
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("odd dressing reverses arrows")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  Seed odd = dress_triangle(t, {1, 0, 2});
  CHECK(quiver_isomorphic(odd, reverse_arrows(permute_slots(t, {1, 0, 2}))));
  Seed even = dress_triangle(t, {1, 2, 0});
  CHECK(quiver_isomorphic(even, permute_slots(t, {1, 2, 0})));
}

TEST_CASE("polygon seeds")
{
  RootDatum g2 = type_g2(), a3 = type_a(3);
  Seed c = build_conf_m_seed(g2, 4);
  CHECK(c.size() == 18);
  CHECK(c.unfrozen().size() == 10);
  CHECK(build_conf_m_seed(a3, 4).size() == 21);
  Seed p = build_conf_m_seed(g2, 5);
  CHECK(p.size() == 26);
  for (int i : p.unfrozen())
    CHECK(is_zero(weight_balance(p, i)));
  // every half-arrow is gone from the unfrozen part
  for (int i : p.unfrozen())
    for (std::size_t j = 0; j < p.size(); ++j)
      CHECK(p.b2[i][j] % 2 == 0);
  Seed tri = triangle_seed(a3, a3.canonical_word());
  CHECK(quiver_isomorphic(build_conf_m_seed(a3, 3), tri));
}

TEST_CASE("gluing order on the pentagon")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  Seed a = embed_triangle(t, {1, 2, 3}, 5, "t1:", 0);
  Seed b = embed_triangle(t, {1, 3, 4}, 5, "t2:", 1);
  Seed c = embed_triangle(t, {1, 4, 5}, 5, "t3:", 2);
  Seed left = amalgamate(amalgamate(a, b, {1, 3}), c, {1, 4});
  Seed right = amalgamate(a, amalgamate(b, c, {1, 4}), {1, 3});
  IsoOptions o;
  o.marked_perm = {0, 1, 2, 3, 4};
  CHECK(quiver_isomorphic(left, right, o));
  CHECK_THROWS_AS(amalgamate(a, c, {1, 3}), SurfaceError);
}
