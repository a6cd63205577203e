#include "clusterseed/builder.hpp"
#include "clusterseed/seed.hpp"
#include "clusterseed/seed_io.hpp"

#include <doctest.h>

using namespace clusterseed;

namespace {

// 1 -> 2 -> 3 with 1, 3 frozen
Seed path()
{
  Seed s;
  for (const char* n : {"p", "q", "r"}) {
    Vertex v;
    v.name = n;
    v.frozen = n[0] != 'q';
    s.add_vertex(v);
  }
  s.add_arrow(0, 1, 1);
  s.add_arrow(1, 2, 1);
  return s;
}

} // namespace

TEST_CASE("arrow units")
{
  CHECK(arrow_unit(3, 1) == 3);
  CHECK(arrow_unit(1, 3) == 1);
  CHECK(arrow_unit(1, 1) == 1);
}

TEST_CASE("mutation of a path")
{
  Seed s = path();
  CHECK(s.b(1, 0) == 1);
  Seed t = mutate(s, "q");
  CHECK(t.b(1, 0) == -1);
  CHECK(t.b(1, 2) == 1);
  // the path through q becomes an arrow p -> r
  CHECK(t.b(2, 0) == 1);
  CHECK(same_seed(mutate(t, "q"), s));
  CHECK_THROWS_AS(mutate(s, "p"), SeedError);
  CHECK_THROWS_AS(mutate(s, "z"), SeedError);
}

TEST_CASE("invariants")
{
  Seed s = path();
  check_invariants(s);
  s.b2[0][1] = 1;
  s.b2[1][0] = -1;
  CHECK_FALSE(frozen_integrality(s));
  CHECK_THROWS_AS(check_invariants(s), SeedError);
}

TEST_CASE("g2 triangle seed invariants")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  CHECK(skew_symmetrizable(t));
  CHECK(frozen_integrality(t));
  for (int i : t.unfrozen())
    CHECK(is_zero(weight_balance(t, i)));
  Seed l = langlands_dual(langlands_dual(t, g2), g2);
  CHECK(same_seed(l, t, false));
  CHECK(same_seed(permute_slots(t, {0, 1, 2}), t));
  CHECK(same_seed(reverse_arrows(reverse_arrows(t)), t));
  CHECK_THROWS_AS(rename_vertices(t, {{"x_a1", "x_a2"}}), SeedError);
}

TEST_CASE("json round trip")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  auto j = seed_to_json(t, &g2);
  CHECK(seed_kind(j) == "g2");
  Seed u = seed_from_json(j);
  CHECK(same_seed(u, t));
  CHECK(seed_to_json(u, &g2).dump() == j.dump());
  CHECK(to_dot(t, &g2).rfind("digraph", 0) == 0);
}
