#include "clusterseed/builder.hpp"
#include "clusterseed/sequences.hpp"
#include "clusterseed/surface.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("registry")
{
  const auto& r = builtin_sequences();
  for (const char* n : {"g2_13", "g2_23", "g2_12", "g2_flip", "sl3_flip"})
    CHECK(r.count(n));
  CHECK(builtin_sequence("g2_13").length() == 4);
  CHECK(builtin_sequence("g2_flip").length() == 18);
  CHECK(builtin_sequence("g2_flip").stages.size() == 6);
  CHECK(builtin_sequence("sl3_flip").length() == 4);
  CHECK_THROWS(builtin_sequence("nope"));
}

TEST_CASE("sequence algebra")
{
  const auto& s = builtin_sequence("g2_13");
  CHECK(same_stages(s.reversed().reversed(), s));
  CHECK(s.concat(s).length() == 8);
  auto p = s.conjugate(g2_triangle_pairing());
  CHECK(same_stages(p, builtin_sequence("g2_23")));
  CHECK(s.flat() == std::vector<std::string>{"x_a2", "x_a1", "x_b1", "x_a2"});
}

TEST_CASE("applying sequences")
{
  RootDatum g2 = type_g2();
  Seed t = triangle_seed(g2, g2.canonical_word());
  auto none = apply_sequence(t, builtin_sequence("g2_13"), 0);
  CHECK(same_seed(none.seed, t));
  auto run = apply_sequence(t, builtin_sequence("g2_13"));
  CHECK(run.weight_trace.size() == 3);
  MutationSequence bad{"bad", {{"x_a0"}}, ""};
  CHECK_THROWS(apply_sequence(t, bad));
  // g2_13 is an involution on the seed up to the relabeling
  Seed back = apply_sequence(run.seed, builtin_sequence("g2_13").reversed()).seed;
  CHECK(same_seed(back, t));
}

TEST_CASE("sl2 flip by search")
{
  RootDatum a1 = type_a(1);
  Seed c = build_conf_m_seed(a1, 4);
  auto tf = flip_diagonal(fan_triangulation(4), {1, 3});
  Seed target = build_conf_m_seed(a1, 4, tf, default_dressing(a1, tf));
  auto found = find_flip_sequence(c, target, 3);
  REQUIRE(found);
  CHECK(found->length() == 1);
}
