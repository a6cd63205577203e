#include "clusterseed/builder.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("reduced-word seeds")
{
  RootDatum a3 = type_a(3), g2 = type_g2(), d4 = type_d4();
  Seed s = build_bruhat_seed(a3, a3.canonical_word());
  CHECK(s.size() == 9);
  CHECK(s.unfrozen().size() == 3);
  CHECK(build_bruhat_seed(g2, g2.canonical_word()).size() == 8);
  CHECK(build_bruhat_seed(d4, d4.canonical_word()).size() == 16);
  CHECK_THROWS_AS(build_bruhat_seed(type_a(2), parse_word(type_a(2), "12")), BuildError);
}

TEST_CASE("type A weights are named by digits")
{
  RootDatum a3 = type_a(3);
  Word w = a3.canonical_word();
  Seed s = assign_weights(build_bruhat_seed(a3, w), a3, w);
  CHECK(s.find("x_301"));
  CHECK(s.find("x_022"));
  // the face equation needs the third edge
  Seed t = complete_triangle_seed(s, a3);
  for (int i : t.unfrozen())
    CHECK(is_zero(weight_balance(t, i)));
}

TEST_CASE("weight table json")
{
  RootDatum a3 = type_a(3);
  WeightTable t = weight_table(a3, a3.canonical_word());
  auto j = weight_table_to_json(a3, t);
  CHECK(j["1,0"][0] == "w3");
  WeightTable u = weight_table_from_json(a3, j);
  CHECK(u.entries == t.entries);
}

TEST_CASE("triangle completion")
{
  for (const char* kind : {"a2", "a3", "g2", "d4"}) {
    RootDatum rd = cartan_matrix(kind);
    CompletionReport cr;
    Seed t = triangle_seed(rd, rd.canonical_word(), nullptr, &cr);
    CAPTURE(kind);
    CHECK(cr.face_kernel == 0);
    CHECK(cr.edge_kernel == 0);
    CHECK(cr.new_edge_kernel == 0);
    CHECK(cr.conjecture_values);
    for (int k = 0; k < rd.rank; ++k) {
      CHECK(edge_vertex(t, rd, 0, 1, k));
      CHECK(edge_vertex(t, rd, 1, 2, k));
      CHECK(edge_vertex(t, rd, 2, 0, k));
    }
  }
}

TEST_CASE("reversed word seed")
{
  RootDatum g2 = type_g2();
  Seed r = reverse_word_seed(g2, g2.canonical_word());
  CHECK(r.size() == 10);
  for (int i : r.unfrozen())
    CHECK(is_zero(weight_balance(r, i)));
}
