#include "clusterseed/root_data.hpp"

#include <doctest.h>

#include <algorithm>

using namespace clusterseed;

TEST_CASE("positive roots")
{
  CHECK(type_a(3).positive_root_count == 6);
  CHECK(type_d4().positive_root_count == 12);
  CHECK(type_g2().positive_root_count == 6);
  CHECK_THROWS(cartan_matrix("b2"));
}

TEST_CASE("g2 cartan matrix and multipliers")
{
  RootDatum g2 = type_g2();
  CHECK(g2.cartan[0][1] == -3);
  CHECK(g2.cartan[1][0] == -1);
  CHECK(g2.d == std::vector<int>{1, 3});
  CHECK(g2.max_d() == 3);
  CHECK_FALSE(g2.simply_laced());
}

TEST_CASE("words")
{
  RootDatum a3 = type_a(3);
  Word w = parse_word(a3, "121321");
  CHECK(format_word(a3, w) == "121321");
  CHECK(is_longest_word(a3, w));
  CHECK_FALSE(is_reduced(a3, parse_word(a3, "11")));
  CHECK_THROWS(parse_word(a3, "14"));
  auto cls = commutation_class(a3, w);
  CHECK(std::find(cls.begin(), cls.end(), parse_word(a3, "123121")) != cls.end());
  for (const auto& n : braid_neighbours(a3, w))
    CHECK(is_longest_word(a3, n));
  CHECK(format_word(type_g2(), type_g2().canonical_word()) == "bababa");
  CHECK(format_word(type_d4(), type_d4().canonical_word()) == "b123b123b123");
}

TEST_CASE("w0 and duality")
{
  RootDatum a3 = type_a(3);
  CHECK(a3.dual_node(0) == 2);
  CHECK(a3.dual_node(1) == 1);
  for (int k = 0; k < 3; ++k) {
    Weight neg = a3.omega(a3.dual_node(k));
    for (auto& c : neg)
      c = -c;
    CHECK(w0(a3, a3.omega(k)) == neg);
  }
  RootDatum d4 = type_d4();
  for (int k = 0; k < 4; ++k)
    CHECK(d4.dual_node(k) == k);
  CHECK(reflect(a3, 0, a3.alpha(0)) == Weight{-2, 1, 0});
}

TEST_CASE("langlands map on g2 weights")
{
  RootDatum g2 = type_g2();
  CHECK(langlands_weight(g2, g2.omega(0)) == g2.omega(1));
  CHECK(langlands_weight(g2, g2.omega(1)) == Weight{3, 0});
  RootDatum a3 = type_a(3);
  CHECK(langlands_weight(a3, a3.omega(1)) == a3.omega(1));
}

TEST_CASE("weight text")
{
  RootDatum a3 = type_a(3);
  Weight w = {Rational(1), rat(-1, 2), Rational(0)};
  CHECK(format_weight(a3, w) == "w1-w2/2");
  CHECK(parse_weight(a3, "w1-w2/2") == w);
  CHECK(parse_weight(a3, "0") == a3.zero());
  RootDatum g2 = type_g2();
  CHECK(format_weight(g2, g2.alpha(0)) == "2a-b");
  CHECK(parse_weight(g2, "2a-b") == g2.alpha(0));
  CHECK_THROWS(parse_weight(g2, "w1"));
}
