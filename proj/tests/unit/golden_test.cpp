#include "clusterseed/builder.hpp"
#include "clusterseed/golden.hpp"
#include "clusterseed/seed_io.hpp"

#include <doctest.h>

using namespace clusterseed;

TEST_CASE("corner macros")
{
  RootDatum g2 = type_g2();
  auto w = decode_corner_macro(g2, "tcfr{a}{b}{}", 3);
  CHECK(format_weights(g2, w) == "b | 0 | a");
  auto q = decode_corner_macro(g2, "dud{a}{b}", 4);
  CHECK(q[0] == g2.omega(0));
  CHECK(q[2] == g2.omega(1));
  CHECK(q[1] == g2.zero());
  CHECK_THROWS(decode_corner_macro(g2, "tcfq{a}{b}{}", 3));
}

TEST_CASE("golden comparison")
{
  RootDatum g2 = type_g2();
  Seed s = build_bruhat_seed(g2, g2.canonical_word());
  std::string text = "vertex x_a0\nvertex x_a1\nvertex x_a2\nvertex x_a3\n"
                     "vertex x_b0\nvertex x_b1\nvertex x_b2\nvertex x_b3\n"
                     "x_a1 -> x_a0\nx_a2 -> x_a1\nx_a3 -> x_a2\n"
                     "x_b1 -> x_b0\nx_b2 -> x_b1\nx_b3 -> x_b2\n"
                     "x_b0 -> x_a1\nx_b1 -> x_a2\nx_b2 -> x_a3\n"
                     "x_a0 ~> x_b0\nx_a1 -> x_b1\nx_a2 -> x_b2\nx_a3 ~> x_b3\n";
  CHECK(compare_golden(s, parse_golden(g2, text, 3)).empty());
  auto missing = text.substr(0, text.find("x_a3 ~> x_b3"));
  CHECK_FALSE(compare_golden(s, parse_golden(g2, missing, 3)).empty());
  auto swapped = "# swap: x_a0 x_a3\n" + text;
  CHECK_FALSE(compare_golden(s, parse_golden(g2, swapped, 3)).empty());
}
