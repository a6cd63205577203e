#pragma once

#include "clusterseed/root_data.hpp"
#include "clusterseed/seed.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clusterseed {

// Reference seed drawn as a quiver picture: named vertices, optional corner
// weights written with the corner macros, and arrows with multiplicity.
struct GoldenSeed {
  std::string regenerate;
  std::vector<std::string> names;
  std::map<std::string, std::vector<Weight>> weights;
  std::map<std::pair<std::string, std::string>, Rational> net; // first < second
  std::set<std::pair<std::string, std::string>> ignored;
  // picture ids that name each other's seed vertex
  std::vector<std::pair<std::string, std::string>> swaps;
};

// Corner macros: tcfr lists (A3,A1,A2) on a triangle, and on a quadrilateral
// ABCD each macro lists its corners counter-clockwise from the top.
std::vector<Weight> decode_corner_macro(const RootDatum& rd, const std::string& text, int m);

GoldenSeed parse_golden(const RootDatum& rd, const std::string& text, int m);
GoldenSeed load_golden(const RootDatum& rd, const std::string& path, int m);

// Empty when the seed matches.
std::vector<std::string> compare_golden(const Seed& s, const GoldenSeed& g);

} // namespace clusterseed
