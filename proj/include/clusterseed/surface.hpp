#pragma once

#include "clusterseed/builder.hpp"
#include "clusterseed/seed.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace clusterseed {

// Marked points are numbered 1..m counter-clockwise.
struct TriangulatedPolygon {
  int m = 3;
  std::vector<std::array<int, 3>> triangles; // sorted triples
  std::vector<std::pair<int, int>> diagonals; // i < j
};

struct TriangleDressing {
  std::array<int, 3> order; // marked points placed at A1, A2, A3
  Word word;
};
using Dressing = std::vector<TriangleDressing>; // parallel to triangles

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TriangulatedPolygon fan_triangulation(int m);
TriangulatedPolygon from_diagonals(int m, std::vector<std::pair<int, int>> diagonals);
TriangulatedPolygon flip_diagonal(const TriangulatedPolygon& t, std::pair<int, int> d);
bool same_triangulation(const TriangulatedPolygon& a, const TriangulatedPolygon& b);

// Counter-clockwise order with a boundary edge (i, i+1) at A1A2 when there is one.
Dressing default_dressing(const RootDatum& rd, const TriangulatedPolygon& t);

// New slot perm[p] takes old slot p; odd permutations reverse all arrows.
Seed dress_triangle(const Seed& triangle, const std::array<int, 3>& perm);
int permutation_sign(const std::vector<int>& p);

// Places a triangle seed on marked points order[0..2] of an m-gon.
Seed embed_triangle(const Seed& triangle, const std::array<int, 3>& order, int m, const std::string& prefix,
                    int triangle_index);

// Glue two seeds living on the same m-gon along edge {p, q}.
Seed amalgamate(const Seed& a, const Seed& b, std::pair<int, int> edge);

Seed build_conf_m_seed(const RootDatum& rd, int m, const TriangulatedPolygon& t, const Dressing& dressing,
                       const WeightTable* user = nullptr);
Seed build_conf_m_seed(const RootDatum& rd, int m);

TriangulatedPolygon triangulation_from_json(const nlohmann::json& j);
nlohmann::json triangulation_to_json(const TriangulatedPolygon& t);
Dressing dressing_from_json(const RootDatum& rd, const nlohmann::json& j);

} // namespace clusterseed

namespace clusterseed {

// Names used in the quadrilateral pictures: x{j}a / x{-j}a for the right and
// left copies of x_a{j}, x0a for the glued pair, ya / y-a for the new edges.
Seed g2_conf4_names(const Seed& s);

} // namespace clusterseed
