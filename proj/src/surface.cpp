#include "clusterseed/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clusterseed {

namespace {

bool boundary(int m, int a, int b)
{
  if (a > b)
    std::swap(a, b);
  return b == a + 1 || (a == 1 && b == m);
}

bool crossing(std::pair<int, int> x, std::pair<int, int> y)
{
  auto [a, b] = x;
  auto [c, d] = y;
  auto inside = [&](int p) { return a < p && p < b; };
  if (a == c || a == d || b == c || b == d)
    return false;
  return inside(c) != inside(d);
}

std::pair<int, int> norm(std::pair<int, int> e)
{
  if (e.first > e.second)
    std::swap(e.first, e.second);
  return e;
}

} // namespace

TriangulatedPolygon fan_triangulation(int m)
{
  if (m < 3)
    throw SurfaceError("a polygon needs at least 3 marked points");
  std::vector<std::pair<int, int>> d;
  for (int k = 3; k < m; ++k)
    d.emplace_back(1, k);
  return from_diagonals(m, d);
}

TriangulatedPolygon from_diagonals(int m, std::vector<std::pair<int, int>> diagonals)
{
  if (m < 3)
    throw SurfaceError("a polygon needs at least 3 marked points");
  std::set<std::pair<int, int>> edges;
  for (auto& d : diagonals) {
    d = norm(d);
    if (d.first < 1 || d.second > m || d.first == d.second || boundary(m, d.first, d.second))
      throw SurfaceError("{" + std::to_string(d.first) + "," + std::to_string(d.second) + "} is not a diagonal");
    if (!edges.insert(d).second)
      throw SurfaceError("repeated diagonal");
  }
  if (static_cast<int>(diagonals.size()) != m - 3)
    throw SurfaceError("a triangulation of an m-gon has m-3 diagonals");
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals.size(); ++j)
      if (crossing(diagonals[i], diagonals[j]))
        throw SurfaceError("diagonals cross");
  for (int a = 1; a < m; ++a)
    edges.insert({a, a + 1});
  edges.insert({1, m});
  TriangulatedPolygon t;
  t.m = m;
  std::sort(diagonals.begin(), diagonals.end());
  t.diagonals = diagonals;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c)
        if (edges.count({a, b}) && edges.count({b, c}) && edges.count({a, c}))
          t.triangles.push_back({a, b, c});
  if (static_cast<int>(t.triangles.size()) != m - 2)
    throw SurfaceError("diagonals do not triangulate the polygon");
  return t;
}

TriangulatedPolygon flip_diagonal(const TriangulatedPolygon& t, std::pair<int, int> d)
{
  d = norm(d);
  auto it = std::find(t.diagonals.begin(), t.diagonals.end(), d);
  if (it == t.diagonals.end())
    throw SurfaceError("{" + std::to_string(d.first) + "," + std::to_string(d.second) + "} is not a diagonal of the triangulation");
  std::vector<int> apex;
  for (const auto& tri : t.triangles) {
    bool has_a = std::count(tri.begin(), tri.end(), d.first) > 0;
    bool has_c = std::count(tri.begin(), tri.end(), d.second) > 0;
    if (has_a && has_c)
      for (int x : tri)
        if (x != d.first && x != d.second)
          apex.push_back(x);
  }
  if (apex.size() != 2)
    throw SurfaceError("diagonal does not border two triangles");
  auto diags = t.diagonals;
  diags.erase(diags.begin() + (it - t.diagonals.begin()));
  diags.push_back(norm({apex[0], apex[1]}));
  return from_diagonals(t.m, diags);
}

bool same_triangulation(const TriangulatedPolygon& a, const TriangulatedPolygon& b)
{
  return a.m == b.m && a.diagonals == b.diagonals;
}

Dressing default_dressing(const RootDatum& rd, const TriangulatedPolygon& t)
{
  Dressing out;
  for (const auto& tri : t.triangles) {
    std::array<int, 3> order = tri;
    for (int r = 0; r < 3; ++r) {
      std::array<int, 3> o = {tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]};
      if (o[1] == o[0] + 1) {
        order = o;
        break;
      }
    }
    out.push_back({order, rd.canonical_word()});
  }
  return out;
}

int permutation_sign(const std::vector<int>& p)
{
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        sign = -sign;
  return sign;
}

Seed dress_triangle(const Seed& triangle, const std::array<int, 3>& perm)
{
  std::vector<int> p(perm.begin(), perm.end());
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int>{0, 1, 2})
    throw SurfaceError("not a permutation of the three corners");
  bool odd = permutation_sign(p) < 0;
  Seed s = permute_slots(triangle, p);
  if (odd)
    s = reverse_arrows(s);
  for (auto& x : s.v)
    if (x.label)
      x.label = relabel_flags(x.label, p, odd);
  return s;
}

Seed embed_triangle(const Seed& triangle, const std::array<int, 3>& order, int m, const std::string& prefix,
                    int triangle_index)
{
  if (triangle.marked_points() != 3)
    throw SurfaceError("embedding needs a triangle seed");
  std::vector<int> cyc = {order[0], order[1], order[2]};
  for (int x : cyc)
    if (x < 1 || x > m)
      throw SurfaceError("marked point out of range");
  // counter-clockwise iff a rotation of the increasing order
  int rot = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::rotate(cyc.begin(), cyc.begin() + rot, cyc.end());
  bool odd = !(cyc[0] < cyc[1] && cyc[1] < cyc[2]);
  Seed s = odd ? reverse_arrows(triangle) : triangle;
  std::vector<int> point_map = {order[0] - 1, order[1] - 1, order[2] - 1};
  const int rank = triangle.rank_of_weights();
  for (auto& x : s.v) {
    std::vector<Weight> w(m, Weight(rank, Rational(0)));
    for (int r = 0; r < 3; ++r)
      w[point_map[r]] = x.weights[r];
    x.weights = w;
    x.tag.triangle = triangle_index;
    x.name = prefix + x.name;
    if (x.label)
      x.label = sort_flags(relabel_flags(x.label, point_map, odd));
  }
  return s;
}

namespace {

bool on_edge(const Vertex& x, int p, int q)
{
  if (!x.frozen)
    return false;
  bool nonzero = false;
  for (std::size_t r = 0; r < x.weights.size(); ++r) {
    bool zero = std::all_of(x.weights[r].begin(), x.weights[r].end(), [](const Rational& c) { return c == 0; });
    int point = static_cast<int>(r) + 1;
    if (point == p || point == q)
      nonzero = nonzero || !zero;
    else if (!zero)
      return false;
  }
  return nonzero;
}

} // namespace

Seed amalgamate(const Seed& a, const Seed& b, std::pair<int, int> edge)
{
  auto [p, q] = norm(edge);
  if (a.marked_points() != b.marked_points())
    throw SurfaceError("seeds live on different polygons");
  std::vector<int> ea, eb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (on_edge(a.v[i], p, q))
      ea.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (on_edge(b.v[i], p, q))
      eb.push_back(static_cast<int>(i));
  if (ea.empty() || ea.size() != eb.size())
    throw SurfaceError("edge {" + std::to_string(p) + "," + std::to_string(q) + "} has " + std::to_string(ea.size()) +
                       " and " + std::to_string(eb.size()) + " frozen vertices on the two sides");
  std::map<int, int> b_to_a;
  for (int j : eb) {
    int match = -1;
    for (int i : ea)
      if (a.v[i].weights == b.v[j].weights) {
        if (a.v[i].d != b.v[j].d)
          throw SurfaceError("multipliers of " + a.v[i].name + " and " + b.v[j].name + " differ");
        match = i;
      }
    if (match < 0)
      throw SurfaceError("no vertex across the edge has the weights of " + b.v[j].name);
    b_to_a[j] = match;
  }
  Seed s = a;
  std::vector<int> idx(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (auto it = b_to_a.find(static_cast<int>(j)); it != b_to_a.end()) {
      idx[j] = it->second;
      continue;
    }
    idx[j] = s.add_vertex(b.v[j]);
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s.b2[idx[i]][idx[j]] += b.b2[i][j];
  for (int i : ea) {
    s.v[i].frozen = false;
    s.v[i].tag.role = Role::Diagonal;
  }
  check_invariants(s);
  return s;
}

Seed build_conf_m_seed(const RootDatum& rd, int m, const TriangulatedPolygon& t, const Dressing& dressing,
                       const WeightTable* user)
{
  if (t.m != m)
    throw SurfaceError("triangulation is for a different polygon");
  if (dressing.size() != t.triangles.size())
    throw SurfaceError("dressing needs one entry per triangle");
  std::map<Word, Seed> cache;
  std::vector<Seed> pieces;
  for (std::size_t k = 0; k < t.triangles.size(); ++k) {
    auto order = dressing[k].order;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t.triangles[k])
      throw SurfaceError("dressing order does not match triangle " + std::to_string(k + 1));
    auto it = cache.find(dressing[k].word);
    if (it == cache.end())
      it = cache.emplace(dressing[k].word, triangle_seed(rd, dressing[k].word, user)).first;
    std::string prefix = rd.family == Family::A ? "" : "t" + std::to_string(k + 1) + ":";
    Seed piece = embed_triangle(it->second, order, m, prefix, static_cast<int>(k) + 1);
    if (rd.family == Family::A) {
      for (auto& x : piece.v) {
        std::string name = "x_";
        for (const auto& w : x.weights) {
          int deg = 0;
          for (std::size_t c = 0; c < w.size(); ++c)
            if (w[c] != 0)
              deg = static_cast<int>(c) + 1;
          if (rd.rank > 9 && name.size() > 2)
            name += ",";
          name += std::to_string(deg);
        }
        x.name = name;
      }
    }
    pieces.push_back(piece);
  }
  std::vector<bool> used(pieces.size(), false);
  Seed s = pieces[0];
  used[0] = true;
  std::set<int> covered(t.triangles[0].begin(), t.triangles[0].end());
  std::vector<std::array<int, 3>> in = {t.triangles[0]};
  for (std::size_t round = 1; round < pieces.size(); ++round) {
    bool glued = false;
    for (std::size_t k = 0; k < pieces.size() && !glued; ++k) {
      if (used[k])
        continue;
      for (const auto& d : t.diagonals) {
        auto has = [&](const std::array<int, 3>& tri) {
          return std::count(tri.begin(), tri.end(), d.first) && std::count(tri.begin(), tri.end(), d.second);
        };
        bool inside = std::any_of(in.begin(), in.end(), has);
        if (inside && has(t.triangles[k])) {
          s = amalgamate(s, pieces[k], d);
          used[k] = true;
          in.push_back(t.triangles[k]);
          glued = true;
          break;
        }
      }
    }
    if (!glued)
      throw SurfaceError("triangles are not connected by diagonals");
  }
  for (int f : s.unfrozen())
    if (!is_zero(weight_balance(s, f)))
      throw SurfaceError("face equation fails at " + s.v[f].name + " after gluing");
  return s;
}

Seed build_conf_m_seed(const RootDatum& rd, int m)
{
  auto t = fan_triangulation(m);
  return build_conf_m_seed(rd, m, t, default_dressing(rd, t));
}

TriangulatedPolygon triangulation_from_json(const nlohmann::json& j)
{
  std::vector<std::pair<int, int>> d;
  for (const auto& e : j.value("diagonals", nlohmann::json::array()))
    d.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return from_diagonals(j.at("m").get<int>(), d);
}

nlohmann::json triangulation_to_json(const TriangulatedPolygon& t)
{
  nlohmann::json d = nlohmann::json::array();
  for (auto [a, b] : t.diagonals)
    d.push_back({a, b});
  return {{"m", t.m}, {"diagonals", d}};
}

Dressing dressing_from_json(const RootDatum& rd, const nlohmann::json& j)
{
  Dressing out;
  for (const auto& e : j) {
    TriangleDressing td;
    auto o = e.at("order");
    td.order = {o.at(0).get<int>(), o.at(1).get<int>(), o.at(2).get<int>()};
    td.word = e.contains("word") ? parse_word(rd, e.at("word").get<std::string>()) : rd.canonical_word();
    out.push_back(td);
  }
  return out;
}

} // namespace clusterseed

namespace clusterseed {

Seed g2_conf4_names(const Seed& s)
{
  std::vector<std::pair<std::string, std::string>> names;
  for (std::string n : {"a", "b"}) {
    names.push_back({"t1:x_" + n + "0", "x0" + n});
    for (int j = 1; j <= 3; ++j) {
      names.push_back({"t2:x_" + n + std::to_string(j), "x" + std::to_string(j) + n});
      names.push_back({"t1:x_" + n + std::to_string(j), "x-" + std::to_string(j) + n});
    }
    names.push_back({"t2:x_" + n, "y" + n});
    names.push_back({"t1:x_" + n, "y-" + n});
  }
  return rename_vertices(s, names);
}

} // namespace clusterseed
