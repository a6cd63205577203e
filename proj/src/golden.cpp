#include "clusterseed/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace clusterseed {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b)
{
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<int> macro_corners(const std::string& macro, int m)
{
  if (m == 3 && macro == "tcfr")
    return {3, 1, 2};
  if (m == 4) {
    static const std::map<std::string, std::vector<int>> quad = {
        {"tcfr", {1, 3, 4}}, {"tcfl", {1, 2, 3}}, {"tcfu", {1, 2, 4}}, {"tcfd", {2, 3, 4}},
        {"qcf", {1, 2, 3, 4}}, {"dud", {1, 3}},    {"dlr", {2, 4}}};
    if (auto it = quad.find(macro); it != quad.end())
      return it->second;
  }
  throw std::runtime_error("unknown corner macro " + macro + " for m = " + std::to_string(m));
}

} // namespace

std::vector<Weight> decode_corner_macro(const RootDatum& rd, const std::string& text, int m)
{
  auto brace = text.find('{');
  if (brace == std::string::npos)
    throw std::runtime_error("bad corner macro " + text);
  auto corners = macro_corners(text.substr(0, brace), m);
  std::vector<std::string> args;
  std::size_t pos = brace;
  while (pos < text.size() && text[pos] == '{') {
    auto close = text.find('}', pos);
    if (close == std::string::npos)
      throw std::runtime_error("unbalanced braces in " + text);
    args.push_back(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  if (args.size() != corners.size())
    throw std::runtime_error("wrong argument count in " + text);
  std::vector<Weight> w(m, rd.zero());
  for (std::size_t k = 0; k < args.size(); ++k)
    w[corners[k] - 1] = parse_weight(rd, args[k]);
  return w;
}

GoldenSeed parse_golden(const RootDatum& rd, const std::string& text, int m)
{
  GoldenSeed g;
  std::map<std::pair<std::string, std::string>, Rational> directed;
  std::istringstream in(text);
  std::string line;
  auto add_name = [&](const std::string& n) {
    if (std::find(g.names.begin(), g.names.end(), n) == g.names.end())
      g.names.push_back(n);
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, op, b;
    ls >> a;
    if (a.empty())
      continue;
    if (a == "#") {
      ls >> op;
      if (op == "regenerate:")
        std::getline(ls >> std::ws, g.regenerate);
      else if (op == "ignore:" && ls >> a >> b)
        g.ignored.insert(key(a, b));
      else if (op == "swap:" && ls >> a >> b)
        g.swaps.emplace_back(a, b);
      continue;
    }
    if (a == "vertex" || a == "weight") {
      ls >> b;
      add_name(b);
      if (a == "weight") {
        ls >> op;
        g.weights[b] = decode_corner_macro(rd, op, m);
      }
      continue;
    }
    ls >> op >> b;
    if (op != "->" && op != "~>")
      throw std::runtime_error("bad arrow line: " + line);
    add_name(a);
    add_name(b);
    Rational u = op == "->" ? Rational(1) : rat(1, 2);
    if (a < b)
      g.net[key(a, b)] += u;
    else
      g.net[key(a, b)] -= u;
  }
  return g;
}

GoldenSeed load_golden(const RootDatum& rd, const std::string& path, int m)
{
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_golden(rd, ss.str(), m);
}

std::vector<std::string> compare_golden(const Seed& seed, const GoldenSeed& g)
{
  std::vector<std::string> out;
  std::vector<std::pair<std::string, std::string>> names;
  for (const auto& [a, b] : g.swaps) {
    names.emplace_back(a, b);
    names.emplace_back(b, a);
  }
  const Seed s = names.empty() ? seed : rename_vertices(seed, names);
  for (const auto& n : g.names)
    if (!s.find(n))
      out.push_back("missing vertex " + n);
  for (const auto& x : s.v)
    if (std::find(g.names.begin(), g.names.end(), x.name) == g.names.end())
      out.push_back("unexpected vertex " + x.name);
  if (!out.empty())
    return out;
  for (const auto& [n, w] : g.weights)
    if (s.v[*s.find(n)].weights != w)
      out.push_back("weights of " + n + " differ");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto& a = s.v[i];
      const auto& b = s.v[j];
      auto k = key(a.name, b.name);
      if (g.ignored.count(k))
        continue;
      // units of a -> b
      Rational u = rat(s.b2[j][i], 2 * arrow_unit(b.d, a.d));
      if (u < 0)
        u = -rat(s.b2[i][j], 2 * arrow_unit(a.d, b.d));
      Rational have = a.name < b.name ? u : Rational(-u);
      Rational want = g.net.count(k) ? g.net.at(k) : Rational(0);
      if (have != want)
        out.push_back("arrows " + k.first + " -> " + k.second + ": have " + to_string(have) + ", expected " +
                      to_string(want));
    }
  return out;
}

} // namespace clusterseed
