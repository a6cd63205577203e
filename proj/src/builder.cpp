#include "clusterseed/builder.hpp"

#include "clusterseed/linsolve.hpp"

#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#ifndef CLUSTERSEED_DATA_DIR
#define CLUSTERSEED_DATA_DIR "data"
#endif

namespace clusterseed {

using nlohmann::json;

std::string data_dir() { return CLUSTERSEED_DATA_DIR; }

namespace {

std::string structural_name(const RootDatum& rd, int node, int occ)
{
  if (rd.family == Family::A)
    return "x_" + rd.node_names[node] + "." + std::to_string(occ);
  return "x_" + rd.node_names[node] + std::to_string(occ);
}

// index t if w = omega_t (1-based), 0 if w = 0, nullopt otherwise
std::optional<int> fundamental_index(const Weight& w)
{
  int found = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0)
      continue;
    if (w[i] != 1 || found)
      return std::nullopt;
    found = static_cast<int>(i) + 1;
  }
  return found;
}

std::optional<std::string> type_a_name(const std::vector<Weight>& ws)
{
  std::string name = "x_";
  bool wide = !ws.empty() && ws[0].size() > 9;
  for (std::size_t p = 0; p < ws.size(); ++p) {
    auto t = fundamental_index(ws[p]);
    if (!t)
      return std::nullopt;
    if (wide && p)
      name += ",";
    name += std::to_string(*t);
  }
  return name;
}

std::vector<int> type_a_degrees(const std::vector<Weight>& ws)
{
  std::vector<int> deg;
  for (const auto& w : ws)
    deg.push_back(fundamental_index(w).value_or(-1));
  return deg;
}

// b_ij given; b_ji follows from skew-symmetrizability
void set_pair(Seed& s, int i, int j, const Rational& bij)
{
  Rational bji = -bij * s.v[j].d / s.v[i].d;
  Rational x = 2 * bij, y = 2 * bji;
  if (!is_integer(x) || !is_integer(y))
    throw BuildError("entry between '" + s.v[i].name + "' and '" + s.v[j].name + "' is not half-integral");
  s.b2[i][j] = static_cast<int>(x.get_num().get_si());
  s.b2[j][i] = static_cast<int>(y.get_num().get_si());
}

Triple swap12(const Triple& t) { return {t[1], t[0], t[2]}; }

Weight permute_weight(const Weight& w, const std::vector<int>& sigma)
{
  Weight out(w.size(), Rational(0));
  for (std::size_t k = 0; k < w.size(); ++k)
    out[sigma[k]] += w[k];
  return out;
}

std::map<int, int> occurrences(const Word& w)
{
  std::map<int, int> a;
  for (int x : w)
    ++a[x];
  return a;
}

WeightTable type_a_table(const RootDatum& rd, const Word& word)
{
  const int n = rd.rank + 1;
  WeightTable t;
  auto a = occurrences(word);
  auto om = [&](int k) { return k == 0 ? rd.zero() : rd.omega(k - 1); };
  for (int node = 0; node < rd.rank; ++node) {
    int i = node + 1;
    for (int j = 0; j <= a[node]; ++j)
      t.entries[{node, j}] = {om(n - i - j), om(j), om(i)};
  }
  return t;
}

WeightTable g2_table(const RootDatum& rd)
{
  auto w = [&](const char* s) { return parse_weight(rd, s); };
  WeightTable t;
  t.entries[{0, 0}] = {w("a"), w("0"), w("a")};
  t.entries[{0, 1}] = {w("b"), w("a"), w("a")};
  t.entries[{0, 2}] = {w("b"), w("2a"), w("a")};
  t.entries[{0, 3}] = {w("0"), w("a"), w("a")};
  t.entries[{1, 0}] = {w("b"), w("0"), w("b")};
  t.entries[{1, 1}] = {w("2b"), w("3a"), w("b")};
  t.entries[{1, 2}] = {w("b"), w("3a"), w("b")};
  t.entries[{1, 3}] = {w("0"), w("b"), w("b")};
  return t;
}

struct KnownWord {
  Word word;
  WeightTable table;
};

std::vector<KnownWord> seeds_of_closure(const RootDatum& rd, const WeightTable* d4)
{
  Word w = rd.canonical_word();
  switch (rd.family) {
  case Family::A: return {{w, type_a_table(rd, w)}};
  case Family::G: return {{w, g2_table(rd)}};
  case Family::D:
    if (!d4)
      throw BuildError("D4 needs a weight table");
    return {{w, *d4}};
  }
  return {};
}

} // namespace

WeightTable weight_table_from_json(const RootDatum& rd, const json& j)
{
  WeightTable t;
  for (const auto& [key, val] : j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw BuildError("weight table key '" + key + "' is not 'node,occurrence'");
    int node = rd.node_index(key.substr(0, comma));
    int occ = std::stoi(key.substr(comma + 1));
    if (val.size() != 3)
      throw BuildError("weight table entry '" + key + "' needs three weights");
    Triple tr;
    for (int p = 0; p < 3; ++p) {
      const auto& w = val.at(p);
      if (w.is_string()) {
        tr[p] = parse_weight(rd, w.get<std::string>());
      } else {
        if (static_cast<int>(w.size()) != rd.rank)
          throw BuildError("weight table entry '" + key + "' has wrong rank");
        Weight x;
        for (const auto& c : w)
          x.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
        tr[p] = x;
      }
      for (const auto& c : tr[p])
        if (c < 0)
          throw BuildError("weight table entry '" + key + "' is not dominant");
    }
    t.entries[{node, occ}] = tr;
  }
  return t;
}

json weight_table_to_json(const RootDatum& rd, const WeightTable& t)
{
  json j = json::object();
  for (const auto& [key, tr] : t.entries) {
    json row = json::array();
    for (const auto& w : tr)
      row.push_back(format_weight(rd, w));
    j[rd.node_names[key.first] + "," + std::to_string(key.second)] = row;
  }
  return j;
}

WeightTable load_weight_table(const RootDatum& rd, const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw BuildError("cannot read weight table '" + path + "'");
  json j;
  in >> j;
  return weight_table_from_json(rd, j);
}

Seed build_bruhat_seed(const RootDatum& rd, const Word& word)
{
  if (!is_longest_word(rd, word))
    throw BuildError("word " + format_word(rd, word) + " is not a reduced word for w0 in " + rd.kind_name());
  Seed s;
  auto total = occurrences(word);
  std::vector<int> current(rd.rank), count(rd.rank, 0);

  // prefix u_l for the j-th occurrence of node i counted from the left
  auto prefix_for = [&](int node, int j) {
    int seen = 0;
    for (std::size_t l = 0; l < word.size(); ++l)
      if (word[l] == node && ++seen == j)
        return Word(word.begin(), word.begin() + static_cast<long>(l) + 1);
    return Word{};
  };
  auto make = [&](int node, int occ) {
    Vertex x;
    x.name = structural_name(rd, node, occ);
    x.tag = {node, occ, Role::Face, -1};
    x.frozen = occ == 0 || occ == total[node];
    if (x.frozen)
      x.tag.role = Role::Edge;
    x.d = rd.d[node];
    Word u = prefix_for(node, occ);
    std::string desc = "D[" + (u.empty() ? std::string("e") : format_word(rd, u)) + ";" + rd.node_names[node] + "]";
    x.label = make_atomic(desc, node, occ, u);
    return s.add_vertex(std::move(x));
  };
  for (int n = 0; n < rd.rank; ++n)
    current[n] = make(n, 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    int v = make(i, ++count[i]);
    s.add_arrow(v, current[i], 1);
    for (int j : rd.neighbours(i)) {
      s.add_arrow(current[i], current[j], rat(1, 2));
      s.add_arrow(current[j], v, rat(1, 2));
    }
    current[i] = v;
  }
  check_invariants(s);
  return s;
}

WeightTable weight_table(const RootDatum& rd, const Word& word, const WeightTable* user)
{
  if (user)
    return *user;
  std::optional<WeightTable> d4;
  if (rd.family == Family::D)
    d4 = load_weight_table(rd, data_dir() + "/d4_weights.json");
  auto start = seeds_of_closure(rd, d4 ? &*d4 : nullptr);

  // breadth-first over words, carrying their tables
  std::map<Word, WeightTable> seen;
  std::deque<Word> todo;
  for (auto& k : start) {
    seen[k.word] = k.table;
    todo.push_back(k.word);
  }
  const std::size_t cap = 20000;
  while (!todo.empty() && seen.size() < cap) {
    Word w = todo.front();
    todo.pop_front();
    if (w == word)
      break;
    const WeightTable t = seen[w];
    std::vector<std::pair<Word, WeightTable>> next;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1] || rd.adjacent(w[p], w[p + 1]))
        continue;
      Word x = w;
      std::swap(x[p], x[p + 1]);
      next.emplace_back(x, t);
    }
    {
      Word x = reversed(w);
      auto a = occurrences(w);
      WeightTable r;
      for (const auto& [key, tr] : t.entries)
        r.entries[{key.first, a[key.first] - key.second}] = swap12(tr);
      next.emplace_back(x, r);
    }
    for (const auto& sigma : rd.diagram_automorphisms()) {
      Word x = w;
      for (int& c : x)
        c = sigma[c];
      WeightTable r;
      for (const auto& [key, tr] : t.entries)
        r.entries[{sigma[key.first], key.second}] = {permute_weight(tr[0], sigma), permute_weight(tr[1], sigma),
                                                     permute_weight(tr[2], sigma)};
      next.emplace_back(x, r);
    }
    for (auto& [x, r] : next)
      if (seen.emplace(x, r).second)
        todo.push_back(x);
  }
  auto it = seen.find(word);
  if (it == seen.end())
    throw BuildError("no weight table for word " + format_word(rd, word) + " in " + rd.kind_name() +
                     "; supply one with --weights");
  return it->second;
}

Seed assign_weights(const Seed& s, const RootDatum& rd, const Word& word, const WeightTable* user)
{
  WeightTable t = weight_table(rd, word, user);
  Seed out = s;
  for (auto& x : out.v) {
    auto it = t.entries.find({x.tag.node, x.tag.occurrence});
    if (it == t.entries.end())
      throw BuildError("weight table has no entry for " + x.name);
    x.weights.assign(it->second.begin(), it->second.end());
    if (x.weights[2] != rd.omega(x.tag.node))
      throw BuildError("weight of " + x.name + " at A3 is not the fundamental weight of its node");
  }
  if (rd.family == Family::A) {
    for (auto& x : out.v) {
      auto name = type_a_name(x.weights);
      if (!name)
        throw BuildError("type A weight of " + x.name + " is not a triple of fundamental weights");
      auto lab = std::make_shared<Label>(*make_wedge("wedge", {0, 1, 2}, type_a_degrees(x.weights)));
      lab->node = x.label->node;
      lab->occurrence = x.label->occurrence;
      lab->prefix = x.label->prefix;
      x.label = lab;
      x.name = *name;
    }
  }
  return out;
}

std::vector<Weight> s_sum(const Seed& s, int e) { return weight_balance(s, e); }

std::optional<int> edge_vertex(const Seed& s, const RootDatum& rd, int x, int y, int k)
{
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& v = s.v[i];
    if (!v.frozen || v.weights.size() <= static_cast<std::size_t>(std::max(x, y)))
      continue;
    bool ok = v.weights[x] == rd.omega(k);
    for (std::size_t p = 0; p < v.weights.size() && ok; ++p)
      if (static_cast<int>(p) != x && static_cast<int>(p) != y && v.weights[p] != rd.zero())
        ok = false;
    if (ok)
      return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

std::string kernel_text(const std::vector<RatVec>& k)
{
  std::ostringstream os;
  for (const auto& v : k) {
    os << " [";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? " " : "") << v[i].get_str();
    os << "]";
  }
  return os.str();
}

// rows of sum_e u_e w_e over the chosen slots
void append_rows(RatMat& a, RatVec& rhs, const std::vector<const std::vector<Weight>*>& cols,
                 const std::vector<Weight>& target, const std::vector<int>& slots)
{
  for (int p : slots) {
    for (std::size_t c = 0; c < target[p].size(); ++c) {
      RatVec row;
      for (const auto* w : cols)
        row.push_back((*w)[p][c]);
      a.push_back(row);
      rhs.push_back(target[p][c]);
    }
  }
}

} // namespace

Seed complete_triangle_seed(const Seed& in, const RootDatum& rd, CompletionReport* report)
{
  if (!in.has_weights() || in.marked_points() != 3)
    throw BuildError("completion needs a seed with weight triples");
  Seed s = in;
  const std::size_t old_n = s.size();
  std::vector<int> faces = s.unfrozen();
  std::vector<int> edges13, edges23;
  for (std::size_t i = 0; i < old_n; ++i) {
    if (!s.v[i].frozen)
      continue;
    if (s.v[i].weights[1] == rd.zero())
      edges13.push_back(static_cast<int>(i));
    else if (s.v[i].weights[0] == rd.zero())
      edges23.push_back(static_cast<int>(i));
    else
      throw BuildError("frozen vertex " + s.v[i].name + " is on neither old edge");
  }

  std::vector<int> fresh;
  for (int k = 0; k < rd.rank; ++k) {
    Vertex x;
    x.weights = {rd.omega(rd.dual_node(k)), rd.omega(k), rd.zero()};
    x.tag = {k, -1, Role::Edge, -1};
    x.frozen = true;
    x.d = rd.d[k];
    if (rd.family == Family::A) {
      x.name = *type_a_name(x.weights);
      x.label = make_wedge("wedge", {0, 1, 2}, type_a_degrees(x.weights));
    } else {
      x.name = "x_" + rd.node_names[k];
      x.label = make_atomic("E[" + rd.node_names[k] + "]", k, -1);
    }
    fresh.push_back(s.add_vertex(std::move(x)));
  }
  std::vector<const std::vector<Weight>*> cols;
  for (int e : fresh)
    cols.push_back(&s.v[e].weights);

  CompletionReport rep;
  // (i) face rows
  for (int f : faces) {
    RatMat a;
    RatVec rhs;
    auto known = weight_balance(s, f);
    for (auto& w : known)
      for (auto& c : w)
        c = -c;
    append_rows(a, rhs, cols, known, {0, 1, 2});
    auto sol = solve_exact(a, rhs, fresh.size());
    if (!sol.consistent)
      throw BuildError("face equation has no solution at " + s.v[f].name + " (weight table or conjecture failure)");
    if (!sol.kernel.empty())
      throw BuildError("face equation at " + s.v[f].name + " is not unique; kernel" + kernel_text(sol.kernel));
    rep.face_kernel += sol.kernel.size();
    for (std::size_t t = 0; t < fresh.size(); ++t) {
      if (!is_integer(sol.x[t]))
        throw BuildError("face equation at " + s.v[f].name + " forces a non-integral entry");
      set_pair(s, f, fresh[t], sol.x[t]);
    }
  }
  // (ii) old edge vertices: S-sum vanishes at the opposite corner
  auto solve_edge = [&](int o, int opposite) {
    RatMat a;
    RatVec rhs;
    auto known = weight_balance(s, o);
    for (auto& w : known)
      for (auto& c : w)
        c = -c;
    append_rows(a, rhs, cols, known, {opposite});
    auto sol = solve_exact(a, rhs, fresh.size());
    if (!sol.consistent)
      throw BuildError("edge condition has no solution at " + s.v[o].name);
    if (!sol.kernel.empty())
      throw BuildError("edge condition at " + s.v[o].name + " is not unique; kernel" + kernel_text(sol.kernel));
    rep.edge_kernel += sol.kernel.size();
    for (std::size_t t = 0; t < fresh.size(); ++t)
      set_pair(s, o, fresh[t], sol.x[t]);
  };
  for (int o : edges13)
    solve_edge(o, 1);
  for (int o : edges23)
    solve_edge(o, 0);

  // lambda_k, mu_k from both old edges; they must agree
  rep.conjecture_values = true;
  for (int k = 0; k < rd.rank; ++k) {
    auto o31 = edge_vertex(s, rd, 2, 0, k);
    auto o23 = edge_vertex(s, rd, 1, 2, k);
    if (!o31 || !o23)
      throw BuildError("missing old edge vertex for " + rd.node_names[k]);
    auto s31 = s_sum(s, *o31);
    auto s23 = s_sum(s, *o23);
    if (s31[2] != s23[1] || s31[0] != s23[2])
      throw BuildError("S-sums on the two old edges differ for " + rd.node_names[k]);
    rep.lambda.push_back(s31[2]);
    rep.mu.push_back(s31[0]);
    Weight half_alpha = rd.alpha(k), half_w0 = w0(rd, rd.alpha(k));
    for (auto& c : half_alpha)
      c /= 2;
    for (auto& c : half_w0)
      c /= 2;
    if (s31[2] != half_alpha || s31[0] != half_w0)
      rep.conjecture_values = false;
  }
  if (!rep.conjecture_values)
    throw BuildError("edge S-sums are not (alpha_k/2, w0(alpha_k)/2)");

  // (iii) half arrows among the new edge vertices
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = a + 1; b < fresh.size(); ++b)
      pairs.emplace_back(fresh[a], fresh[b]);
  RatMat a;
  RatVec rhs;
  for (int k = 0; k < rd.rank; ++k) {
    // vertex with omega_k at A1
    int e = fresh[rd.dual_node(k)];
    std::vector<Weight> target = {rep.lambda[k], rep.mu[k], rd.zero()};
    auto known = weight_balance(s, e);
    for (int p = 0; p < 3; ++p) {
      for (int c = 0; c < rd.rank; ++c) {
        RatVec row;
        for (auto [x, y] : pairs) {
          // b_xy = u, b_yx = -u d_y / d_x
          if (e == x)
            row.push_back(s.v[y].weights[p][c]);
          else if (e == y)
            row.push_back(rat(-s.v[y].d, s.v[x].d) * s.v[x].weights[p][c]);
          else
            row.push_back(0);
        }
        a.push_back(row);
        rhs.push_back(target[p][c] - known[p][c]);
      }
    }
  }
  auto sol = solve_exact(a, rhs, pairs.size());
  if (!sol.consistent)
    throw BuildError("no half-arrows on the new edge reproduce the edge S-sums");
  if (!sol.kernel.empty())
    throw BuildError("new edge half-arrows are not unique; kernel" + kernel_text(sol.kernel));
  rep.new_edge_kernel = sol.kernel.size();
  for (std::size_t t = 0; t < pairs.size(); ++t)
    set_pair(s, pairs[t].first, pairs[t].second, sol.x[t]);

  check_invariants(s);
  for (int f : faces)
    if (!is_zero(weight_balance(s, f)))
      throw BuildError("face equation fails at " + s.v[f].name + " after completion");
  for (int k = 0; k < rd.rank; ++k) {
    auto e = edge_vertex(s, rd, 0, 1, k);
    auto sum = s_sum(s, *e);
    if (sum[0] != rep.lambda[k] || sum[1] != rep.mu[k] || sum[2] != rd.zero())
      throw BuildError("S-sum on the new edge is wrong for " + rd.node_names[k]);
  }
  if (report)
    *report = rep;
  return s;
}

Seed triangle_seed(const RootDatum& rd, const Word& word, const WeightTable* user, CompletionReport* report)
{
  return complete_triangle_seed(assign_weights(build_bruhat_seed(rd, word), rd, word, user), rd, report);
}

Seed reverse_word_seed(const RootDatum& rd, const Word& word, const WeightTable* user)
{
  if (!is_longest_word(rd, word))
    throw BuildError("word " + format_word(rd, word) + " is not a reduced word for w0");
  std::optional<WeightTable> rev;
  if (user) {
    auto a = occurrences(word);
    WeightTable r;
    for (const auto& [key, tr] : user->entries)
      r.entries[{key.first, a[key.first] - key.second}] = swap12(tr);
    rev = r;
  }
  return triangle_seed(rd, reversed(word), rev ? &*rev : nullptr);
}

} // namespace clusterseed
