#include "clusterseed/sequences.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace clusterseed {

std::size_t MutationSequence::length() const
{
  std::size_t n = 0;
  for (const auto& st : stages)
    n += st.size();
  return n;
}

std::vector<std::string> MutationSequence::flat() const
{
  std::vector<std::string> out;
  for (const auto& st : stages)
    out.insert(out.end(), st.begin(), st.end());
  return out;
}

MutationSequence MutationSequence::reversed() const
{
  MutationSequence r = *this;
  r.name = name + "_reversed";
  std::reverse(r.stages.begin(), r.stages.end());
  for (auto& st : r.stages)
    std::reverse(st.begin(), st.end());
  return r;
}

MutationSequence MutationSequence::concat(const MutationSequence& other) const
{
  MutationSequence r = *this;
  r.stages.insert(r.stages.end(), other.stages.begin(), other.stages.end());
  return r;
}

MutationSequence MutationSequence::conjugate(const std::map<std::string, std::string>& pairing) const
{
  MutationSequence r = *this;
  for (auto& st : r.stages)
    for (auto& n : st)
      if (auto it = pairing.find(n); it != pairing.end())
        n = it->second;
  return r;
}

bool same_stages(const MutationSequence& a, const MutationSequence& b)
{
  if (a.stages.size() != b.stages.size())
    return false;
  for (std::size_t k = 0; k < a.stages.size(); ++k) {
    auto x = a.stages[k], y = b.stages[k];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y)
      return false;
  }
  return true;
}

namespace {

std::map<std::string, MutationSequence> make_registry()
{
  std::map<std::string, MutationSequence> r;
  MutationSequence s13{"g2_13", {{"x_a2"}, {"x_a1", "x_b1"}, {"x_a2"}}, "G2 triangle, transposition (13)"};
  MutationSequence s23{"g2_23", {{"x_b1"}, {"x_b2", "x_a2"}, {"x_b1"}}, "G2 triangle, transposition (23)"};
  MutationSequence s12 = s13.concat(s23).concat(s13);
  s12.name = "g2_12";
  s12.provenance = "G2 triangle, (12) = (13)(23)(13)";
  MutationSequence flip{"g2_flip",
                        {{"x0a"},
                         {"x-1a", "x0b", "x1a"},
                         {"x-2a", "x-1b", "x0a", "x1b", "x2a"},
                         {"x-2b", "x-1a", "x0b", "x1a", "x2b"},
                         {"x-1b", "x0a", "x1b"},
                         {"x0b"}},
                        "G2 quadrilateral, flip of diagonal {1,3}"};
  // found by find_flip_sequence on the SL3 quadrilateral seed (depth 4)
  MutationSequence sl3{"sl3_flip", {{"x_2010"}, {"x_1020"}, {"x_1110"}, {"x_1011"}},
                       "SL3 quadrilateral, flip of diagonal {1,3}, breadth-first search"};
  // iterative deepening from the SL4 quadrilateral seed; x_2020 is mutated twice
  MutationSequence sl4{"sl4_flip", {}, "SL4 quadrilateral, flip of diagonal {1,3}, bounded search"};
  for (const char* x : {"x_3010", "x_2020", "x_1030", "x_2110", "x_1120", "x_1210", "x_1021", "x_2011", "x_2020",
                        "x_1012"})
    sl4.stages.push_back({x});
  for (auto* q : {&s13, &s23, &s12, &flip, &sl3, &sl4})
    r[q->name] = *q;
  return r;
}

} // namespace

const std::map<std::string, MutationSequence>& builtin_sequences()
{
  static const auto r = make_registry();
  return r;
}

const MutationSequence& builtin_sequence(const std::string& name)
{
  const auto& r = builtin_sequences();
  auto it = r.find(name);
  if (it == r.end())
    throw SequenceError("unknown sequence '" + name + "'");
  return it->second;
}

WeightTableSnapshot weight_snapshot(const Seed& s)
{
  WeightTableSnapshot out;
  for (const auto& x : s.v)
    out.emplace_back(x.name, x.weights);
  return out;
}

SequenceRun apply_sequence(const Seed& s, const MutationSequence& seq, int stage_limit)
{
  SequenceRun run{s, {}};
  int done = 0;
  for (const auto& st : seq.stages) {
    if (stage_limit >= 0 && done >= stage_limit)
      break;
    Seed fwd = run.seed, bwd = run.seed;
    for (const auto& n : st) {
      auto i = run.seed.find(n);
      if (!i)
        throw SequenceError("no vertex '" + n + "' in the seed");
      if (run.seed.v[*i].frozen)
        throw SequenceError("stage " + std::to_string(done + 1) + " mutates frozen vertex '" + n + "'");
      fwd = mutate(fwd, *i);
    }
    for (auto it = st.rbegin(); it != st.rend(); ++it)
      bwd = mutate(bwd, *it);
    if (!same_seed(fwd, bwd, false))
      throw SequenceError("stage " + std::to_string(done + 1) + " of " + seq.name + " depends on the order");
    run.seed = fwd;
    run.weight_trace.push_back(weight_snapshot(fwd));
    ++done;
  }
  return run;
}

std::vector<std::pair<std::string, std::string>> name_mapping(const Seed& a, const Seed& b,
                                                               const std::vector<int>& m)
{
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    out.emplace_back(a.v[i].name, b.v[m[i]].name);
  return out;
}

VerificationReport verify_s3(const Seed& s, const MutationSequence& seq, const std::vector<int>& sigma,
                             bool expect_reversed)
{
  VerificationReport rep;
  rep.name = "s3 " + seq.name;
  try {
    auto run = apply_sequence(s, seq);
    rep.weight_trace = run.weight_trace;
    Seed target = permute_slots(s, sigma);
    IsoOptions o;
    o.reverse_arrows = expect_reversed;
    auto m = quiver_isomorphic(run.seed, target, o);
    if (!m) {
      rep.diagnostics = "result is not isomorphic to the relabeled seed";
      return rep;
    }
    rep.mapping = name_mapping(run.seed, target, *m);
    rep.passed = true;
  } catch (const std::exception& e) {
    rep.diagnostics = e.what();
  }
  return rep;
}

VerificationReport verify_flip(const Seed& conf4, const MutationSequence& seq, const Seed& target,
                               const RootDatum* rd, const std::vector<GoldenSeed>* stages)
{
  (void)rd;
  VerificationReport rep;
  rep.name = "flip " + seq.name;
  try {
    auto run = apply_sequence(conf4, seq);
    rep.weight_trace = run.weight_trace;
    if (stages) {
      Seed cur = conf4;
      for (std::size_t k = 0; k < stages->size() && k < seq.stages.size(); ++k) {
        cur = apply_sequence(cur, MutationSequence{seq.name, {seq.stages[k]}, ""}).seed;
        auto diff = compare_golden(cur, (*stages)[k]);
        if (!diff.empty()) {
          rep.diagnostics = "stage " + std::to_string(k + 1) + ": " + diff.front();
          return rep;
        }
      }
    }
    auto m = quiver_isomorphic(run.seed, target);
    if (!m) {
      rep.diagnostics = "result is not isomorphic to the flipped seed";
      return rep;
    }
    rep.mapping = name_mapping(run.seed, target, *m);
    rep.passed = true;
  } catch (const std::exception& e) {
    rep.diagnostics = e.what();
  }
  return rep;
}

std::map<std::string, std::string> g2_triangle_pairing()
{
  std::map<std::string, std::string> p;
  for (int j = 0; j <= 3; ++j) {
    p["x_a" + std::to_string(j)] = "x_b" + std::to_string(3 - j);
    p["x_b" + std::to_string(3 - j)] = "x_a" + std::to_string(j);
  }
  p["x_a"] = "x_b";
  p["x_b"] = "x_a";
  return p;
}

std::map<std::string, std::string> g2_conf4_pairing()
{
  std::map<std::string, std::string> p;
  for (int j = -3; j <= 3; ++j) {
    p["x" + std::to_string(j) + "a"] = "x" + std::to_string(j) + "b";
    p["x" + std::to_string(j) + "b"] = "x" + std::to_string(j) + "a";
  }
  p["ya"] = "y-b";
  p["y-b"] = "ya";
  p["y-a"] = "yb";
  p["yb"] = "y-a";
  return p;
}

namespace {

Seed pair_dual(const Seed& s, const RootDatum& rd, const std::map<std::string, std::string>& pairing)
{
  std::vector<std::pair<std::string, std::string>> names(pairing.begin(), pairing.end());
  return rename_vertices(langlands_dual(s, rd), names);
}

Seed by_name_order(const Seed& s, const Seed& order)
{
  Seed t = s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int k = s.index(order.v[i].name);
    t.v[i] = s.v[k];
    for (std::size_t j = 0; j < order.size(); ++j)
      t.b2[i][j] = s.b2[k][s.index(order.v[j].name)];
  }
  return t;
}

} // namespace

VerificationReport verify_langlands_pairing(const RootDatum& rd, const Seed& s, const MutationSequence& seq_a,
                                            const MutationSequence& seq_b,
                                            const std::map<std::string, std::string>& pairing,
                                            const Seed* reference, const std::vector<int>& marked_perm)
{
  VerificationReport rep;
  rep.name = "langlands " + seq_a.name + " / " + seq_b.name;
  try {
    if (!same_stages(seq_a.conjugate(pairing), seq_b)) {
      rep.diagnostics = "the pairing does not carry " + seq_a.name + " to " + seq_b.name;
      return rep;
    }
    Seed dual = pair_dual(s, rd, pairing);
    if (reference) {
      std::vector<int> id(s.size());
      Seed ordered = by_name_order(dual, *reference);
      for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = static_cast<int>(i);
      IsoOptions o;
      o.marked_perm = marked_perm;
      if (!is_isomorphism(ordered, *reference, id, o)) {
        rep.diagnostics = "the paired dual seed differs from the reference seed";
        return rep;
      }
    }
    auto a = apply_sequence(s, seq_a);
    auto b = apply_sequence(dual, seq_b);
    Seed lhs = by_name_order(pair_dual(a.seed, rd, pairing), b.seed);
    if (!same_seed(lhs, b.seed, false)) {
      rep.diagnostics = "L does not intertwine the two sequences";
      return rep;
    }
    rep.weight_trace = a.weight_trace;
    for (const auto& [x, y] : pairing)
      rep.mapping.emplace_back(x, y);
    rep.passed = true;
  } catch (const std::exception& e) {
    rep.diagnostics = e.what();
  }
  return rep;
}

VerificationReport verify_node_relabeling_d4(const RootDatum& rd, const std::vector<int>& node_perm)
{
  VerificationReport rep;
  rep.name = "d4 relabeling";
  try {
    if (rd.family != Family::D || rd.rank != 4)
      throw SequenceError("needs the D4 root datum");
    Seed s = triangle_seed(rd, rd.canonical_word());
    std::vector<int> m(s.size(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& t = s.v[i].tag;
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& u = s.v[j].tag;
        if (u.node == node_perm[t.node] && u.occurrence == t.occurrence && u.role == t.role)
          m[i] = static_cast<int>(j);
      }
      if (m[i] < 0) {
        rep.diagnostics = "no image for " + s.v[i].name;
        return rep;
      }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& x = s.v[i];
      const auto& y = s.v[m[i]];
      for (std::size_t p = 0; p < x.weights.size(); ++p)
        for (int c = 0; c < rd.rank; ++c)
          if (x.weights[p][c] != y.weights[p][node_perm[c]]) {
            rep.diagnostics = "weights of " + x.name + " and " + y.name + " do not correspond";
            return rep;
          }
      for (std::size_t j = 0; j < s.size(); ++j)
        if (s.b2[m[i]][m[j]] != s.b2[i][j]) {
          rep.diagnostics = "arrow " + s.v[j].name + " -> " + x.name + " has no image";
          return rep;
        }
    }
    rep.mapping = name_mapping(s, s, m);
    rep.passed = true;
  } catch (const std::exception& e) {
    rep.diagnostics = e.what();
  }
  return rep;
}

VerificationReport verify_dynkin_automorphism_d4(const RootDatum& rd, const std::vector<int>& sigma)
{
  std::vector<int> perm = {sigma.at(0), sigma.at(1), sigma.at(2), 3};
  auto rep = verify_node_relabeling_d4(rd, perm);
  rep.name = "d4 automorphism";
  return rep;
}

std::optional<MutationSequence> find_flip_sequence(const Seed& source, const Seed& target, int max_depth)
{
  struct Node {
    Seed seed;
    std::vector<std::string> path;
  };
  std::deque<Node> queue;
  queue.push_back({source, {}});
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (quiver_isomorphic(cur.seed, target)) {
      MutationSequence seq{"found", {}, "breadth-first search"};
      for (const auto& n : cur.path)
        seq.stages.push_back({n});
      return seq;
    }
    if (static_cast<int>(cur.path.size()) >= max_depth)
      continue;
    for (int k : cur.seed.unfrozen()) {
      const auto& n = cur.seed.v[k].name;
      if (!cur.path.empty() && cur.path.back() == n)
        continue;
      auto path = cur.path;
      path.push_back(n);
      queue.push_back({mutate(cur.seed, k), path});
    }
  }
  return std::nullopt;
}

} // namespace clusterseed
