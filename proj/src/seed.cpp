#include "clusterseed/seed.hpp"

#include <algorithm>
#include <sstream>

namespace clusterseed {

int Seed::index(const std::string& name) const
{
  if (auto i = find(name))
    return *i;
  throw SeedError("no vertex named '" + name + "'");
}

std::optional<int> Seed::find(const std::string& name) const
{
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].name == name)
      return static_cast<int>(i);
  return std::nullopt;
}

int Seed::rank_of_weights() const
{
  return has_weights() ? static_cast<int>(v[0].weights[0].size()) : 0;
}

std::vector<int> Seed::unfrozen() const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].frozen)
      out.push_back(static_cast<int>(i));
  return out;
}

int Seed::add_vertex(Vertex x)
{
  if (find(x.name))
    throw SeedError("duplicate vertex name '" + x.name + "'");
  v.push_back(std::move(x));
  for (auto& row : b2)
    row.push_back(0);
  b2.emplace_back(v.size(), 0);
  return static_cast<int>(v.size()) - 1;
}

int arrow_unit(int di, int dj)
{
  if (di > 1 && dj == 1)
    return di;
  return 1;
}

void Seed::add_arrow(int j, int i, Rational units)
{
  // b_ij = +u*unit(i,j), b_ji = -b_ij d_j / d_i
  Rational bij = units * arrow_unit(v[i].d, v[j].d);
  Rational bji = -bij * v[j].d / v[i].d;
  Rational t2ij = 2 * bij, t2ji = 2 * bji;
  if (!is_integer(t2ij) || !is_integer(t2ji))
    throw SeedError("arrow " + v[j].name + " -> " + v[i].name + " is not half-integral");
  b2[i][j] += static_cast<int>(t2ij.get_num().get_si());
  b2[j][i] += static_cast<int>(t2ji.get_num().get_si());
}

namespace {

std::string weights_str(const std::vector<Weight>& ws)
{
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < ws.size(); ++p) {
    if (p)
      os << "; ";
    for (std::size_t c = 0; c < ws[p].size(); ++c)
      os << (c ? "," : "") << ws[p][c].get_str();
  }
  os << ")";
  return os.str();
}

} // namespace

Seed mutate(const Seed& s, int k)
{
  if (k < 0 || k >= static_cast<int>(s.size()))
    throw SeedError("mutation index out of range");
  if (s.v[k].frozen)
    throw SeedError("cannot mutate frozen vertex '" + s.v[k].name + "'");
  const std::size_t n = s.size();
  Seed t = s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<int>(i) == k || static_cast<int>(j) == k) {
        t.b2[i][j] = -s.b2[i][j];
        continue;
      }
      long bik = s.b2[i][k], bkj = s.b2[k][j];
      if (bik * bkj > 0) {
        // b'_ij = b_ij + |b_ik| b_kj; b_ik or b_kj is an integer since k is unfrozen
        long num = std::labs(bik) * bkj;
        t.b2[i][j] = s.b2[i][j] + static_cast<int>(num / 2);
      }
    }
  }

  Monomial plus, minus;
  std::vector<Weight> wplus, wminus;
  if (s.has_weights()) {
    wplus.assign(s.marked_points(), Weight(s.rank_of_weights(), Rational(0)));
    wminus = wplus;
  }
  for (std::size_t j = 0; j < n; ++j) {
    int b2kj = s.b2[k][j];
    if (b2kj == 0)
      continue;
    int bkj = b2kj / 2;
    if (s.has_weights()) {
      auto& acc = bkj > 0 ? wplus : wminus;
      for (int p = 0; p < s.marked_points(); ++p)
        for (std::size_t c = 0; c < acc[p].size(); ++c)
          acc[p][c] += std::abs(bkj) * s.v[j].weights[p][c];
    }
    if (s.v[k].label && s.v[j].label)
      (bkj > 0 ? plus : minus).emplace_back(s.v[j].label, std::abs(bkj));
  }
  if (s.has_weights()) {
    if (wplus != wminus)
      throw SeedError("weight homogeneity fails mutating '" + s.v[k].name + "': " +
                      weights_str(wplus) + " vs " + weights_str(wminus));
    auto& wk = t.v[k].weights;
    for (int p = 0; p < s.marked_points(); ++p)
      for (std::size_t c = 0; c < wk[p].size(); ++c)
        wk[p][c] = wplus[p][c] - wk[p][c];
  }
  if (s.v[k].label)
    t.v[k].label = make_exchange(s.v[k].name, std::move(plus), std::move(minus), s.v[k].label);
  check_invariants(t);
  if (t.has_weights())
    for (int i : t.unfrozen())
      if (!is_zero(weight_balance(t, i)) && is_zero(weight_balance(s, i)))
        throw SeedError("face equation at '" + t.v[i].name + "' broken by mutating '" + s.v[k].name + "'");
  return t;
}

Seed mutate(const Seed& s, const std::string& k) { return mutate(s, s.index(k)); }

bool skew_symmetrizable(const Seed& s)
{
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (static_cast<long>(s.b2[i][j]) * s.v[j].d != -static_cast<long>(s.b2[j][i]) * s.v[i].d)
        return false;
  return true;
}

bool frozen_integrality(const Seed& s)
{
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.b2[i][j] % 2 != 0 && !(s.v[i].frozen && s.v[j].frozen))
        return false;
  return true;
}

void check_invariants(const Seed& s)
{
  if (s.b2.size() != s.size())
    throw SeedError("b2 has wrong size");
  for (const auto& row : s.b2)
    if (row.size() != s.size())
      throw SeedError("b2 is not square");
  if (!skew_symmetrizable(s))
    throw SeedError("exchange matrix is not skew-symmetrizable by the multipliers");
  if (!frozen_integrality(s))
    throw SeedError("half-integral entry touches an unfrozen vertex");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.b2[i][i] != 0)
      throw SeedError("nonzero diagonal entry at '" + s.v[i].name + "'");
}

std::vector<int> p_exponents(const Seed& s, int i)
{
  std::vector<int> out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.b2[i][j] % 2 != 0)
      throw SeedError("row of '" + s.v[i].name + "' is not integral");
    out.push_back(s.b2[i][j] / 2);
  }
  return out;
}

std::vector<Weight> weight_balance(const Seed& s, int i)
{
  if (!s.has_weights())
    throw SeedError("seed carries no weights");
  std::vector<Weight> out(s.marked_points(), Weight(s.rank_of_weights(), Rational(0)));
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.b2[i][j] == 0)
      continue;
    Rational b = s.b(i, static_cast<int>(j));
    for (int p = 0; p < s.marked_points(); ++p)
      for (std::size_t c = 0; c < out[p].size(); ++c)
        out[p][c] += b * s.v[j].weights[p][c];
  }
  return out;
}

bool is_zero(const std::vector<Weight>& ws)
{
  for (const auto& w : ws)
    for (const auto& c : w)
      if (c != 0)
        return false;
  return true;
}

Seed langlands_dual(const Seed& s, const RootDatum& rd)
{
  const int D = rd.max_d();
  Seed t = s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (D % s.v[i].d != 0)
      throw SeedError("multiplier does not divide the normalisation");
    t.v[i].d = D / s.v[i].d;
    for (std::size_t j = 0; j < s.size(); ++j)
      t.b2[i][j] = s.b2[j][i];
    for (auto& w : t.v[i].weights) {
      w = langlands_weight(rd, w);
      for (auto& c : w)
        c /= s.v[i].d;
    }
  }
  return t;
}

Seed rename_vertices(const Seed& s, const std::vector<std::pair<std::string, std::string>>& names)
{
  Seed t = s;
  for (const auto& [from, to] : names)
    t.v[s.index(from)].name = to;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t.v[i].name == t.v[j].name)
        throw SeedError("renaming produced duplicate '" + t.v[i].name + "'");
  return t;
}

Seed permute_slots(const Seed& s, const std::vector<int>& perm)
{
  Seed t = s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.v[i].weights.empty())
      continue;
    if (perm.size() != s.v[i].weights.size())
      throw SeedError("slot permutation has wrong length");
    for (std::size_t p = 0; p < perm.size(); ++p)
      t.v[i].weights[perm[p]] = s.v[i].weights[p];
  }
  return t;
}

Seed reverse_arrows(const Seed& s)
{
  Seed t = s;
  for (auto& row : t.b2)
    for (auto& x : row)
      x = -x;
  return t;
}

bool same_seed(const Seed& a, const Seed& b, bool compare_labels)
{
  if (a.size() != b.size() || a.b2 != b.b2)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a.v[i], &y = b.v[i];
    if (x.name != y.name || x.frozen != y.frozen || x.d != y.d || x.weights != y.weights)
      return false;
    if (compare_labels && !same_label(x.label, y.label))
      return false;
  }
  return true;
}

} // namespace clusterseed
