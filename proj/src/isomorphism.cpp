#include "clusterseed/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace clusterseed {

namespace {

struct Matcher {
  const Seed& a;
  const Seed& b;
  const IsoOptions& o;
  int sign;
  std::vector<int> slot; // slot map, identity if none given

  bool weights_match(int i, int j) const
  {
    if (!o.match_weights || !a.has_weights())
      return true;
    const auto& wa = a.v[i].weights;
    const auto& wb = b.v[j].weights;
    if (wa.size() != wb.size())
      return false;
    for (std::size_t p = 0; p < wa.size(); ++p)
      if (wa[p] != wb[slot[p]])
        return false;
    return true;
  }

  // sorted row signature is invariant under relabelling
  std::vector<int> signature(const Seed& s, int i, int sgn) const
  {
    std::vector<int> row;
    for (int x : s.b2[i])
      if (x != 0)
        row.push_back(sgn * x);
    std::sort(row.begin(), row.end());
    return row;
  }

  bool compatible(int i, int j) const
  {
    if (a.v[i].d != b.v[j].d)
      return false;
    if (o.match_frozen && a.v[i].frozen != b.v[j].frozen)
      return false;
    return weights_match(i, j);
  }
};

} // namespace

std::optional<std::vector<int>> quiver_isomorphic(const Seed& s1, const Seed& s2, const IsoOptions& opts)
{
  if (s1.size() != s2.size())
    return std::nullopt;
  const int n = static_cast<int>(s1.size());
  Matcher m{s1, s2, opts, opts.reverse_arrows ? -1 : 1, {}};
  int slots = s1.marked_points();
  if (opts.match_weights && s1.has_weights() != s2.has_weights())
    return std::nullopt;
  if (opts.match_weights && s1.has_weights() && s1.marked_points() != s2.marked_points())
    return std::nullopt;
  if (!opts.marked_perm.empty())
    m.slot = opts.marked_perm;
  else
    for (int p = 0; p < slots; ++p)
      m.slot.push_back(p);

  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) {
    auto sig = m.signature(s1, i, m.sign);
    for (int j = 0; j < n; ++j)
      if (m.compatible(i, j) && m.signature(s2, j, 1) == sig)
        cand[i].push_back(j);
    if (cand[i].empty())
      return std::nullopt;
  }
  // most constrained first, but the mapping is reported per s1 index; to keep
  // lexicographic minimality we search in s1 order.
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int i) {
    if (i == n)
      return true;
    for (int j : cand[i]) {
      if (used[j])
        continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p)
        ok = m.sign * s1.b2[i][p] == s2.b2[j][map[p]] && m.sign * s1.b2[p][i] == s2.b2[map[p]][j];
      if (!ok)
        continue;
      map[i] = j;
      used[j] = true;
      if (go(i + 1))
        return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  if (go(0))
    return map;
  return std::nullopt;
}

bool is_isomorphism(const Seed& s1, const Seed& s2, const std::vector<int>& mapping, const IsoOptions& opts)
{
  if (s1.size() != s2.size() || mapping.size() != s1.size())
    return false;
  Matcher m{s1, s2, opts, opts.reverse_arrows ? -1 : 1, {}};
  if (!opts.marked_perm.empty())
    m.slot = opts.marked_perm;
  else
    for (int p = 0; p < s1.marked_points(); ++p)
      m.slot.push_back(p);
  std::vector<bool> used(s2.size(), false);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    int j = mapping[i];
    if (j < 0 || j >= static_cast<int>(s2.size()) || used[j] || !m.compatible(static_cast<int>(i), j))
      return false;
    used[j] = true;
  }
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t p = 0; p < s1.size(); ++p)
      if (m.sign * s1.b2[i][p] != s2.b2[mapping[i]][mapping[p]])
        return false;
  return true;
}

} // namespace clusterseed
