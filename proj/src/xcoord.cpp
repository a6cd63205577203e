#include "clusterseed/xcoord.hpp"

namespace clusterseed {

namespace {

Rational power(const Rational& x, int e)
{
  Rational r = 1;
  Rational base = e < 0 ? Rational(1) / x : x;
  for (int i = 0; i < std::abs(e); ++i)
    r *= base;
  return r;
}

void add_factor(std::vector<std::pair<XPtr, int>>& fs, const XPtr& f, int p)
{
  if (p == 0)
    return;
  for (auto it = fs.begin(); it != fs.end(); ++it) {
    if (it->first == f) {
      it->second += p;
      if (it->second == 0)
        fs.erase(it);
      return;
    }
  }
  fs.emplace_back(f, p);
}

} // namespace

std::vector<XPtr> initial_x(const Seed& s)
{
  std::vector<XPtr> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto e = std::make_shared<XExpr>();
    e->mono[static_cast<int>(i)] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<XPtr> mutate_x(const std::vector<XPtr>& x, const Seed& s, int k)
{
  if (s.v.at(k).frozen)
    throw SeedError("cannot mutate frozen vertex '" + s.v[k].name + "'");
  std::vector<XPtr> out = x;
  auto inv = std::make_shared<XExpr>();
  for (const auto& [v, e] : x[k]->mono)
    inv->mono[v] = -e;
  for (const auto& [f, p] : x[k]->factors)
    inv->factors.emplace_back(f, -p);
  out[k] = inv;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (static_cast<int>(i) == k || s.b2[i][k] == 0)
      continue;
    // b_ik is integral because k is unfrozen
    int bik = s.b2[i][k] / 2;
    int pos = bik > 0 ? bik : 0;
    auto e = std::make_shared<XExpr>(*x[i]);
    for (const auto& [v, ex] : x[k]->mono) {
      e->mono[v] += pos * ex;
      if (e->mono[v] == 0)
        e->mono.erase(v);
    }
    for (const auto& [f, p] : x[k]->factors)
      add_factor(e->factors, f, pos * p);
    add_factor(e->factors, x[k], -bik);
    out[i] = e;
  }
  return out;
}

Rational evaluate_x(const XPtr& e, const std::vector<Rational>& initial,
                    std::unordered_map<const XExpr*, Rational>& cache)
{
  if (auto it = cache.find(e.get()); it != cache.end())
    return it->second;
  Rational r = 1;
  for (const auto& [v, ex] : e->mono)
    r *= power(initial.at(v), ex);
  for (const auto& [f, p] : e->factors)
    r *= power(1 + evaluate_x(f, initial, cache), p);
  cache.emplace(e.get(), r);
  return r;
}

Rational evaluate_label(const LabelPtr& l, const AtomicFn& atomic,
                        std::unordered_map<const Label*, Rational>& cache)
{
  if (auto it = cache.find(l.get()); it != cache.end())
    return it->second;
  Rational r;
  if (l->kind == Label::Kind::Atomic) {
    r = atomic(*l);
  } else {
    Rational p = 1, m = 1;
    for (const auto& [x, e] : l->plus)
      p *= power(evaluate_label(x, atomic, cache), e);
    for (const auto& [x, e] : l->minus)
      m *= power(evaluate_label(x, atomic, cache), e);
    Rational den = evaluate_label(l->denominator, atomic, cache);
    if (den == 0)
      throw SeedError("exchange denominator vanishes");
    r = (p + m) / den;
  }
  cache.emplace(l.get(), r);
  return r;
}

Rational p_map(const Seed& s, int i, const std::vector<Rational>& a)
{
  Rational r = 1;
  auto e = p_exponents(s, i);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      r *= power(a.at(j), e[j]);
  return r;
}

} // namespace clusterseed
