#include "clusterseed/label.hpp"

#include <algorithm>
#include <functional>

namespace clusterseed {

namespace {

void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

std::size_t atomic_hash(const Label& l)
{
  std::size_t h = std::hash<std::string>{}(l.descriptor);
  for (int x : l.flag_order)
    mix(h, static_cast<std::size_t>(x));
  for (int x : l.degrees)
    mix(h, static_cast<std::size_t>(x) * 31);
  return h;
}

std::size_t monomial_hash(const Monomial& m)
{
  // order independent
  std::size_t h = 0;
  for (const auto& [l, e] : m) {
    std::size_t t = l->hash;
    mix(t, static_cast<std::size_t>(e));
    h += t;
  }
  return h;
}

} // namespace

LabelPtr make_atomic(std::string descriptor, int node, int occurrence, Word prefix)
{
  auto l = std::make_shared<Label>();
  l->descriptor = std::move(descriptor);
  l->node = node;
  l->occurrence = occurrence;
  l->prefix = std::move(prefix);
  l->hash = atomic_hash(*l);
  return l;
}

LabelPtr make_wedge(std::string descriptor, std::vector<int> flag_order, std::vector<int> degrees)
{
  auto l = std::make_shared<Label>();
  l->descriptor = std::move(descriptor);
  l->flag_order = std::move(flag_order);
  l->degrees = std::move(degrees);
  l->hash = atomic_hash(*l);
  return l;
}

LabelPtr make_exchange(std::string vertex, Monomial plus, Monomial minus, LabelPtr denominator)
{
  // mu_k(mu_k(A)) = A
  if (denominator->kind == Label::Kind::Exchange && denominator->vertex == vertex &&
      same_monomial(denominator->plus, minus) && same_monomial(denominator->minus, plus))
    return denominator->denominator;
  auto l = std::make_shared<Label>();
  l->kind = Label::Kind::Exchange;
  l->vertex = std::move(vertex);
  l->plus = std::move(plus);
  l->minus = std::move(minus);
  l->denominator = std::move(denominator);
  std::size_t h = std::hash<std::string>{}(l->vertex);
  mix(h, monomial_hash(l->plus));
  mix(h, monomial_hash(l->minus) * 7);
  mix(h, l->denominator->hash);
  l->hash = h;
  return l;
}

LabelPtr relabel_flags(const LabelPtr& l, const std::vector<int>& point_map, bool sign_ambiguous)
{
  if (l->kind != Label::Kind::Atomic)
    return l;
  auto c = std::make_shared<Label>(*l);
  for (int& p : c->flag_order)
    p = point_map.at(p);
  c->sign_ambiguous = c->sign_ambiguous || sign_ambiguous;
  c->hash = atomic_hash(*c);
  return c;
}

LabelPtr sort_flags(const LabelPtr& l)
{
  if (l->kind != Label::Kind::Atomic || l->flag_order.empty())
    return l;
  std::vector<std::pair<int, int>> rows;
  for (std::size_t t = 0; t < l->flag_order.size(); ++t)
    rows.emplace_back(l->flag_order[t], l->degrees[t]);
  std::sort(rows.begin(), rows.end());
  auto c = std::make_shared<Label>(*l);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    c->flag_order[t] = rows[t].first;
    c->degrees[t] = rows[t].second;
  }
  c->hash = atomic_hash(*c);
  return c;
}

bool same_monomial(const Monomial& a, const Monomial& b)
{
  if (a.size() != b.size())
    return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& [la, ea] : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && b[j].second == ea && same_label(la, b[j].first)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

bool same_label(const LabelPtr& a, const LabelPtr& b)
{
  if (a == b)
    return true;
  if (!a || !b || a->hash != b->hash || a->kind != b->kind)
    return false;
  if (a->kind == Label::Kind::Atomic)
    return a->descriptor == b->descriptor && a->flag_order == b->flag_order &&
           a->degrees == b->degrees;
  return a->vertex == b->vertex && same_label(a->denominator, b->denominator) &&
         same_monomial(a->plus, b->plus) && same_monomial(a->minus, b->minus);
}

std::string describe(const LabelPtr& l)
{
  if (!l)
    return "-";
  if (l->kind == Label::Kind::Atomic)
    return l->descriptor;
  auto mono = [](const Monomial& m) {
    if (m.empty())
      return std::string("1");
    std::string s;
    for (const auto& [x, e] : m) {
      if (!s.empty())
        s += "*";
      s += describe(x);
      if (e != 1)
        s += "^" + std::to_string(e);
    }
    return s;
  };
  return "(" + mono(l->plus) + " + " + mono(l->minus) + ")/" + describe(l->denominator);
}

} // namespace clusterseed
