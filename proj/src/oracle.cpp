#include "clusterseed/oracle.hpp"

#include "clusterseed/builder.hpp"
#include "clusterseed/isomorphism.hpp"
#include "clusterseed/linsolve.hpp"
#include "clusterseed/surface.hpp"
#include "clusterseed/xcoord.hpp"

#include <algorithm>

namespace clusterseed {

namespace {

Rational power(const Rational& x, long e)
{
  Rational r = 1;
  Rational b = e < 0 ? Rational(1 / x) : x;
  for (long k = 0; k < std::labs(e); ++k)
    r *= b;
  return r;
}

Rational binomial(int n, int k)
{
  Rational r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

Rational random_unit(std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  return rat((sign(rng) ? 1 : -1) * num(rng), den(rng));
}

} // namespace

Flag flag_from_matrix(const RatMat& columns)
{
  const std::size_t n = columns.size();
  Flag f(n, RatVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      f[c][r] = columns[r][c];
  return f;
}

RatMat flag_matrix(const Flag& f)
{
  const std::size_t n = f.size();
  RatMat m(n, RatVec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r][c] = f[c][r];
  return m;
}

FlagTuple random_flags(int n, int m, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> entry(-9, 9);
  FlagTuple t{n, {}};
  for (int k = 0; k < m; ++k) {
    RatMat a(n, RatVec(n));
    Rational det;
    do {
      for (auto& row : a)
        for (auto& x : row)
          x = entry(rng);
      det = determinant(a);
    } while (det == 0);
    for (int r = 0; r < n; ++r)
      a[r][0] /= det;
    t.flags.push_back(flag_from_matrix(a));
  }
  return t;
}

Rational wedge_invariant(const std::vector<int>& flag_order, const std::vector<int>& degrees, const FlagTuple& f)
{
  if (flag_order.size() != degrees.size())
    throw std::invalid_argument("flag order and degrees differ in length");
  int total = 0;
  for (int d : degrees) {
    if (d < 0)
      throw std::invalid_argument("negative degree");
    total += d;
  }
  if (total != f.n)
    throw std::invalid_argument("degrees sum to " + std::to_string(total) + ", not " + std::to_string(f.n));
  RatMat rows;
  for (std::size_t t = 0; t < degrees.size(); ++t)
    for (int i = 0; i < degrees[t]; ++i)
      rows.push_back(f.flags.at(flag_order[t]).at(i));
  return determinant(rows);
}

Rational wedge_invariant(const std::vector<int>& degrees, const FlagTuple& f)
{
  std::vector<int> order(degrees.size());
  for (std::size_t t = 0; t < order.size(); ++t)
    order[t] = static_cast<int>(t);
  return wedge_invariant(order, degrees, f);
}

Rational evaluate_variable(const LabelPtr& label, const FlagTuple& f, EvalCache& cache)
{
  AtomicFn atomic = [&](const Label& l) -> Rational {
    if (l.flag_order.empty())
      throw std::invalid_argument("label '" + l.descriptor + "' has no invariant model");
    return wedge_invariant(l.flag_order, l.degrees, f);
  };
  try {
    return evaluate_label(label, atomic, cache);
  } catch (const SeedError& e) {
    throw NonGeneric(e.what());
  }
}

bool generic_for(const Seed& s, const FlagTuple& f)
{
  EvalCache cache;
  try {
    for (const auto& x : s.v)
      if (evaluate_variable(x.label, f, cache) == 0)
        return false;
  } catch (const NonGeneric&) {
    return false;
  }
  return true;
}

FlagTuple random_generic_flags(const Seed& s, int n, std::mt19937_64& rng, bool standard)
{
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FlagTuple f = standard ? standard_quadrilateral_flags(n, rng) : random_flags(n, s.marked_points(), rng);
    if (generic_for(s, f))
      return f;
  }
  throw NonGeneric("no generic flags found");
}

Rational regularity_defect(const LabelPtr& label, const std::vector<Weight>& w, const FlagTuple& f,
                           std::mt19937_64& rng)
{
  // degree sum_{c >= i} w[c] in vector i of each flag
  Rational worst = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (int i = 0; i + 1 < f.n; ++i) {
      Rational deg = 0;
      for (int c = i; c + 1 < f.n; ++c)
        deg += w[p][c];
      if (!is_integer(deg) || deg < 0)
        return 1;
      int d = static_cast<int>(deg.get_num().get_si());
      Rational diff = 0;
      for (int attempt = 0;; ++attempt) {
        RatVec u(f.n);
        for (auto& x : u)
          x = random_unit(rng);
        try {
          diff = 0;
          for (int step = 0; step <= d + 1; ++step) {
            FlagTuple g = f;
            for (int r = 0; r < f.n; ++r)
              g.flags[p][i][r] += step * u[r];
            EvalCache c2;
            Rational val = evaluate_variable(label, g, c2);
            Rational sign = (d + 1 - step) % 2 == 0 ? 1 : -1;
            diff += sign * binomial(d + 1, step) * val;
          }
          break;
        } catch (const NonGeneric&) {
          if (attempt == 20)
            throw;
        }
      }
      if (abs(diff) > abs(worst))
        worst = diff;
    }
  }
  return worst;
}

ExchangeCheck check_exchange(const Seed& s, int k, const FlagTuple& f, std::mt19937_64& rng)
{
  ExchangeCheck out;
  Seed t = mutate(s, k);
  EvalCache cache;
  Rational ak = evaluate_variable(s.v[k].label, f, cache);
  Rational plus = 1, minus = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    int b = s.b2[k][j] / 2;
    if (b == 0)
      continue;
    Rational aj = evaluate_variable(s.v[j].label, f, cache);
    (b > 0 ? plus : minus) *= power(aj, std::abs(b));
  }
  if (ak == 0)
    throw NonGeneric("A_" + s.v[k].name + " vanishes");
  Rational next = evaluate_variable(t.v[k].label, f, cache);
  out.residual = ak * next - (plus + minus);

  out.regularity = regularity_defect(t.v[k].label, t.v[k].weights, f, rng);
  return out;
}

FlagTuple act_torus(const FlagTuple& f, const std::vector<RatVec>& h)
{
  FlagTuple g = f;
  for (std::size_t t = 0; t < g.flags.size(); ++t)
    for (int i = 0; i < f.n; ++i)
      for (auto& x : g.flags[t][i])
        x *= h[t][i];
  return g;
}

Rational weight_character(const Weight& w, const RatVec& h)
{
  Rational r = 1, prefix = 1;
  for (std::size_t c = 0; c < w.size(); ++c) {
    prefix *= h[c];
    if (!is_integer(w[c]))
      throw std::invalid_argument("non-integral weight");
    r *= power(prefix, w[c].get_num().get_si());
  }
  return r;
}

std::vector<RatVec> random_torus(int n, int m, std::mt19937_64& rng)
{
  std::vector<RatVec> h(m, RatVec(n));
  for (auto& ht : h) {
    Rational prod = 1;
    for (int i = 0; i + 1 < n; ++i) {
      ht[i] = random_unit(rng);
      prod *= ht[i];
    }
    ht[n - 1] = 1 / prod;
  }
  return h;
}

OracleReport torus_weight_check(const Seed& s, const FlagTuple& f, const std::vector<RatVec>& h)
{
  OracleReport rep;
  rep.name = "torus weights";
  FlagTuple g = act_torus(f, h);
  EvalCache c1, c2;
  for (const auto& x : s.v) {
    Rational before = evaluate_variable(x.label, f, c1);
    Rational after = evaluate_variable(x.label, g, c2);
    Rational scale = 1;
    for (std::size_t t = 0; t < x.weights.size(); ++t)
      scale *= weight_character(x.weights[t], h[t]);
    if (after != scale * before)
      rep.fail("stored weights of " + x.name + " do not match the torus action");
  }
  return rep;
}

RatMat lift_simple_reflection(int n, int i)
{
  RatMat m(n, RatVec(n, Rational(0)));
  for (int r = 0; r < n; ++r)
    m[r][r] = 1;
  // exp(-E_i) exp(F_i) exp(-E_i) restricted to coordinates i, i+1
  m[i][i] = 0;
  m[i + 1][i + 1] = 0;
  m[i][i + 1] = -1;
  m[i + 1][i] = 1;
  return m;
}

RatMat lift_w0(int n)
{
  RatMat m(n, RatVec(n, Rational(0)));
  for (int r = 0; r < n; ++r)
    m[r][r] = 1;
  if (n < 2)
    return m;
  RootDatum rd = type_a(n - 1);
  for (int letter : rd.canonical_word())
    m = multiply(m, lift_simple_reflection(n, letter));
  return m;
}

RatMat s_g(int n)
{
  RatMat w = lift_w0(n);
  return multiply(w, w);
}

FlagTuple twisted_cyclic_shift(const FlagTuple& f)
{
  FlagTuple g{f.n, {}};
  for (std::size_t t = 1; t < f.flags.size(); ++t)
    g.flags.push_back(f.flags[t]);
  RatMat s = s_g(f.n);
  Flag moved = f.flags[0];
  for (auto& v : moved) {
    RatVec out(f.n, Rational(0));
    for (int r = 0; r < f.n; ++r)
      for (int c = 0; c < f.n; ++c)
        out[r] += s[r][c] * v[c];
    v = out;
  }
  g.flags.push_back(moved);
  return g;
}

OracleReport check_cyclic_symmetry(const Seed& s, const FlagTuple& f)
{
  OracleReport rep;
  rep.name = "cyclic symmetry";
  FlagTuple g = twisted_cyclic_shift(f);
  const int m = static_cast<int>(f.flags.size());
  EvalCache cf, cg;
  for (const auto& x : s.v) {
    std::vector<Weight> rotated(m);
    for (int t = 0; t < m; ++t)
      rotated[(t + 1) % m] = x.weights[t];
    const Vertex* match = nullptr;
    for (const auto& y : s.v)
      if (y.weights == rotated)
        match = &y;
    if (!match) {
      rep.fail("no variable with the rotated weights of " + x.name);
      continue;
    }
    Rational pulled = evaluate_variable(x.label, g, cg);
    Rational other = evaluate_variable(match->label, f, cf);
    if (other == 0)
      throw NonGeneric(match->name + " vanishes");
    int sign = pulled == other ? 1 : pulled == -other ? -1 : 0;
    if (sign == 0 || other == 0)
      rep.fail(x.name + " pulled back along the shift is not +-" + match->name);
    rep.signs[x.name] = sign;
  }
  return rep;
}

FlagTuple standard_quadrilateral_flags(int n, std::mt19937_64& rng)
{
  FlagTuple r = random_flags(n, 4, rng);
  RatMat id(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    id[i][i] = 1;
  r.flags[0] = flag_from_matrix(id);
  r.flags[2] = flag_from_matrix(lift_w0(n));
  return r;
}

FlagTuple shear(const FlagTuple& f, const RatVec& h)
{
  FlagTuple g = f;
  for (auto& v : g.flags[3])
    for (int r = 0; r < f.n; ++r)
      v[r] *= h[r];
  return g;
}

OracleReport check_shear_action(const Seed& conf4, const FlagTuple& f, const RatVec& h)
{
  OracleReport rep;
  rep.name = "shear";
  // h acts on functions by pulling back along h^-1
  RatVec inv(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    inv[i] = 1 / h[i];
  FlagTuple g = shear(f, inv);
  EvalCache c1, c2;
  std::vector<Rational> a1, a2;
  for (const auto& x : conf4.v) {
    a1.push_back(evaluate_variable(x.label, f, c1));
    a2.push_back(evaluate_variable(x.label, g, c2));
    if (a1.back() == 0 || a2.back() == 0)
      throw NonGeneric(x.name + " vanishes");
  }
  for (int j : conf4.unfrozen()) {
    const auto& x = conf4.v[j];
    Rational ratio = p_map(conf4, j, a2) / p_map(conf4, j, a1);
    rep.values[x.name] = ratio;
    if (x.tag.role != Role::Diagonal) {
      // off the sheared flag the coordinate cannot move
      bool off = is_zero({x.weights[3]});
      for (std::size_t i = 0; i < conf4.size(); ++i)
        if (conf4.b2[j][i] != 0 && !is_zero({conf4.v[i].weights[3]}))
          off = false;
      if (off && ratio != 1)
        rep.fail(x.name + " away from flag 4 scales by " + to_string(ratio));
      continue;
    }
    // node k of the weight omega_k carried at marked point 1
    int k = -1;
    for (std::size_t c = 0; c < x.weights[0].size(); ++c)
      if (x.weights[0][c] != 0)
        k = static_cast<int>(c);
    Rational alpha = h[k] / h[k + 1];
    if (ratio != alpha)
      rep.fail(x.name + " scales by " + to_string(ratio) + ", expected " + to_string(alpha));
  }
  return rep;
}

namespace {

// Iterative deepening; each mutation changes one variable, so the number of
// target weights still missing bounds the remaining depth from below.
int missing_weights(const Seed& cur, const Seed& target)
{
  std::vector<const std::vector<Weight>*> have;
  for (const auto& x : cur.v)
    have.push_back(&x.weights);
  int missing = 0;
  for (const auto& y : target.v) {
    auto it = std::find_if(have.begin(), have.end(), [&](const auto* w) { return w && *w == y.weights; });
    if (it == have.end())
      ++missing;
    else
      *it = nullptr;
  }
  return missing;
}

bool bounded_search(const Seed& cur, const Seed& target, int depth, std::vector<std::string>& path)
{
  int missing = missing_weights(cur, target);
  if (missing == 0 && quiver_isomorphic(cur, target))
    return true;
  if (missing > depth || depth == 0)
    return false;
  for (int k : cur.unfrozen()) {
    if (!path.empty() && path.back() == cur.v[k].name)
      continue;
    path.push_back(cur.v[k].name);
    if (bounded_search(mutate(cur, k), target, depth - 1, path))
      return true;
    path.pop_back();
  }
  return false;
}

} // namespace

TypeAFlip verify_flip_typeA(int n, std::mt19937_64& rng, int samples)
{
  TypeAFlip out;
  out.report.name = "type A flip, n = " + std::to_string(n);
  RootDatum rd = type_a(n - 1);
  Seed c = build_conf_m_seed(rd, 4);
  auto tf = flip_diagonal(fan_triangulation(4), {1, 3});
  Seed target = build_conf_m_seed(rd, 4, tf, default_dressing(rd, tf));
  if (n == 3) {
    out.sequence = builtin_sequence("sl3_flip");
  } else if (n == 2) {
    auto seq = find_flip_sequence(c, target, 6);
    if (!seq) {
      out.report.fail("search exhausted");
      return out;
    }
    out.sequence = *seq;
  } else {
    std::vector<std::string> path;
    const int bound = 12;
    bool hit = false;
    for (int depth = 0; depth <= bound && !hit; ++depth)
      hit = bounded_search(c, target, depth, path);
    if (!hit) {
      out.report.fail("search exhausted at depth " + std::to_string(bound));
      return out;
    }
    out.sequence.name = "sl" + std::to_string(n) + "_flip";
    for (const auto& p : path)
      out.sequence.stages.push_back({p});
  }
  out.found = true;
  Seed r = apply_sequence(c, out.sequence).seed;
  auto m = quiver_isomorphic(r, target);
  if (!m) {
    out.report.fail("sequence does not reach the flipped seed");
    return out;
  }
  for (int sample = 0; sample < samples; ++sample) {
    FlagTuple f = random_generic_flags(r, n, rng);
    EvalCache c1, c2;
    try {
      for (std::size_t i = 0; i < r.size(); ++i) {
        Rational a = evaluate_variable(r.v[i].label, f, c1);
        Rational b = evaluate_variable(target.v[(*m)[i]].label, f, c2);
        int sign = a == b ? 1 : a == -b ? -1 : 0;
        auto [it, fresh] = out.report.signs.emplace(r.v[i].name, sign);
        if (sign == 0 || it->second != sign)
          out.report.fail(r.v[i].name + " differs from " + target.v[(*m)[i]].name);
      }
    } catch (const NonGeneric&) {
      --sample;
    }
  }
  return out;
}

} // namespace clusterseed
