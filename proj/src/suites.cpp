#include "clusterseed/suites.hpp"

#include "clusterseed/golden.hpp"
#include "clusterseed/isomorphism.hpp"
#include "clusterseed/linsolve.hpp"
#include "clusterseed/oracle.hpp"
#include "clusterseed/seed_io.hpp"
#include "clusterseed/sequences.hpp"
#include "clusterseed/surface.hpp"
#include "clusterseed/xcoord.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#ifndef CLUSTERSEED_GOLDEN_DIR
#define CLUSTERSEED_GOLDEN_DIR "tests/golden"
#endif

namespace clusterseed {

bool SuiteReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const
{
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

std::string SuiteReport::to_text() const
{
  std::ostringstream out;
  out << "[" << suite << "] " << (passed() ? "passed" : "FAILED") << "\n";
  for (const auto& c : checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty())
      out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::string default_golden_dir() { return CLUSTERSEED_GOLDEN_DIR; }

Seed display_bruhat_seed(const RootDatum& rd, const Word& word, const WeightTable* user)
{
  Seed s = build_bruhat_seed(rd, word);
  if (rd.family == Family::A || user)
    return assign_weights(s, rd, word, user);
  return s;
}

namespace {

using Rng = std::mt19937_64;

struct Suite {
  SuiteReport rep;
  const SuiteOptions& opts;

  // Runs body; an exception counts as a failure with its message.
  void check(const std::string& name, const std::function<std::string()>& body)
  {
    CheckResult c;
    c.name = name;
    try {
      c.detail = body();
      c.passed = c.detail.empty() || c.detail.rfind("ok:", 0) == 0;
      if (c.passed && !c.detail.empty())
        c.detail = c.detail.substr(4);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    rep.checks.push_back(c);
  }

  std::string golden(const std::string& file) const { return opts.golden_dir + "/" + file; }
};

std::string golden_diff(const Seed& s, const GoldenSeed& g)
{
  auto diff = compare_golden(s, g);
  if (diff.empty())
    return "";
  return diff.front() + (diff.size() > 1 ? " (+" + std::to_string(diff.size() - 1) + " more)" : "");
}

std::string ok(const std::string& s) { return "ok: " + s; }

std::string report_result(const VerificationReport& r, bool expect)
{
  if (r.passed == expect)
    return expect ? "" : ok("rejected: " + r.diagnostics);
  return r.passed ? "unexpectedly passed" : r.diagnostics;
}

Seed g2_triangle()
{
  RootDatum g2 = type_g2();
  return triangle_seed(g2, g2.canonical_word());
}

Seed g2_conf4() { return g2_conf4_names(build_conf_m_seed(type_g2(), 4)); }

Seed g2_flip_target()
{
  RootDatum g2 = type_g2();
  auto tf = flip_diagonal(fan_triangulation(4), {1, 3});
  Dressing dr = {{{1, 2, 4}, g2.canonical_word()}, {{3, 4, 2}, g2.canonical_word()}};
  return build_conf_m_seed(g2, 4, tf, dr);
}

// Random walk without immediate repeats, one mutation per stage.
MutationSequence random_sequence(const Seed& s, Rng& rng, int max_len)
{
  MutationSequence seq;
  seq.name = "random";
  auto un = s.unfrozen();
  int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  std::string last;
  for (int i = 0; i < len; ++i) {
    std::string x;
    do
      x = s.v[un[std::uniform_int_distribution<std::size_t>(0, un.size() - 1)(rng)]].name;
    while (x == last && un.size() > 1);
    seq.stages.push_back({x});
    last = x;
  }
  return seq;
}

void bruhat_suite(Suite& S)
{
  struct Case {
    const char* kind;
    const char* word;
    const char* file;
    std::size_t vertices;
  };
  for (Case c : {Case{"a3", "121321", "sl4_bruhat.txt", 9}, Case{"g2", "bababa", "g2_bruhat.txt", 8},
                 Case{"d4", "b123b123b123", "spin8_bruhat.txt", 16}}) {
    S.check(std::string(c.kind) + " " + c.word, [&] {
      RootDatum rd = cartan_matrix(c.kind);
      Seed s = display_bruhat_seed(rd, parse_word(rd, c.word));
      if (s.size() != c.vertices)
        return std::to_string(s.size()) + " vertices";
      return golden_diff(s, load_golden(rd, S.golden(c.file), 3));
    });
  }
}

void triangle_suite(Suite& S)
{
  struct Case {
    const char* kind;
    const char* word;
    const char* file;
    std::size_t vertices;
  };
  for (Case c : {Case{"a3", "121321", "sl4_triangle.txt", 12}, Case{"g2", "bababa", "g2_triangle.txt", 10}}) {
    S.check(std::string(c.kind) + " completion", [&] {
      RootDatum rd = cartan_matrix(c.kind);
      CompletionReport cr;
      Seed s = triangle_seed(rd, parse_word(rd, c.word), nullptr, &cr);
      if (s.size() != c.vertices)
        return std::to_string(s.size()) + " vertices";
      if (cr.face_kernel || cr.edge_kernel || cr.new_edge_kernel)
        return "kernel dimensions " + std::to_string(cr.face_kernel) + "/" + std::to_string(cr.edge_kernel) + "/" +
               std::to_string(cr.new_edge_kernel);
      if (!cr.conjecture_values)
        return std::string("edge S-sums differ from alpha_k/2, w0(alpha_k)/2");
      return golden_diff(s, load_golden(rd, S.golden(c.file), 3));
    });
  }
}

void ssum_suite(Suite& S)
{
  RootDatum rd = type_a(3);
  Seed t = triangle_seed(rd, rd.canonical_word());
  for (int k = 0; k < 3; ++k) {
    S.check("S(A3A1, A2, w" + std::to_string(k + 1) + ")", [&] {
      auto e = edge_vertex(t, rd, 2, 0, k);
      if (!e)
        return std::string("no edge vertex");
      // expected: (w0(alpha_k)/2, 0, alpha_k/2)
      Weight half = rd.alpha(k);
      for (auto& c : half)
        c /= 2;
      std::vector<Weight> want = {w0(rd, half), rd.zero(), half};
      if (k == 0) {
        Weight a1 = rd.zero(), a3 = rd.zero();
        a1[2] = -1;
        a1[1] = rat(1, 2);
        a3[0] = 1;
        a3[1] = rat(-1, 2);
        if (want != std::vector<Weight>{a1, rd.zero(), a3})
          return std::string("closed form disagrees with the stated values");
      }
      auto got = s_sum(t, *e);
      if (got != want)
        return format_weights(rd, got) + " != " + format_weights(rd, want);
      return ok(format_weights(rd, got));
    });
  }
}

void g2_s3_suite(Suite& S)
{
  RootDatum g2 = type_g2();
  Seed t = g2_triangle();
  struct Case {
    const char* seq;
    const char* file;
    std::vector<int> sigma;
  };
  for (const Case& c : {Case{"g2_13", "g2_13_stage", {2, 1, 0}}, Case{"g2_23", "g2_23_stage", {0, 2, 1}}}) {
    const auto& seq = builtin_sequence(c.seq);
    S.check(std::string(c.seq) + " length", [&] {
      return seq.length() == 4 && seq.stages.size() == 3 ? "" : std::to_string(seq.length()) + " mutations";
    });
    for (int k = 1; k <= 3; ++k)
      S.check(std::string(c.seq) + " stage " + std::to_string(k), [&] {
        Seed r = apply_sequence(t, seq, k).seed;
        return golden_diff(r, load_golden(g2, S.golden(c.file + std::to_string(k) + ".txt"), 3));
      });
    S.check(std::string(c.seq) + " relabels marked points, arrows reversed",
            [&] { return report_result(verify_s3(t, seq, c.sigma, true), true); });
    S.check(std::string(c.seq) + " arrows kept (negative)",
            [&] { return report_result(verify_s3(t, seq, c.sigma, false), false); });
  }
}

void g2_flip_suite(Suite& S)
{
  RootDatum g2 = type_g2();
  Seed c = g2_conf4();
  S.check("conf4 seed", [&] {
    if (c.size() != 18 || c.unfrozen().size() != 10)
      return std::to_string(c.size()) + " vertices, " + std::to_string(c.unfrozen().size()) + " unfrozen";
    return golden_diff(c, load_golden(g2, S.golden("g2_conf4.txt"), 4));
  });
  const auto& seq = builtin_sequence("g2_flip");
  S.check("g2_flip length", [&] {
    return seq.length() == 18 && seq.stages.size() == 6 ? "" : std::to_string(seq.length()) + " mutations";
  });
  S.check("stages and flipped target", [&] {
    std::vector<GoldenSeed> gs;
    for (int k = 1; k <= 6; ++k)
      gs.push_back(load_golden(g2, S.golden("g2_flip_stage" + std::to_string(k) + ".txt"), 4));
    return report_result(verify_flip(c, seq, g2_flip_target(), &g2, &gs), true);
  });
  S.check("unflipped target (negative)", [&] {
    return report_result(verify_flip(c, seq, build_conf_m_seed(g2, 4)), false);
  });
}

void g2_12_suite(Suite& S)
{
  RootDatum g2 = type_g2();
  Seed t = g2_triangle();
  const auto& seq = builtin_sequence("g2_12");
  S.check("g2_12 = g2_13 g2_23 g2_13", [&] {
    auto want = builtin_sequence("g2_13").concat(builtin_sequence("g2_23")).concat(builtin_sequence("g2_13"));
    if (seq.length() != 12)
      return std::to_string(seq.length()) + " mutations";
    return same_stages(seq, want) ? "" : std::string("stages differ");
  });
  S.check("result matches the reversed-word seed", [&] {
    Seed r = apply_sequence(t, seq).seed;
    Seed rw = reverse_word_seed(g2, g2.canonical_word());
    IsoOptions o;
    o.marked_perm = {0, 1, 2};
    auto m = quiver_isomorphic(r, rw, o);
    if (!m)
      return std::string("not isomorphic");
    return ok(std::to_string(r.size()) + " vertices matched with weights");
  });
  S.check("g2_12 relabels A1, A2", [&] { return report_result(verify_s3(t, seq, {1, 0, 2}, true), true); });
  S.check("g2_12 twice is the identity", [&] {
    Seed r = apply_sequence(apply_sequence(t, seq).seed, seq).seed;
    return quiver_isomorphic(r, t) ? "" : std::string("not isomorphic to the start");
  });
}

void langlands_suite(Suite& S)
{
  RootDatum g2 = type_g2();
  Seed t = g2_triangle();
  Seed c = g2_conf4();
  auto tp = g2_triangle_pairing();
  auto cp = g2_conf4_pairing();
  S.check("triangle self-dual under the pairing", [&] {
    std::vector<std::pair<std::string, std::string>> names(tp.begin(), tp.end());
    Seed l = rename_vertices(langlands_dual(t, g2), names);
    Seed ref = permute_slots(t, {1, 0, 2});
    std::vector<int> by_name;
    for (const auto& x : l.v)
      by_name.push_back(ref.index(x.name));
    if (!is_isomorphism(l, ref, by_name))
      return std::string("paired dual differs from the seed with A1, A2 exchanged");
    return ok("L(t) paired = t with A1 and A2 exchanged");
  });
  S.check("L commutes with mutation (triangle)", [&] {
    Rng rng(S.opts.rng_seed);
    for (int i = 0; i < S.opts.random_sequences; ++i) {
      auto seq = random_sequence(t, rng, 10);
      auto r = verify_langlands_pairing(g2, t, seq, seq.conjugate(tp), tp);
      if (!r.passed)
        return "sequence " + std::to_string(i) + ": " + r.diagnostics;
    }
    return ok(std::to_string(S.opts.random_sequences) + " random sequences");
  });
  S.check("L commutes with mutation (conf4)", [&] {
    Rng rng(S.opts.rng_seed + 1);
    for (int i = 0; i < S.opts.random_sequences; ++i) {
      auto seq = random_sequence(c, rng, 10);
      auto r = verify_langlands_pairing(g2, c, seq, seq.conjugate(cp), cp);
      if (!r.passed)
        return "sequence " + std::to_string(i) + ": " + r.diagnostics;
    }
    return ok(std::to_string(S.opts.random_sequences) + " random sequences");
  });
  S.check("g2_13 and g2_23 correspond", [&] {
    Seed ref = permute_slots(t, {1, 0, 2});
    return report_result(verify_langlands_pairing(g2, t, builtin_sequence("g2_13"), builtin_sequence("g2_23"), tp,
                                                  &ref, {0, 1, 2}),
                         true);
  });
  S.check("g2_13 with itself (negative)", [&] {
    return report_result(
        verify_langlands_pairing(g2, t, builtin_sequence("g2_13"), builtin_sequence("g2_13"), tp), false);
  });
  S.check("g2_flip and its reverse correspond", [&] {
    const auto& f = builtin_sequence("g2_flip");
    Seed r = apply_sequence(c, f).seed;
    return report_result(verify_langlands_pairing(g2, c, f, f.reversed(), cp, &r, {3, 2, 1, 0}), true);
  });
}

void d4_suite(Suite& S)
{
  RootDatum d4 = type_d4();
  std::vector<int> sigma = {0, 1, 2};
  do {
    S.check("outer permutation " + std::to_string(sigma[0] + 1) + std::to_string(sigma[1] + 1) +
                std::to_string(sigma[2] + 1),
            [&] { return report_result(verify_dynkin_automorphism_d4(d4, sigma), true); });
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  S.check("outer node onto centre (negative)",
          [&] { return report_result(verify_node_relabeling_d4(d4, {3, 1, 2, 0}), false); });
}

struct OracleCase {
  std::string name;
  int n;
  Seed seed;
};

std::vector<OracleCase> oracle_cases()
{
  RootDatum a2 = type_a(2), a3 = type_a(3);
  return {{"SL3 triangle", 3, triangle_seed(a2, a2.canonical_word())},
          {"SL4 triangle", 4, triangle_seed(a3, a3.canonical_word())},
          {"SL3 conf4", 3, build_conf_m_seed(a2, 4)}};
}

void oracle_suite(Suite& S)
{
  for (const auto& oc : oracle_cases()) {
    S.check(oc.name + " exchange relations", [&] {
      Rng rng(S.opts.rng_seed);
      int checks = 0;
      for (int sample = 0; sample < S.opts.flag_samples; ++sample) {
        FlagTuple f = random_generic_flags(oc.seed, oc.n, rng);
        for (int k : oc.seed.unfrozen()) {
          auto e = check_exchange(oc.seed, k, f, rng);
          ++checks;
          if (!e.passed())
            return oc.seed.v[k].name + ": residual " + to_string(e.residual) + ", regularity " +
                   to_string(e.regularity);
        }
      }
      return ok(std::to_string(checks) + " exchanges over " + std::to_string(S.opts.flag_samples) + " flag tuples");
    });
    S.check(oc.name + " exchanges along random walks", [&] {
      Rng rng(S.opts.rng_seed + 7);
      int checks = 0;
      for (int walk = 0; walk < 10; ++walk) {
        Seed s = oc.seed;
        for (const auto& x : random_sequence(oc.seed, rng, 6).flat()) {
          FlagTuple f = random_generic_flags(s, oc.n, rng);
          int k = s.index(x);
          auto e = check_exchange(s, k, f, rng);
          ++checks;
          if (!e.passed())
            return x + " after " + std::to_string(walk) + " walks: residual " + to_string(e.residual);
          s = mutate(s, k);
        }
      }
      return ok(std::to_string(checks) + " exchanges");
    });
    S.check(oc.name + " torus weights", [&] {
      Rng rng(S.opts.rng_seed + 1);
      int m = oc.seed.marked_points();
      for (int sample = 0; sample < S.opts.flag_samples; ++sample) {
        FlagTuple f = random_generic_flags(oc.seed, oc.n, rng);
        auto h = random_torus(oc.n, m, rng);
        auto r = torus_weight_check(oc.seed, f, h);
        if (!r.passed)
          return r.diagnostics;
        // variables one mutation away carry their computed weights too
        for (int k : oc.seed.unfrozen()) {
          Seed s = mutate(oc.seed, k);
          if (!generic_for(s, f))
            continue;
          auto rk = torus_weight_check(s, f, h);
          if (!rk.passed)
            return rk.diagnostics;
        }
      }
      return ok("");
    });
  }
  S.check("s_G", [&] {
    RatMat minus(4, RatVec(4, Rational(0))), one(3, RatVec(3, Rational(0)));
    for (int i = 0; i < 4; ++i)
      minus[i][i] = -1;
    for (int i = 0; i < 3; ++i)
      one[i][i] = 1;
    if (s_g(4) != minus)
      return std::string("SL4: s_G is not -1");
    if (s_g(3) != one)
      return std::string("SL3: s_G is not 1");
    return ok("SL4 -1, SL3 1");
  });
  for (int n : {3, 4}) {
    S.check("SL" + std::to_string(n) + " twisted cyclic shift", [&] {
      Rng rng(S.opts.rng_seed + 2);
      RootDatum rd = type_a(n - 1);
      Seed t = triangle_seed(rd, rd.canonical_word());
      std::map<std::string, int> signs;
      for (int sample = 0; sample < S.opts.flag_samples / 4; ++sample) {
        FlagTuple f = random_generic_flags(t, n, rng);
        OracleReport r;
        try {
          r = check_cyclic_symmetry(t, f);
        } catch (const NonGeneric&) {
          continue;
        }
        if (!r.passed)
          return r.diagnostics;
        for (const auto& [k, v] : r.signs) {
          if (signs.count(k) && signs[k] != v)
            return k + ": sign changes between samples";
          signs[k] = v;
        }
        // T^3 multiplies every flag by s_G
        FlagTuple g = twisted_cyclic_shift(twisted_cyclic_shift(twisted_cyclic_shift(f)));
        RatMat sg = s_g(n);
        for (std::size_t p = 0; p < f.flags.size(); ++p)
          if (flag_matrix(g.flags[p]) != multiply(sg, flag_matrix(f.flags[p])))
            return std::string("T^3 is not the s_G action");
      }
      int minus = 0;
      for (const auto& kv : signs)
        minus += kv.second < 0;
      return ok(std::to_string(signs.size()) + " variables, " + std::to_string(minus) + " negative signs");
    });
  }
}

RatVec random_diagonal(int n, Rng& rng)
{
  std::uniform_int_distribution<int> num(1, 9), sgn(0, 1);
  RatVec h(n);
  Rational prod = 1;
  for (int i = 0; i + 1 < n; ++i) {
    h[i] = rat(num(rng) * (sgn(rng) ? 1 : -1), num(rng));
    prod *= h[i];
  }
  h[n - 1] = 1 / prod;
  return h;
}

void shear_suite(Suite& S)
{
  RootDatum a2 = type_a(2);
  Seed c = build_conf_m_seed(a2, 4);
  S.check("identity shear", [&] {
    Rng rng(S.opts.rng_seed);
    for (;;) {
      try {
        auto r = check_shear_action(c, standard_quadrilateral_flags(3, rng), RatVec(3, Rational(1)));
        for (const auto& [name, v] : r.values)
          if (v != 1)
            return name + " moves under the identity";
        return r.passed ? std::string() : r.diagnostics;
      } catch (const NonGeneric&) {
      }
    }
  });
  S.check("20 random shears", [&] {
    Rng rng(S.opts.rng_seed + 3);
    int done = 0, resampled = 0;
    while (done < 20) {
      RatVec h = random_diagonal(3, rng);
      try {
        auto r = check_shear_action(c, standard_quadrilateral_flags(3, rng), h);
        if (!r.passed)
          return r.diagnostics;
        ++done;
      } catch (const NonGeneric&) {
        ++resampled;
      }
    }
    return ok("glued-edge ratios alpha_k(h), " + std::to_string(resampled) + " resampled");
  });
}

void typea_flip_suite(Suite& S)
{
  for (int n : {2, 3, 4}) {
    S.check("SL" + std::to_string(n) + " flip", [&] {
      Rng rng(S.opts.rng_seed + n);
      auto fl = verify_flip_typeA(n, rng, 25);
      if (!fl.found)
        return std::string("no sequence found");
      if (!fl.report.passed)
        return fl.report.diagnostics;
      std::size_t want = n == 2 ? 1 : n == 3 ? 4 : 10;
      if (fl.sequence.length() != want)
        return std::to_string(fl.sequence.length()) + " mutations";
      std::string seq;
      for (const auto& x : fl.sequence.flat())
        seq += (seq.empty() ? "" : " ") + x;
      for (const auto& [k, v] : fl.report.signs)
        if (v != 1)
          return k + " matches only up to sign";
      return ok(seq);
    });
  }
  S.check("SL3 reflected target (negative)", [&] {
    RootDatum a2 = type_a(2);
    Seed c = build_conf_m_seed(a2, 4);
    Seed wrong = permute_slots(c, {1, 0, 2, 3});
    auto found = find_flip_sequence(c, wrong, 6);
    return found ? "found " + std::to_string(found->length()) + " mutations" : std::string();
  });
  for (int n : {3, 4}) {
    std::string name = "sl" + std::to_string(n) + "_flip";
    S.check(name + " from the registry", [&, name] {
      RootDatum rd = type_a(n - 1);
      Seed c = build_conf_m_seed(rd, 4);
      auto tf = flip_diagonal(fan_triangulation(4), {1, 3});
      Seed target = build_conf_m_seed(rd, 4, tf, default_dressing(rd, tf));
      return report_result(verify_flip(c, builtin_sequence(name), target), true);
    });
  }
}

std::vector<std::pair<std::string, Seed>> property_seeds()
{
  RootDatum g2 = type_g2(), a3 = type_a(3), a2 = type_a(2), d4 = type_d4();
  return {{"G2 triangle", g2_triangle()},
          {"G2 conf4", g2_conf4()},
          {"G2 conf5", build_conf_m_seed(g2, 5)},
          {"SL4 triangle", triangle_seed(a3, a3.canonical_word())},
          {"SL4 conf5", build_conf_m_seed(a3, 5)},
          {"SL3 conf4", build_conf_m_seed(a2, 4)},
          {"Spin8 triangle", triangle_seed(d4, parse_word(d4, "b123b123b123"))}};
}

std::string mutation_properties(const Seed& s, int k)
{
  Seed t = mutate(s, k);
  check_invariants(t);
  if (!skew_symmetrizable(t))
    return "skew-symmetrizability lost at " + s.v[k].name;
  if (!frozen_integrality(t))
    return "non-integral entry at an unfrozen vertex after " + s.v[k].name;
  for (int i : t.unfrozen())
    if (s.has_weights() && is_zero(weight_balance(s, i)) && !is_zero(weight_balance(t, i)))
      return "face equation broken at " + t.v[i].name + " by " + s.v[k].name;
  if (s.has_weights()) {
    // new weight = weight of either exchange monomial minus the old one
    std::vector<Weight> plus(s.marked_points(), Weight(s.v[0].weights[0].size(), Rational(0))), minus = plus;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Rational b = s.b(k, i);
      for (int p = 0; p < s.marked_points(); ++p)
        for (std::size_t c = 0; c < plus[p].size(); ++c) {
          if (b > 0)
            plus[p][c] += b * s.v[i].weights[p][c];
          if (b < 0)
            minus[p][c] -= b * s.v[i].weights[p][c];
        }
    }
    if (plus != minus)
      return "inhomogeneous exchange at " + s.v[k].name;
    for (int p = 0; p < s.marked_points(); ++p)
      for (std::size_t c = 0; c < plus[p].size(); ++c)
        plus[p][c] -= s.v[k].weights[p][c];
    if (plus != t.v[k].weights)
      return "mutated weight at " + s.v[k].name + " is not M - w_k";
  }
  return "";
}

void properties_suite(Suite& S)
{
  auto seeds = property_seeds();
  S.check("500 involution pairs with invariants", [&] {
    Rng rng(S.opts.rng_seed);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& [name, s0] = seeds[trial % seeds.size()];
      Seed s = s0;
      for (const auto& x : random_sequence(s0, rng, 5).flat()) {
        int k = s.index(x);
        auto bad = mutation_properties(s, k);
        if (!bad.empty())
          return name + ": " + bad;
        s = mutate(s, k);
      }
      auto un = s.unfrozen();
      int k = un[std::uniform_int_distribution<std::size_t>(0, un.size() - 1)(rng)];
      if (!same_seed(mutate(mutate(s, k), k), s, true))
        return name + ": mutating " + s.v[k].name + " twice changes the seed";
    }
    return ok("");
  });
  S.check("stage order independence", [&] {
    RootDatum a2 = type_a(2);
    std::vector<std::pair<std::string, Seed>> runs = {{"g2_13", g2_triangle()},
                                                      {"g2_23", g2_triangle()},
                                                      {"g2_12", g2_triangle()},
                                                      {"g2_flip", g2_conf4()},
                                                      {"sl3_flip", build_conf_m_seed(a2, 4)}};
    for (auto& [name, s] : runs) {
      for (const auto& stage : builtin_sequence(name).stages) {
        Stage order = stage;
        std::sort(order.begin(), order.end());
        std::optional<Seed> first;
        do {
          Seed t = s;
          for (const auto& x : order)
            t = mutate(t, x);
          if (first && !same_seed(*first, t, true))
            return name + ": stage order matters";
          first = t;
        } while (std::next_permutation(order.begin(), order.end()));
        s = *first;
      }
    }
    return ok("");
  });
  S.check("reflections and braid moves", [&] {
    Rng rng(S.opts.rng_seed + 4);
    std::uniform_int_distribution<int> coord(-5, 5);
    int done = 0;
    for (const char* kind : {"a3", "d4", "g2"}) {
      RootDatum rd = cartan_matrix(kind);
      Word w0w = rd.canonical_word();
      auto moves = braid_neighbours(rd, w0w);
      for (const auto& w : moves)
        if (!is_longest_word(rd, w))
          return std::string(kind) + ": braid move leaves the longest element";
      for (int t = 0; t < 334; ++t, ++done) {
        Weight x = rd.zero();
        for (auto& c : x)
          c = coord(rng);
        int i = std::uniform_int_distribution<int>(0, rd.rank - 1)(rng);
        if (reflect(rd, i, reflect(rd, i, x)) != x)
          return std::string(kind) + ": reflection is not an involution";
        const Word& other = moves[t % moves.size()];
        if (reflect_word(rd, other, x) != reflect_word(rd, w0w, x))
          return std::string(kind) + ": braid move changes the Weyl group element";
      }
      for (int k = 0; k < rd.rank; ++k) {
        Weight neg = rd.omega(rd.dual_node(k));
        for (auto& c : neg)
          c = -c;
        if (w0(rd, rd.omega(k)) != neg)
          return std::string(kind) + ": w0(omega_k) != -omega_k*";
      }
    }
    return ok(std::to_string(done) + " reflections");
  });
  S.check("p-map commutes with mutation", [&] {
    Rng rng(S.opts.rng_seed + 5);
    std::uniform_int_distribution<int> num(1, 20);
    int done = 0;
    for (const auto& [name, s] : seeds) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> a(s.size());
        for (auto& x : a)
          x = rat(num(rng), num(rng));
        auto un = s.unfrozen();
        int k = un[trial % un.size()];
        Seed t = mutate(s, k);
        Rational plus = 1, minus = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
          int b = s.b2[k][i] / 2;
          for (int e = 0; e < std::abs(b); ++e)
            (b > 0 ? plus : minus) *= a[i];
        }
        std::vector<Rational> a2 = a;
        a2[k] = (plus + minus) / a[k];
        std::vector<Rational> x0(s.size(), Rational(1));
        for (int i : un)
          x0[i] = p_map(s, i, a);
        auto xs = mutate_x(initial_x(s), s, k);
        std::unordered_map<const XExpr*, Rational> cache;
        for (int i : un) {
          if (s.b2[i][k] % 2 || p_map(t, i, a2) != evaluate_x(xs[i], x0, cache))
            return name + ": X of " + s.v[i].name + " after mutating " + s.v[k].name;
          ++done;
        }
      }
    }
    return ok(std::to_string(done) + " coordinates");
  });
  S.check("wedge multilinear and alternating", [&] {
    Rng rng(S.opts.rng_seed + 6);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
      int n = trial % 2 ? 4 : 3;
      FlagTuple f = random_flags(n, 3, rng);
      std::vector<int> order = {0, 1, 2}, deg = n == 4 ? std::vector<int>{2, 1, 1} : std::vector<int>{1, 1, 1};
      int t = trial % 3, j = deg[t] - 1;
      RatVec u(n), v(n);
      for (int i = 0; i < n; ++i) {
        u[i] = num(rng);
        v[i] = num(rng);
      }
      Rational a = num(rng), b = num(rng);
      auto with = [&](const RatVec& x) {
        FlagTuple g = f;
        g.flags[t][j] = x;
        return wedge_invariant(order, deg, g);
      };
      RatVec mix(n);
      for (int i = 0; i < n; ++i)
        mix[i] = a * u[i] + b * v[i];
      if (with(mix) != a * with(u) + b * with(v))
        return std::string("not linear in a flag vector");
      if (n == 4) {
        FlagTuple g = f;
        std::swap(g.flags[0][0], g.flags[0][1]);
        if (wedge_invariant(order, deg, g) != -wedge_invariant(order, deg, f))
          return std::string("not alternating");
      }
    }
    return ok("");
  });
  S.check("corrupted arrow is caught (negative control)", [&] {
    RootDatum a2 = type_a(2);
    Seed s = build_conf_m_seed(a2, 4);
    Rng rng(S.opts.rng_seed);
    int caught = 0, tried = 0;
    for (int k : s.unfrozen()) {
      Seed good = mutate(s, k);
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.b2[k][j] == 0)
          continue;
        // exchange label with the arrow k - j reversed, read at the true weights
        Monomial plus, minus;
        for (std::size_t i = 0; i < s.size(); ++i) {
          int b = s.b2[k][i] / 2 * (i == j ? -1 : 1);
          if (b != 0)
            (b > 0 ? plus : minus).emplace_back(s.v[i].label, std::abs(b));
        }
        LabelPtr bad = make_exchange(s.v[k].name, plus, minus, s.v[k].label);
        FlagTuple f = random_generic_flags(s, 3, rng);
        ++tried;
        if (regularity_defect(bad, good.v[k].weights, f, rng) != 0)
          ++caught;
        if (regularity_defect(good.v[k].label, good.v[k].weights, f, rng) != 0)
          return "true exchange at " + s.v[k].name + " flagged";
        bool rejected = false;
        Seed t = s;
        t.b2[k][j] = -t.b2[k][j];
        t.b2[j][k] = -t.b2[j][k];
        try {
          mutate(t, k);
        } catch (const SeedError&) {
          rejected = true;
        }
        if (!rejected)
          return "mutation accepted the corrupted seed at " + s.v[k].name;
      }
    }
    if (caught != tried)
      return std::to_string(tried - caught) + " of " + std::to_string(tried) + " corruptions look polynomial";
    return ok(std::to_string(tried) + " corrupted exchanges non-polynomial and rejected by mutation");
  });
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = {"bruhat", "triangle", "ssums", "g2-s3", "g2-flip", "g2-12",
                                                 "langlands", "d4", "oracle", "shear", "typeA-flip", "properties"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
  static const std::map<std::string, void (*)(Suite&)> table = {
      {"bruhat", bruhat_suite},   {"triangle", triangle_suite}, {"ssums", ssum_suite},
      {"g2-s3", g2_s3_suite},     {"g2-flip", g2_flip_suite},   {"g2-12", g2_12_suite},
      {"langlands", langlands_suite}, {"d4", d4_suite},         {"oracle", oracle_suite},
      {"shear", shear_suite},     {"typeA-flip", typea_flip_suite}, {"properties", properties_suite}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown suite " + name);
  SuiteOptions o = opts;
  if (o.golden_dir.empty())
    o.golden_dir = default_golden_dir();
  Suite s{SuiteReport{name, {}}, o};
  it->second(s);
  return s.rep;
}

} // namespace clusterseed
