// clusterseed: build, mutate and verify cluster seeds of flag configurations.

#include "clusterseed/builder.hpp"
#include "clusterseed/oracle.hpp"
#include "clusterseed/seed_io.hpp"
#include "clusterseed/sequences.hpp"
#include "clusterseed/suites.hpp"
#include "clusterseed/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace clusterseed;
using nlohmann::json;

namespace {

// Bad input discovered after parsing; exits with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeedOptions {
  std::string type;
  std::string word;
  std::string weights;
  int m = 0;
  std::string triangulation;
  std::string dressing;
  std::string names = "auto";
  std::string seed_file;
};

struct Output {
  std::string format = "json";
};

json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

RootDatum datum(const std::string& kind)
{
  try {
    return cartan_matrix(kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Word word_of(const RootDatum& rd, const std::string& text)
{
  if (text.empty())
    return rd.canonical_word();
  Word w;
  try {
    w = parse_word(rd, text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!is_longest_word(rd, w))
    throw UsageError("word " + text + " is not a reduced word for w0");
  return w;
}

std::optional<WeightTable> user_table(const RootDatum& rd, const SeedOptions& o)
{
  if (o.weights.empty())
    return std::nullopt;
  try {
    return weight_table_from_json(rd, read_json(o.weights));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(o.weights + ": " + e.what());
  }
}

bool picture_names(const RootDatum& rd, const SeedOptions& o)
{
  if (o.names == "g2-conf4")
    return true;
  return o.names == "auto" && rd.family == Family::G && o.m == 4 && o.triangulation.empty();
}

Seed polygon_seed(const RootDatum& rd, const SeedOptions& o)
{
  auto table = user_table(rd, o);
  const WeightTable* user = table ? &*table : nullptr;
  TriangulatedPolygon t =
      o.triangulation.empty() ? fan_triangulation(o.m) : triangulation_from_json(read_json(o.triangulation));
  if (t.m != o.m)
    throw UsageError("triangulation has " + std::to_string(t.m) + " marked points, --m is " + std::to_string(o.m));
  Dressing d = o.dressing.empty() ? default_dressing(rd, t) : dressing_from_json(rd, read_json(o.dressing));
  Seed s = build_conf_m_seed(rd, o.m, t, d, user);
  if (picture_names(rd, o)) {
    if (rd.family != Family::G || o.m != 4)
      throw UsageError("--names g2-conf4 needs --type g2 --m 4");
    s = g2_conf4_names(s);
  }
  return s;
}

void emit(const Seed& s, const RootDatum* rd, const Output& out)
{
  if (out.format == "json")
    std::cout << seed_to_json(s, rd).dump(2) << "\n";
  else if (out.format == "arrows")
    std::cout << to_arrows(s, rd);
  else
    std::cout << to_dot(s, rd);
}

void add_format(CLI::App* cmd, Output& out)
{
  cmd->add_option("--format", out.format, "json, arrows or dot")
      ->check(CLI::IsMember({"json", "arrows", "dot"}))
      ->capture_default_str();
}

void add_type(CLI::App* cmd, SeedOptions& o, bool required)
{
  auto* t = cmd->add_option("--type", o.type, "a1..a7, d4 or g2");
  if (required)
    t->required();
  cmd->add_option("--word", o.word,
                  "reduced word for w0, letters read right to left: 1..n for A_n, a/b for G2, 1/2/3/b for D4 "
                  "(default: the built-in word)");
  cmd->add_option("--weights", o.weights, "weight table JSON {\"node,occurrence\": [[..],[..],[..]]}")
      ->check(CLI::ExistingFile);
}

void add_polygon(CLI::App* cmd, SeedOptions& o)
{
  cmd->add_option("--m", o.m, "number of marked points")->check(CLI::Range(3, 12));
  cmd->add_option("--triangulation", o.triangulation, "JSON {m, diagonals: [[i,j],..]}")->check(CLI::ExistingFile);
  cmd->add_option("--dressing", o.dressing, "JSON [{order: [i,j,k], word}, ..] per triangle")
      ->check(CLI::ExistingFile);
  cmd->add_option("--names", o.names, "auto, none or g2-conf4")
      ->check(CLI::IsMember({"auto", "none", "g2-conf4"}))
      ->capture_default_str();
}

// Seed named by --seed, or built from --type/--word/--m (triangle when --m is absent).
std::pair<Seed, std::optional<RootDatum>> source_seed(SeedOptions& o)
{
  if (!o.seed_file.empty()) {
    json j = read_json(o.seed_file);
    std::optional<RootDatum> rd;
    if (!seed_kind(j).empty())
      rd = datum(seed_kind(j));
    try {
      return {seed_from_json(j), rd};
    } catch (const std::exception& e) {
      throw UsageError(o.seed_file + ": " + e.what());
    }
  }
  if (o.type.empty())
    throw UsageError("give --seed or --type");
  RootDatum rd = datum(o.type);
  if (o.m == 0 || o.m == 3) {
    auto table = user_table(rd, o);
    if (o.m == 0)
      o.m = 3;
    return {triangle_seed(rd, word_of(rd, o.word), table ? &*table : nullptr), rd};
  }
  return {polygon_seed(rd, o), rd};
}

int run_verify(const std::vector<std::string>& requested, const SuiteOptions& so, bool as_json)
{
  std::vector<std::string> names;
  for (const auto& s : requested) {
    if (s == "all")
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    else
      names.push_back(s);
  }
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : names)
    jobs.push_back(std::async(std::launch::async, [n, so] { return run_suite(n, so); }));
  bool all = true;
  json report = json::array();
  for (auto& job : jobs) {
    SuiteReport r = job.get();
    all = all && r.passed();
    if (as_json)
      report.push_back(r.to_json());
    else
      std::cout << r.to_text();
  }
  if (as_json)
    std::cout << json{{"passed", all}, {"suites", report}}.dump(2) << "\n";
  else
    std::cout << (all ? "all suites passed" : "verification FAILED") << "\n";
  return all ? 0 : 1;
}

json report_json(const OracleReport& r)
{
  json j{{"name", r.name}, {"passed", r.passed}, {"diagnostics", r.diagnostics}};
  if (!r.signs.empty())
    j["signs"] = r.signs;
  return j;
}

int run_oracle(SeedOptions& o, std::uint64_t rng_seed, int samples)
{
  auto [s, rd] = source_seed(o);
  if (!rd || rd->family != Family::A)
    throw UsageError("the oracle evaluates type A seeds only");
  int n = rd->rank + 1;
  int m = s.marked_points();
  std::mt19937_64 rng(rng_seed);
  bool all = true;
  json checks = json::array();
  auto record = [&](const std::string& name, bool ok, const std::string& why) {
    all = all && ok;
    checks.push_back({{"name", name}, {"passed", ok}, {"diagnostics", why}});
  };

  std::string why;
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    FlagTuple f = random_generic_flags(s, n, rng);
    for (int k : s.unfrozen()) {
      auto e = check_exchange(s, k, f, rng);
      if (!e.passed() && bad++ == 0)
        why = s.v[k].name + ": residual " + to_string(e.residual) + ", regularity " + to_string(e.regularity);
    }
    auto t = torus_weight_check(s, f, random_torus(n, m, rng));
    if (!t.passed && bad++ == 0)
      why = t.diagnostics;
  }
  record("exchange and torus weights over " + std::to_string(samples) + " flag tuples", bad == 0, why);

  if (m == 3) {
    OracleReport c;
    for (int tries = 0; tries < 20; ++tries) {
      try {
        c = check_cyclic_symmetry(s, random_generic_flags(s, n, rng));
        break;
      } catch (const NonGeneric&) {
      }
    }
    all = all && c.passed;
    checks.push_back(report_json(c));
  }
  if (m == 4) {
    std::uniform_int_distribution<int> num(1, 9);
    int done = 0;
    while (done < 20) {
      RatVec h(n);
      Rational prod = 1;
      for (int i = 0; i + 1 < n; ++i) {
        h[i] = rat(num(rng), num(rng));
        prod *= h[i];
      }
      h[n - 1] = 1 / prod;
      try {
        auto r = check_shear_action(s, standard_quadrilateral_flags(n, rng), h);
        if (!r.passed) {
          all = false;
          checks.push_back(report_json(r));
          break;
        }
        ++done;
      } catch (const NonGeneric&) {
      }
    }
    if (done == 20)
      record("shear over 20 random h", true, "");
  }
  std::cout << json{{"passed", all}, {"rng_seed", rng_seed}, {"checks", checks}}.dump(2) << "\n";
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cluster seeds for moduli of decorated flags: reduced-word seeds, triangle completion, polygon "
               "amalgamation, mutation sequences and type A evaluation checks."};
  app.require_subcommand(1);
  Output out;
  SeedOptions so;

  auto* build = app.add_subcommand("build", "seed of a reduced word for w0");
  add_type(build, so, true);
  add_format(build, out);

  auto* triangle = app.add_subcommand("triangle", "reduced-word seed completed to a triangle seed");
  add_type(triangle, so, true);
  add_format(triangle, out);

  auto* polygon = app.add_subcommand("polygon", "seed of a triangulated polygon");
  add_type(polygon, so, true);
  add_polygon(polygon, so);
  polygon->get_option("--m")->required();
  add_format(polygon, out);

  auto* mut = app.add_subcommand("mutate", "apply mutations to a seed");
  std::vector<std::string> at;
  std::string seq_name, trace_file;
  int stages = -1;
  mut->add_option("--seed", so.seed_file, "seed JSON")->check(CLI::ExistingFile);
  add_type(mut, so, false);
  add_polygon(mut, so);
  mut->add_option("--at", at, "vertex to mutate (repeatable, applied in order)");
  mut->add_option("--seq", seq_name, "built-in sequence: g2_13, g2_23, g2_12, g2_flip, sl3_flip, sl4_flip");
  mut->add_option("--stages", stages, "apply only the first N stages")->check(CLI::PositiveNumber);
  mut->add_option("--trace", trace_file, "write the weight table after each stage as JSON");
  add_format(mut, out);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites = {"all"};
  SuiteOptions vo;
  bool as_json = false;
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("--suite", suites, "suite name or all (repeatable)")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
  verify->add_option("--rng-seed", vo.rng_seed, "random seed")->envname("CLUSTERSEED_RNG_SEED")->capture_default_str();
  verify->add_option("--samples", vo.flag_samples, "random flag tuples per oracle check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--golden-dir", vo.golden_dir, "directory of reference seeds")->check(CLI::ExistingDirectory);
  verify->add_flag("--json", as_json, "JSON report");

  auto* dot = app.add_subcommand("export-dot", "render a seed JSON as DOT");
  std::string dot_in;
  dot->add_option("--seed", dot_in, "seed JSON")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "evaluate a type A seed on random flags");
  std::uint64_t rng_seed = 1;
  int samples = 100;
  oracle->add_option("--seed", so.seed_file, "seed JSON")->check(CLI::ExistingFile);
  add_type(oracle, so, false);
  add_polygon(oracle, so);
  oracle->add_option("--rng-seed", rng_seed, "random seed")->envname("CLUSTERSEED_RNG_SEED")->capture_default_str();
  oracle->add_option("--samples", samples, "random flag tuples")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build || *triangle) {
      RootDatum rd = datum(so.type);
      Word w = word_of(rd, so.word);
      auto table = user_table(rd, so);
      const WeightTable* user = table ? &*table : nullptr;
      Seed s = *build ? display_bruhat_seed(rd, w, user) : triangle_seed(rd, w, user);
      emit(s, &rd, out);
      return 0;
    }
    if (*polygon) {
      RootDatum rd = datum(so.type);
      emit(polygon_seed(rd, so), &rd, out);
      return 0;
    }
    if (*mut) {
      if (!at.empty() && !seq_name.empty())
        throw UsageError("give --at or --seq, not both");
      auto [s, rd] = source_seed(so);
      MutationSequence seq;
      if (!seq_name.empty()) {
        try {
          seq = builtin_sequence(seq_name);
        } catch (const std::exception&) {
          throw UsageError("unknown sequence " + seq_name);
        }
      } else {
        seq.name = "command line";
        for (const auto& x : at)
          seq.stages.push_back({x});
      }
      for (const auto& x : seq.flat())
        if (!s.find(x))
          throw UsageError("no vertex " + x);
      if (stages > static_cast<int>(seq.stages.size()))
        throw UsageError("sequence has " + std::to_string(seq.stages.size()) + " stages");
      auto run = apply_sequence(s, seq, stages);
      if (!trace_file.empty()) {
        json trace = json::array();
        for (const auto& snap : run.weight_trace) {
          json stage = json::object();
          for (const auto& [name, ws] : snap)
            stage[name] = rd ? format_weights(*rd, ws) : std::string();
          trace.push_back(stage);
        }
        std::ofstream(trace_file) << trace.dump(2) << "\n";
      }
      emit(run.seed, rd ? &*rd : nullptr, out);
      return 0;
    }
    if (*verify)
      return run_verify(suites, vo, as_json);
    if (*dot) {
      json j = read_json(dot_in);
      std::optional<RootDatum> rd;
      if (!seed_kind(j).empty())
        rd = datum(seed_kind(j));
      std::cout << to_dot(seed_from_json(j), rd ? &*rd : nullptr);
      return 0;
    }
    if (*oracle)
      return run_oracle(so, rng_seed, samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
