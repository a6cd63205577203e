#pragma once

#include "clusterseed/builder.hpp"
#include "clusterseed/root_data.hpp"
#include "clusterseed/seed.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace clusterseed {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::string golden_dir;
  std::uint64_t rng_seed = 1;
  int flag_samples = 100;
  int random_sequences = 100;
};

std::string default_golden_dir();

// Seed printed by `build`: type A vertices are named by their weight digits.
Seed display_bruhat_seed(const RootDatum& rd, const Word& word, const WeightTable* user = nullptr);

// bruhat, triangle, ssums, g2-s3, g2-flip, g2-12, langlands, d4, oracle, shear,
// typeA-flip, properties
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace clusterseed
