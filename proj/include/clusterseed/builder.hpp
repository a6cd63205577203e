#pragma once

#include "clusterseed/seed.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterseed {

using Triple = std::array<Weight, 3>;

// (node, occurrence) -> weights at (A1, A2, A3)
struct WeightTable {
  std::map<std::pair<int, int>, Triple> entries;
};

WeightTable weight_table_from_json(const RootDatum& rd, const nlohmann::json& j);
nlohmann::json weight_table_to_json(const RootDatum& rd, const WeightTable& t);
WeightTable load_weight_table(const RootDatum& rd, const std::string& path);

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Seed build_bruhat_seed(const RootDatum& rd, const Word& word);

// Table for the word: the user table if given, otherwise derived from the
// built-in word of the type by commutation moves, reversal and diagram
// automorphisms. D4 reads the shipped table when none is given.
WeightTable weight_table(const RootDatum& rd, const Word& word, const WeightTable* user = nullptr);

Seed assign_weights(const Seed& s, const RootDatum& rd, const Word& word, const WeightTable* user = nullptr);

struct CompletionReport {
  std::size_t face_kernel = 0, edge_kernel = 0, new_edge_kernel = 0;
  // lambda_k, mu_k read off the two old edges
  std::vector<Weight> lambda, mu;
  bool conjecture_values = false; // lambda_k = alpha_k/2, mu_k = w0(alpha_k)/2
};

Seed complete_triangle_seed(const Seed& s, const RootDatum& rd, CompletionReport* report = nullptr);

// build + weights + completion
Seed triangle_seed(const RootDatum& rd, const Word& word, const WeightTable* user = nullptr,
                   CompletionReport* report = nullptr);
Seed reverse_word_seed(const RootDatum& rd, const Word& word, const WeightTable* user = nullptr);

// S-sum of an edge vertex (same as weight_balance).
std::vector<Weight> s_sum(const Seed& s, int e);

// Frozen vertex of a triangle seed whose weights are zero except at slots x and y,
// with weight omega_k at slot x.
std::optional<int> edge_vertex(const Seed& s, const RootDatum& rd, int x, int y, int k);

std::string data_dir();

} // namespace clusterseed
