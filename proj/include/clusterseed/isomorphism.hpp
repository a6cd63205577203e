#pragma once

#include "clusterseed/seed.hpp"

#include <optional>
#include <vector>

namespace clusterseed {

struct IsoOptions {
  bool reverse_arrows = false;
  bool match_weights = true;
  bool match_frozen = true;
  // slot p of the first seed is compared with slot marked_perm[p] of the second
  std::vector<int> marked_perm;
};

// mapping[i] = vertex of s2 matched with vertex i of s1; lexicographically least.
std::optional<std::vector<int>> quiver_isomorphic(const Seed& s1, const Seed& s2, const IsoOptions& opts = {});

// Checks that a given vertex map (by name) is an isomorphism.
bool is_isomorphism(const Seed& s1, const Seed& s2, const std::vector<int>& mapping, const IsoOptions& opts = {});

} // namespace clusterseed
