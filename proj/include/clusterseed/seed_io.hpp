#pragma once

#include "clusterseed/seed.hpp"

#include <json.hpp>

#include <string>

namespace clusterseed {

nlohmann::json seed_to_json(const Seed& s, const RootDatum* rd = nullptr);
Seed seed_from_json(const nlohmann::json& j);
// The datum recorded by seed_to_json, if any.
std::string seed_kind(const nlohmann::json& j);

std::string to_dot(const Seed& s, const RootDatum* rd = nullptr);

// One line per drawn arrow: "j -> i" for each full arrow, "j ~> i" for a half arrow.
std::string to_arrows(const Seed& s, const RootDatum* rd = nullptr);

std::string format_weights(const RootDatum& rd, const std::vector<Weight>& ws);

} // namespace clusterseed
