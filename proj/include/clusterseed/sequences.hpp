#pragma once

#include "clusterseed/builder.hpp"
#include "clusterseed/golden.hpp"
#include "clusterseed/isomorphism.hpp"
#include "clusterseed/root_data.hpp"
#include "clusterseed/seed.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterseed {

using Stage = std::vector<std::string>;

struct MutationSequence {
  std::string name;
  std::vector<Stage> stages;
  std::string provenance;

  std::size_t length() const;
  std::vector<std::string> flat() const;
  MutationSequence reversed() const;
  MutationSequence concat(const MutationSequence& other) const;
  // Renames every vertex through the map; names absent from it stay.
  MutationSequence conjugate(const std::map<std::string, std::string>& pairing) const;
};

bool same_stages(const MutationSequence& a, const MutationSequence& b);

const std::map<std::string, MutationSequence>& builtin_sequences();
const MutationSequence& builtin_sequence(const std::string& name);

using WeightTableSnapshot = std::vector<std::pair<std::string, std::vector<Weight>>>;

struct SequenceRun {
  Seed seed;
  std::vector<WeightTableSnapshot> weight_trace; // after each stage
};

struct SequenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies stages left to right. Each stage is applied in listed and reversed
// order and both results must agree. stage_limit < 0 applies all stages.
SequenceRun apply_sequence(const Seed& s, const MutationSequence& seq, int stage_limit = -1);

WeightTableSnapshot weight_snapshot(const Seed& s);

struct VerificationReport {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> mapping;
  std::vector<WeightTableSnapshot> weight_trace;
  std::string diagnostics;
};

std::vector<std::pair<std::string, std::string>> name_mapping(const Seed& a, const Seed& b,
                                                               const std::vector<int>& m);

// Result of seq is compared with the seed whose marked points are relabeled by
// sigma (new slot sigma[p] = old slot p), arrows reversed when expected.
VerificationReport verify_s3(const Seed& s, const MutationSequence& seq, const std::vector<int>& sigma,
                             bool expect_reversed);

// Result of seq against the seed of the flipped triangulation. Goldens, when
// given, are compared with the weight table after each stage.
VerificationReport verify_flip(const Seed& conf4, const MutationSequence& seq, const Seed& target,
                               const RootDatum* rd = nullptr, const std::vector<GoldenSeed>* stages = nullptr);

// Vertex pairing of the G2 seeds exchanging long and short vertices.
std::map<std::string, std::string> g2_triangle_pairing();
std::map<std::string, std::string> g2_conf4_pairing();

// pairing(seq_a) == seq_b, and pairing(L(apply(seq_a, s))) == apply(seq_b, pairing(L(s))).
// With a reference seed, pairing(L(s)) must also equal it under marked_perm.
VerificationReport verify_langlands_pairing(const RootDatum& rd, const Seed& s, const MutationSequence& seq_a,
                                            const MutationSequence& seq_b,
                                            const std::map<std::string, std::string>& pairing,
                                            const Seed* reference = nullptr, const std::vector<int>& marked_perm = {});

// sigma permutes the three outer nodes a1, a2, a3 (values 0..2); the seed is the
// Spin8 triangle seed of the folded word.
VerificationReport verify_dynkin_automorphism_d4(const RootDatum& rd, const std::vector<int>& sigma);
// Any node permutation of D4, for negative checks.
VerificationReport verify_node_relabeling_d4(const RootDatum& rd, const std::vector<int>& node_perm);

// Shortest mutation sequence (single mutations) taking source to a seed
// isomorphic to target with matching weights; breadth-first, up to max_depth.
std::optional<MutationSequence> find_flip_sequence(const Seed& source, const Seed& target, int max_depth);

} // namespace clusterseed
