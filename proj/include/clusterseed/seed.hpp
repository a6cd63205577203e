#pragma once

#include "clusterseed/label.hpp"
#include "clusterseed/root_data.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterseed {

enum class Role { Face, Edge, Diagonal };

struct VertexTag {
  int node = -1;
  int occurrence = -1; // -1 for vertices added on the completed edge
  Role role = Role::Face;
  int triangle = -1;
};

struct Vertex {
  std::string name;
  VertexTag tag;
  bool frozen = false;
  int d = 1;
  std::vector<Weight> weights; // one per marked point, or empty
  LabelPtr label;
};

// The exchange matrix is kept as b2 = 2b so frozen half-arrows stay integral.
struct Seed {
  std::vector<Vertex> v;
  std::vector<std::vector<int>> b2;

  std::size_t size() const { return v.size(); }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;
  Rational b(int i, int j) const { return rat(b2[i][j], 2); }
  bool has_weights() const { return !v.empty() && !v[0].weights.empty(); }
  int marked_points() const { return v.empty() ? 0 : static_cast<int>(v[0].weights.size()); }
  int rank_of_weights() const;
  std::vector<int> unfrozen() const;

  int add_vertex(Vertex x);
  // arrow j -> i with the given strength in units of the rule |b_ij| in {1,2,3}
  void add_arrow(int j, int i, Rational units);
};

struct SeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |b_ij| for a full arrow between vertices of multipliers di, dj
int arrow_unit(int di, int dj);

Seed mutate(const Seed& s, int k);
Seed mutate(const Seed& s, const std::string& k);

// Throws SeedError if any invariant fails.
void check_invariants(const Seed& s);
bool skew_symmetrizable(const Seed& s);
bool frozen_integrality(const Seed& s);

std::vector<int> p_exponents(const Seed& s, int i);
std::vector<Weight> weight_balance(const Seed& s, int i);
bool is_zero(const std::vector<Weight>& ws);

Seed langlands_dual(const Seed& s, const RootDatum& rd);
Seed rename_vertices(const Seed& s, const std::vector<std::pair<std::string, std::string>>& names);
// New seed whose weights slots are permuted: new slot perm[p] = old slot p.
Seed permute_slots(const Seed& s, const std::vector<int>& perm);
Seed reverse_arrows(const Seed& s);

bool same_seed(const Seed& a, const Seed& b, bool compare_labels = true);

} // namespace clusterseed
