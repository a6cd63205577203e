#pragma once

#include "clusterseed/rational.hpp"

#include <string>
#include <vector>

namespace clusterseed {

enum class Family { A, D, G };

// Weight in the fundamental-weight basis.
using Weight = RatVec;
// Node indices are 0-based internally; letters are read right to left.
using Word = std::vector<int>;

struct RootDatum {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::vector<int>> cartan; // C[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> d;
  int positive_root_count = 0;
  std::vector<std::string> node_names;
  // Fundamental weights of long nodes get a letter of their own in display.
  std::vector<Weight> positive_roots; // in simple-root coordinates

  std::string kind_name() const;
  bool simply_laced() const;
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  std::vector<int> neighbours(int i) const;

  Weight zero() const { return Weight(rank, Rational(0)); }
  Weight omega(int i) const;
  Weight alpha(int i) const;
  int max_d() const;

  int node_index(const std::string& name) const;
  // Dual node k∨ with -w0(omega_k) = omega_{k∨}.
  int dual_node(int k) const;
  Word canonical_word() const;
  // Diagram automorphisms as node permutations (identity first).
  std::vector<std::vector<int>> diagram_automorphisms() const;
};

// "a3", "A3", "g2", "d4"
RootDatum cartan_matrix(const std::string& kind);
RootDatum type_a(int rank);
RootDatum type_d4();
RootDatum type_g2();

Weight reflect(const RootDatum& rd, int i, const Weight& w);
Weight reflect_word(const RootDatum& rd, const Word& word, const Weight& w);
bool is_reduced(const RootDatum& rd, const Word& word);
bool is_longest_word(const RootDatum& rd, const Word& word);
Weight w0(const RootDatum& rd, const Weight& w);
Weight w0_dual(const RootDatum& rd, const Weight& w);

// Langlands map on weights: identity when simply laced, a -> b, b -> 3a for G2.
Weight langlands_weight(const RootDatum& rd, const Weight& w);

// Word syntax: one character per letter (digits for A and D4 outer nodes,
// a/b for G2, b for the D4 centre). Letters are node names.
Word parse_word(const RootDatum& rd, const std::string& text);
std::string format_word(const RootDatum& rd, const Word& w);
Word reversed(const Word& w);

// Letters of the D4 word given as names "a1","a2","a3","b".
std::vector<std::string> fold_d4_word(const std::vector<std::string>& word);

// Words reachable by commutation moves (letters on non-adjacent nodes).
std::vector<Word> commutation_class(const RootDatum& rd, const Word& w);
// One braid or commutation move at every possible position.
std::vector<Word> braid_neighbours(const RootDatum& rd, const Word& w);

std::string format_weight(const RootDatum& rd, const Weight& w);
Weight parse_weight(const RootDatum& rd, const std::string& text);

} // namespace clusterseed
