#pragma once

#include "clusterseed/seed.hpp"
#include "clusterseed/sequences.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace clusterseed {

// A decorated SL_n flag as its basis v_1..v_n; the flag is spanned by leading vectors.
using Flag = std::vector<RatVec>;

struct FlagTuple {
  int n = 0;
  std::vector<Flag> flags;
};

using EvalCache = std::unordered_map<const Label*, Rational>;

// Raised when a division by zero shows the flags are not generic.
struct NonGeneric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FlagTuple random_flags(int n, int m, std::mt19937_64& rng);
Flag flag_from_matrix(const RatMat& columns);
RatMat flag_matrix(const Flag& f);

// Rows: the first degrees[t] vectors of flag flag_order[t], in order.
Rational wedge_invariant(const std::vector<int>& flag_order, const std::vector<int>& degrees, const FlagTuple& f);
Rational wedge_invariant(const std::vector<int>& degrees, const FlagTuple& f);

Rational evaluate_variable(const LabelPtr& label, const FlagTuple& f, EvalCache& cache);

// True when every variable of the seed is defined and nonzero on the flags.
bool generic_for(const Seed& s, const FlagTuple& f);
// Resamples until generic_for holds; flags 1 and 3 standard when asked.
FlagTuple random_generic_flags(const Seed& s, int n, std::mt19937_64& rng, bool standard = false);

// Largest finite difference of the variable beyond the degree its weights allow
// in each flag vector; zero for a polynomial of that degree.
Rational regularity_defect(const LabelPtr& label, const std::vector<Weight>& weights, const FlagTuple& f,
                           std::mt19937_64& rng);

struct ExchangeCheck {
  Rational residual;   // A_k A'_k - (M+ + M-)
  Rational regularity; // largest finite difference of A'_k beyond its degree
  bool passed() const { return residual == 0 && regularity == 0; }
};

// A'_k must satisfy the exchange relation and be a polynomial in every flag
// vector of the degree given by its weight.
ExchangeCheck check_exchange(const Seed& s, int k, const FlagTuple& f, std::mt19937_64& rng);

struct OracleReport {
  std::string name;
  bool passed = true;
  std::string diagnostics;
  std::map<std::string, int> signs;
  std::map<std::string, Rational> values;
  void fail(const std::string& why)
  {
    if (passed)
      diagnostics = why;
    passed = false;
  }
};

// Scales vector i of flag t by h[t][i] (each h[t] has product 1).
FlagTuple act_torus(const FlagTuple& f, const std::vector<RatVec>& h);
Rational weight_character(const Weight& w, const RatVec& h);
OracleReport torus_weight_check(const Seed& s, const FlagTuple& f, const std::vector<RatVec>& h);
std::vector<RatVec> random_torus(int n, int m, std::mt19937_64& rng);

RatMat lift_simple_reflection(int n, int i);
RatMat lift_w0(int n);
RatMat s_g(int n);
FlagTuple twisted_cyclic_shift(const FlagTuple& f);

// Every variable pulled back along the shift must be +- a variable of the seed
// whose weights are rotated; the signs are recorded.
OracleReport check_cyclic_symmetry(const Seed& s, const FlagTuple& f);

// Flags 1 and 3 in standard position (identity and lifted w0), 2 and 4 random.
FlagTuple standard_quadrilateral_flags(int n, std::mt19937_64& rng);
// Left multiplication of flag 4 by diagonal h.
FlagTuple shear(const FlagTuple& f, const RatVec& h);
// Glued-edge X_j must scale by alpha_k(h), omega_k the weight of j at point 1.
OracleReport check_shear_action(const Seed& conf4, const FlagTuple& f, const RatVec& h);

struct TypeAFlip {
  bool found = false;
  MutationSequence sequence;
  OracleReport report;
};
// Flip of the diagonal {1,3} of the SL_n quadrilateral seed, n in {2,3,4}.
TypeAFlip verify_flip_typeA(int n, std::mt19937_64& rng, int samples = 25);

} // namespace clusterseed
