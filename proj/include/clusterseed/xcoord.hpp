#pragma once

#include "clusterseed/seed.hpp"

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace clusterseed {

struct XExpr;
using XPtr = std::shared_ptr<const XExpr>;

// prod X_v^mono[v] * prod (1 + F)^p over the initial X variables
struct XExpr {
  std::map<int, int> mono;
  std::vector<std::pair<XPtr, int>> factors;
};

std::vector<XPtr> initial_x(const Seed& s);
std::vector<XPtr> mutate_x(const std::vector<XPtr>& x, const Seed& s, int k);
Rational evaluate_x(const XPtr& e, const std::vector<Rational>& initial,
                    std::unordered_map<const XExpr*, Rational>& cache);

// Exchange-tree evaluation with a caller supplied value for atomic labels.
using AtomicFn = std::function<Rational(const Label&)>;
Rational evaluate_label(const LabelPtr& l, const AtomicFn& atomic,
                        std::unordered_map<const Label*, Rational>& cache);

// X_i = prod_j A_j^{b_ij}; row i must be integral.
Rational p_map(const Seed& s, int i, const std::vector<Rational>& a);

} // namespace clusterseed
