#pragma once

#include "clusterseed/root_data.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace clusterseed {

struct Label;
using LabelPtr = std::shared_ptr<const Label>;
using Monomial = std::vector<std::pair<LabelPtr, int>>;

// Atomic labels name an invariant; Exchange labels record one application of
// the exchange relation A'_k = (M+ + M-) / A_k.
struct Label {
  enum class Kind { Atomic, Exchange };
  Kind kind = Kind::Atomic;

  // Atomic
  std::string descriptor;
  int node = -1;
  int occurrence = -1;
  Word prefix;
  // type A: determinant rows taken from these marked points, in order
  std::vector<int> flag_order;
  std::vector<int> degrees;
  bool sign_ambiguous = false;

  // Exchange
  std::string vertex;
  Monomial plus, minus;
  LabelPtr denominator;

  std::size_t hash = 0;
};

LabelPtr make_atomic(std::string descriptor, int node = -1, int occurrence = -1, Word prefix = {});
LabelPtr make_wedge(std::string descriptor, std::vector<int> flag_order, std::vector<int> degrees);
LabelPtr make_exchange(std::string vertex, Monomial plus, Monomial minus, LabelPtr denominator);
// Copy of an atomic label with flags renamed through marked-point map.
LabelPtr relabel_flags(const LabelPtr& l, const std::vector<int>& point_map, bool sign_ambiguous);

// Wedge rows read in increasing marked-point order.
LabelPtr sort_flags(const LabelPtr& l);

bool same_label(const LabelPtr& a, const LabelPtr& b);
bool same_monomial(const Monomial& a, const Monomial& b);
std::string describe(const LabelPtr& l);

} // namespace clusterseed
