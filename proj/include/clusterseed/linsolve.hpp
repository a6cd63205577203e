#pragma once

#include "clusterseed/rational.hpp"

#include <optional>
#include <string>

namespace clusterseed {

struct LinearSolution {
  bool consistent = false;
  RatVec x;              // one particular solution when consistent
  std::vector<RatVec> kernel; // basis of the null space
  bool unique() const { return consistent && kernel.empty(); }
};

// Solves A x = b exactly by Gauss-Jordan elimination.
LinearSolution solve_exact(const RatMat& a, const RatVec& b, std::size_t unknowns);

Rational determinant(RatMat m);
RatMat inverse(const RatMat& m);
RatMat multiply(const RatMat& a, const RatMat& b);

} // namespace clusterseed
