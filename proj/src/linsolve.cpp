#include "clusterseed/linsolve.hpp"

#include <stdexcept>

namespace clusterseed {

LinearSolution solve_exact(const RatMat& a, const RatVec& b, std::size_t unknowns)
{
  const std::size_t rows = a.size();
  RatMat m(rows, RatVec(unknowns + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c)
      m[r][c] = a[r][c];
    m[r][unknowns] = b[r];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < unknowns && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0)
        continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= unknowns; ++k)
        m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  LinearSolution out;
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][unknowns] != 0)
      return out;
  out.consistent = true;
  out.x.assign(unknowns, Rational(0));
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    out.x[pivot_col[r]] = m[r][unknowns];
    is_pivot[pivot_col[r]] = true;
  }
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f])
      continue;
    RatVec k(unknowns, Rational(0));
    k[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      k[pivot_col[r]] = -m[r][f];
    out.kernel.push_back(k);
  }
  return out;
}

Rational determinant(RatMat m)
{
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0)
        continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RatMat inverse(const RatMat& m)
{
  const std::size_t n = m.size();
  RatMat out(n, RatVec(n));
  for (std::size_t c = 0; c < n; ++c) {
    RatVec e(n, Rational(0));
    e[c] = 1;
    auto sol = solve_exact(m, e, n);
    if (!sol.unique())
      throw std::domain_error("singular matrix");
    for (std::size_t r = 0; r < n; ++r)
      out[r][c] = sol.x[r];
  }
  return out;
}

RatMat multiply(const RatMat& a, const RatMat& b)
{
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

} // namespace clusterseed
