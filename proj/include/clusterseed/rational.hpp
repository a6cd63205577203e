#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace clusterseed {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational rat(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// accepts "3", "-1/2"
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

} // namespace clusterseed
