#include "clusterseed/rational.hpp"

#include <stdexcept>

namespace clusterseed {

Rational parse_rational(const std::string& s)
{
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace clusterseed
