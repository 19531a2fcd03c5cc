#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fomin {

using Rat = mpq_class;
using Int = mpz_class;

/// Renders a rational as "p" or "p/q" (q > 1), the form used in all
/// machine-readable output.
inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace fomin
