#pragma once

#include <random>
#include <string>

#include "fomin/families.hpp"
#include "fomin/point_poset.hpp"

namespace fomin::testutil {

/// Corner of the cubic lattice: triples with coordinate sum <= R.
inline PointPosetWindow n3_window(int R) {
  PointPosetWindow::Builder b;
  b.max_rank(R);
  auto name = [](int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + ")";
  };
  for (int x = 0; x <= R; ++x)
    for (int y = 0; x + y <= R; ++y)
      for (int z = 0; x + y + z <= R; ++z)
        b.point(name(x, y, z), x + y + z);
  for (int x = 0; x <= R; ++x)
    for (int y = 0; x + y <= R; ++y)
      for (int z = 0; x + y + z <= R; ++z) {
        if (x + y + z + 1 > R) continue;
        b.cover(name(x, y, z), name(x + 1, y, z));
        b.cover(name(x, y, z), name(x, y + 1, z));
        b.cover(name(x, y, z), name(x, y, z + 1));
      }
  return b.build();
}

inline PointFamily quadrant(int R) {
  return make_point_poset(parse_family_spec("quadrant", R));
}
inline PointFamily octant(int R) {
  return make_point_poset(parse_family_spec("octant", R));
}
inline PointFamily strip(long k, int R) {
  return make_point_poset(
      parse_family_spec("strip:" + std::to_string(k), R));
}
inline PointFamily chain(int R) {
  return make_point_poset(parse_family_spec("chain", R));
}

inline Rat random_rat(std::mt19937_64& rng, long lo = 1, long hi = 9) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 4);
  Rat x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

}  // namespace fomin::testutil
