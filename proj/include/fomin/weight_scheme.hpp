#pragma once

#include <vector>

#include "fomin/errors.hpp"
#include "fomin/point_poset.hpp"
#include "fomin/rational.hpp"

namespace fomin {

/// Exact point weights plus the differential degree r.
struct WeightScheme {
  std::vector<Rat> w;  // indexed by PointId
  Rat r = 0;

  const Rat& at(PointId p) const {
    if (p >= w.size()) throw MissingWeight("no weight for point index");
    return w[p];
  }

  bool positive() const {
    if (r <= 0) return false;
    for (const Rat& x : w)
      if (x <= 0) return false;
    return true;
  }
};

inline WeightScheme constant_weights(const PointPosetWindow& P, Rat value,
                                     Rat r) {
  WeightScheme s;
  s.w.assign(P.size(), value);
  s.r = std::move(r);
  return s;
}

}  // namespace fomin
