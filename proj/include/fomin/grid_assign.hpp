#pragma once

#include <map>
#include <vector>

#include "fomin/point_poset.hpp"

namespace fomin {

struct GridCoord {
  int x = 0, y = 0;
  int v() const { return x + y; }
  int h() const { return y - x; }
  auto operator<=>(const GridCoord&) const = default;
};

/// Planar drawing of the window above its bottom chain.  Points of rank
/// >= rank(B_N) occupy distinct cells with x+y = rank - rank(B_N); covers
/// step to (x+1,y) or (x,y+1) and adjacent occupied cells are covers.
struct GridAssignment {
  std::vector<PointId> bottom_chain;  // B_1 .. B_N
  bool chain_truncated = false;  // still a chain at the window top
  bool chain_finite = false;     // chain dead-ends below the window top
  int base_rank = 0;             // rank(B_N)
  std::map<PointId, GridCoord> coords;
  std::map<int, int> h_min, h_max;  // per v level
  bool reached_window_top = false;

  std::size_t chain_length() const { return bottom_chain.size(); }
};

GridAssignment assign_grid(const PointPosetWindow& P);

}  // namespace fomin
