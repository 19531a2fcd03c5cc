#include "fomin/grid_assign.hpp"

#include <algorithm>
#include <set>

namespace fomin {

namespace {

// (3a-i)..(3a-iv): contiguity, +-1 drift of the level ends, and the
// cover/adjacency equivalence at the freshly assigned level.
void check_level_hypotheses(const PointPosetWindow& P, GridAssignment& ga,
                            const std::map<GridCoord, PointId>& loc, int v) {
  std::vector<GridCoord> cells;
  for (auto& [c, p] : loc)
    if (c.v() == v) cells.push_back(c);
  if (cells.empty()) return;
  std::sort(cells.begin(), cells.end(),
            [](auto& a, auto& b) { return a.h() < b.h(); });
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (cells[i].h() != cells[i - 1].h() + 2)
      throw AssignmentContradiction("level " + std::to_string(v) +
                                    " is not contiguous");
  ga.h_min[v] = cells.front().h();
  ga.h_max[v] = cells.back().h();
  if (v >= 1 && ga.h_min.count(v - 1)) {
    if (std::abs(ga.h_min[v] - ga.h_min[v - 1]) != 1 ||
        std::abs(ga.h_max[v] - ga.h_max[v - 1]) != 1)
      throw AssignmentContradiction("level ends of " + std::to_string(v) +
                                    " drift by more than one");
  }
  for (GridCoord c : cells) {
    PointId q = loc.at(c);
    std::set<PointId> below_cells;
    for (GridCoord d : {GridCoord{c.x - 1, c.y}, GridCoord{c.x, c.y - 1}}) {
      auto it = loc.find(d);
      if (it != loc.end()) below_cells.insert(it->second);
    }
    std::set<PointId> covers;
    for (PointId p : P.down_covers(q))
      if (ga.coords.count(p)) covers.insert(p);
    if (below_cells != covers)
      throw AssignmentContradiction("covers of " + P.name(q) +
                                    " do not match grid adjacency");
  }
}

}  // namespace

GridAssignment assign_grid(const PointPosetWindow& P) {
  if (P.empty()) throw NoMinimum("empty window has no minimum");
  for (PointId p = 0; p < P.size(); ++p)
    if (P.up_covers(p).size() >= 3 || P.down_covers(p).size() >= 3)
      throw TripleCover(P.name(p) + " has three or more covers");
  if (connected_components(P).size() != 1)
    throw NotConnected("window is not connected");
  auto minimal = P.minimal_points();
  if (minimal.size() != 1)
    throw NoMinimum("window has " + std::to_string(minimal.size()) +
                    " minimal points");

  GridAssignment ga;
  PointId cur = minimal[0];
  ga.bottom_chain.push_back(cur);
  while (P.up_covers(cur).size() == 1) {
    cur = P.up_covers(cur)[0];
    ga.bottom_chain.push_back(cur);
  }
  ga.base_rank = P.rank(cur);
  if (P.up_covers(cur).empty()) {
    if (P.rank(cur) >= P.max_rank())
      ga.chain_truncated = true;  // may branch beyond the window
    else
      ga.chain_finite = true;
    return ga;
  }

  std::map<GridCoord, PointId> loc;
  auto assign = [&](GridCoord c, PointId p) {
    if (loc.count(c) || ga.coords.count(p))
      throw AssignmentContradiction("cell or point assigned twice: " +
                                    P.name(p));
    loc[c] = p;
    ga.coords[p] = c;
  };

  assign({0, 0}, cur);
  ga.h_min[0] = ga.h_max[0] = 0;
  auto covers = P.up_covers(cur);  // exactly two
  if (P.name(covers[0]) > P.name(covers[1])) std::swap(covers[0], covers[1]);
  assign({0, 1}, covers[0]);  // smaller id takes the smaller x
  assign({1, 0}, covers[1]);
  check_level_hypotheses(P, ga, loc, 1);

  for (int R = ga.base_rank + 2; R <= P.max_rank(); ++R) {
    auto grade = P.points_of_rank(R);
    if (grade.empty()) break;
    int v = R - ga.base_rank;

    std::vector<GridCoord> prev;
    for (auto& [c, p] : loc)
      if (c.v() == v - 1) prev.push_back(c);
    std::sort(prev.begin(), prev.end(),
              [](auto& a, auto& b) { return a.h() < b.h(); });

    std::set<PointId> assigned_now;
    // (3b) adjacent pairs at v-1 force their unique join.
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      PointId p1 = loc[prev[i]], p2 = loc[prev[i + 1]];
      std::vector<PointId> join;
      std::set_intersection(P.up_covers(p1).begin(), P.up_covers(p1).end(),
                            P.up_covers(p2).begin(), P.up_covers(p2).end(),
                            std::back_inserter(join));
      if (join.size() != 1)
        throw AssignmentContradiction("adjacent cells " + P.name(p1) + ", " +
                                      P.name(p2) +
                                      " lack a unique common cover");
      if (ga.coords.count(join[0]))
        throw TripleCover(P.name(join[0]) + " covers three cells");
      assign({prev[i].x, prev[i].y + 1}, join[0]);
      assigned_now.insert(join[0]);
    }

    std::vector<PointId> remaining;
    for (PointId e : grade)
      if (!assigned_now.count(e)) remaining.push_back(e);

    GridCoord end_min = prev.front(), end_max = prev.back();
    PointId at_min = loc[end_min], at_max = loc[end_max];
    if (end_min != end_max) {
      std::vector<PointId> over_min, over_max;
      for (PointId e : remaining) {
        bool cmin = std::binary_search(P.down_covers(e).begin(),
                                       P.down_covers(e).end(), at_min);
        bool cmax = std::binary_search(P.down_covers(e).begin(),
                                       P.down_covers(e).end(), at_max);
        if (cmin && cmax)
          throw AssignmentContradiction(P.name(e) + " covers both level ends");
        if (!cmin && !cmax)
          throw AssignmentContradiction(P.name(e) +
                                        " covers neither level end");
        (cmin ? over_min : over_max).push_back(e);
      }
      if (over_min.size() > 1)
        throw TripleCover(P.name(at_min) + " is covered three times");
      if (over_max.size() > 1)
        throw TripleCover(P.name(at_max) + " is covered three times");
      // (3d)/(3e): extend outward past each end cell.
      if (!over_min.empty()) assign({end_min.x + 1, end_min.y}, over_min[0]);
      if (!over_max.empty()) assign({end_max.x, end_max.y + 1}, over_max[0]);
    } else {
      // (3f) singleton level: up to two covers, placed by id order.
      if (remaining.size() > 2)
        throw TripleCover(P.name(at_min) + " is covered three times");
      std::sort(remaining.begin(), remaining.end(),
                [&](PointId a, PointId b) { return P.name(a) < P.name(b); });
      if (!remaining.empty())
        assign({end_min.x, end_min.y + 1}, remaining[0]);
      if (remaining.size() == 2)
        assign({end_min.x + 1, end_min.y}, remaining[1]);
    }
    check_level_hypotheses(P, ga, loc, v);
    if (R == P.max_rank()) ga.reached_window_top = true;
  }
  return ga;
}

}  // namespace fomin
