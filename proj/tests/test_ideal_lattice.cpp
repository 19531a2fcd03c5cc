#include <map>
#include <set>

#include "doctest.h"
#include "fomin/ideal_lattice.hpp"
#include "test_util.hpp"

using namespace fomin;
using namespace fomin::testutil;

namespace {

// Oracle: filter all point subsets of bounded size for downward
// closure, independent of the breadth-first enumeration.
std::vector<std::size_t> subset_filter_counts(const PointPosetWindow& P,
                                              int n_max) {
  REQUIRE(P.size() <= 20);
  std::vector<std::size_t> counts(n_max + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << P.size()); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz > n_max) continue;
    std::vector<PointId> pts;
    for (PointId p = 0; p < P.size(); ++p)
      if (mask & (1u << p)) pts.push_back(p);
    if (is_ideal(P, Diagram{pts})) ++counts[sz];
  }
  return counts;
}

// Oracle: saturated chains counted by recursive deletion.
Int chains_by_deletion(const PointPosetWindow& P, const Diagram& x) {
  if (x.size() == 0) return 1;
  Int total = 0;
  for (PointId d : deletion_points(P, x)) {
    Diagram y;
    for (PointId p : x.points)
      if (p != d) y.points.push_back(p);
    total += chains_by_deletion(P, y);
  }
  return total;
}

Diagram by_names(const PointPosetWindow& P,
                 std::initializer_list<const char*> names) {
  std::vector<PointId> pts;
  for (const char* n : names) pts.push_back(P.require(n));
  return make_diagram(pts);
}

}  // namespace

TEST_CASE("ideal counts match the subset-filter oracle") {
  auto q = quadrant(4);
  IdealLattice lat = enumerate_ideals(q.window, 4);
  auto oracle = subset_filter_counts(q.window, 4);
  REQUIRE(lat.num_levels() == 5);
  for (std::size_t s = 0; s <= 4; ++s) CHECK(lat.level(s).size() == oracle[s]);
  CHECK(oracle == std::vector<std::size_t>{1, 1, 2, 3, 5});

  auto oc = octant(4);
  IdealLattice olat = enumerate_ideals(oc.window, 4);
  auto ooracle = subset_filter_counts(oc.window, 4);
  for (std::size_t s = 0; s <= 4; ++s)
    CHECK(olat.level(s).size() == ooracle[s]);
  CHECK(ooracle == std::vector<std::size_t>{1, 1, 1, 2, 2});
}

TEST_CASE("empty window has the single empty ideal") {
  PointPosetWindow P;
  IdealLattice lat = enumerate_ideals(P, 3);
  CHECK(lat.num_levels() == 1);
  CHECK(lat.level(0).size() == 1);
}

TEST_CASE("enumeration needs a downward-complete window") {
  auto q = quadrant(4);
  CHECK_THROWS_AS(enumerate_ideals(q.window, 5), WindowTooShallow);
}

TEST_CASE("insertion and deletion points") {
  auto q = quadrant(4);
  const auto& P = q.window;
  CHECK(insertion_points(P, Diagram{}) ==
        std::vector<PointId>{P.require("(0,0)")});
  CHECK(deletion_points(P, Diagram{}).empty());

  Diagram one = by_names(P, {"(0,0)"});
  auto ins = insertion_points(P, one);
  CHECK(ins == make_diagram({P.require("(0,1)"), P.require("(1,0)")}).points);
  CHECK(deletion_points(P, one) == one.points);

  auto oc = octant(4);
  Diagram two = by_names(oc.window, {"(0,0)", "(1,0)"});
  auto oins = insertion_points(oc.window, two);
  CHECK(oins == make_diagram({oc.window.require("(2,0)"),
                              oc.window.require("(1,1)")})
                    .points);
  CHECK(deletion_points(oc.window, two) ==
        std::vector<PointId>{oc.window.require("(1,0)")});

  CHECK_THROWS(insertion_points(P, by_names(P, {"(1,0)"})));
}

TEST_CASE("chain counts agree with recursive enumeration") {
  auto q = quadrant(6);
  IdealLattice lat = enumerate_ideals(q.window, 6);
  const auto& P = q.window;
  Diagram p21 = by_names(P, {"(0,0)", "(1,0)", "(0,1)"});
  CHECK(lat.chain_count_f(p21) == 2);
  CHECK(chains_by_deletion(P, p21) == 2);
  Diagram p22 = by_names(P, {"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
  CHECK(lat.chain_count_f(p22) == 2);
  CHECK(lat.chain_count_f(Diagram{}) == 1);

  auto counts = lat.chain_counts();
  for (std::size_t s = 0; s < lat.num_levels(); ++s)
    for (std::size_t i = 0; i < lat.level(s).size(); ++i)
      CHECK(counts[s][i] == chains_by_deletion(P, lat.level(s)[i]));
}

TEST_CASE("coloring counts are weight products") {
  auto q = quadrant(4);
  IdealLattice lat = enumerate_ideals(q.window, 4);
  for (std::size_t s = 0; s < lat.num_levels(); ++s)
    for (const Diagram& x : lat.level(s))
      CHECK(coloring_count_c(q.weights, x) == 1);

  auto oc = octant(4);
  CHECK(coloring_count_c(oc.weights,
                         by_names(oc.window, {"(0,0)", "(1,0)"})) == 2);

  auto s3 = strip(3, 4);
  CHECK(coloring_count_c(s3.weights, by_names(s3.window, {"(0,0)"})) == 3);
}

TEST_CASE("union and intersection stay within the enumerated lattice") {
  auto oc = octant(6);
  IdealLattice lat = enumerate_ideals(oc.window, 6);
  for (std::size_t s1 = 0; s1 < lat.num_levels(); ++s1)
    for (const Diagram& x : lat.level(s1))
      for (std::size_t s2 = s1; s2 < lat.num_levels(); ++s2)
        for (const Diagram& y : lat.level(s2)) {
          Diagram u = diagram_union(x, y);
          if (u.size() >= lat.num_levels()) continue;
          CHECK(lat.find(u).has_value());
          CHECK(lat.find(diagram_intersection(x, y)).has_value());
        }
}

TEST_CASE("covers add exactly one insertion point") {
  auto q = quadrant(5);
  IdealLattice lat = enumerate_ideals(q.window, 5);
  for (std::size_t s = 0; s + 1 < lat.num_levels(); ++s)
    for (std::size_t i = 0; i < lat.level(s).size(); ++i) {
      const Diagram& x = lat.level(s)[i];
      auto ins = insertion_points(q.window, x);
      std::set<PointId> expected(ins.begin(), ins.end());
      std::set<PointId> seen;
      for (const IdealLattice::Edge& e : lat.up_edges(s, i)) {
        const Diagram& y = lat.level(s + 1)[e.upper];
        CHECK(y.size() == x.size() + 1);
        CHECK(y.contains(e.added));
        CHECK_FALSE(x.contains(e.added));
        seen.insert(e.added);
      }
      CHECK(seen == expected);
    }
}

TEST_CASE("weight multisets along saturated chains agree") {
  // Any two chains to the same ideal add the same multiset of weights:
  // both are exactly the ideal's own points.
  auto oc = octant(5);
  IdealLattice lat = enumerate_ideals(oc.window, 5);
  for (std::size_t s = 0; s < lat.num_levels(); ++s)
    for (const Diagram& x : lat.level(s)) {
      std::multiset<Rat> expected;
      for (PointId p : x.points) expected.insert(oc.weights.at(p));
      Diagram cur = x;
      std::multiset<Rat> seen;
      while (cur.size() > 0) {
        PointId d = deletion_points(oc.window, cur).back();
        seen.insert(oc.weights.at(d));
        std::vector<PointId> rest;
        for (PointId p : cur.points)
          if (p != d) rest.push_back(p);
        cur = Diagram{rest};
      }
      CHECK(seen == expected);
    }
}
