#include <algorithm>
#include <set>

#include "doctest.h"
#include "fomin/grid_assign.hpp"
#include "fomin/point_poset.hpp"
#include "test_util.hpp"

using namespace fomin;
using namespace fomin::testutil;

namespace {

// Direct-definition oracle quantifying over all pairs, independent of
// the cover-indexed implementation.
bool cover_modular_oracle(const PointPosetWindow& P) {
  for (PointId a = 0; a < P.size(); ++a)
    for (PointId b = a + 1; b < P.size(); ++b) {
      bool share_down = false, share_up = false;
      for (PointId z = 0; z < P.size(); ++z) {
        auto covers = [&](PointId lo, PointId hi) {
          const auto& up = P.up_covers(lo);
          return std::find(up.begin(), up.end(), hi) != up.end();
        };
        if (covers(z, a) && covers(z, b)) share_down = true;
        if (covers(a, z) && covers(b, z)) share_up = true;
      }
      bool visible = P.rank(a) < P.max_rank();
      if (share_down && visible && !share_up) return false;
      if (share_up && !share_down) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("window builder keeps covers transposed and rank-consistent") {
  auto f = quadrant(4);
  const auto& P = f.window;
  for (PointId p = 0; p < P.size(); ++p) {
    for (PointId q : P.up_covers(p)) {
      CHECK(P.rank(q) == P.rank(p) + 1);
      const auto& d = P.down_covers(q);
      CHECK(std::find(d.begin(), d.end(), p) != d.end());
    }
    for (PointId q : P.down_covers(p)) {
      const auto& u = P.up_covers(q);
      CHECK(std::find(u.begin(), u.end(), p) != u.end());
    }
  }
  CHECK_THROWS_AS(PointPosetWindow::Builder()
                      .max_rank(1)
                      .point("a", 0)
                      .point("b", 0)
                      .cover("a", "b")
                      .build(),
                  InvalidWindow);
}

TEST_CASE("cover-modularity on the standard windows") {
  CHECK(check_cover_modular(quadrant(5).window).holds);
  CHECK(check_cover_modular(testutil::n3_window(4)).holds);
  CHECK(cover_modular_oracle(quadrant(5).window));
  CHECK(cover_modular_oracle(testutil::n3_window(4)));

  // One bottom, two incomparable tops, no common cover.
  auto v = PointPosetWindow::Builder()
               .max_rank(2)
               .point("a", 0)
               .point("b", 1)
               .point("c", 1)
               .cover("a", "b")
               .cover("a", "c")
               .build();
  auto rep = check_cover_modular(v);
  CHECK_FALSE(rep.holds);
  CHECK_FALSE(cover_modular_oracle(v));
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(v.rank(rep.witnesses[0].a) == 1);
}

TEST_CASE("unique-cover-modularity") {
  CHECK(check_unique_cover_modular(octant(6).window).holds);
  CHECK(check_unique_cover_modular(quadrant(6).window).holds);

  // Two elements sharing two distinct upper covers.
  auto w = PointPosetWindow::Builder()
               .max_rank(2)
               .point("a", 0)
               .point("b", 1)
               .point("c", 1)
               .point("d", 2)
               .point("e", 2)
               .cover("a", "b")
               .cover("a", "c")
               .cover("b", "d")
               .cover("c", "d")
               .cover("b", "e")
               .cover("c", "e")
               .build();
  CHECK_FALSE(check_unique_cover_modular(w).holds);
}

TEST_CASE("neighborhoods of the standard windows") {
  auto q = quadrant(5);
  Neighborhood nb = neighborhood(q.window, q.window.require("(1,1)"));
  CHECK(nb.c_minus.size() == 2);
  CHECK(nb.c_plus.size() == 2);
  CHECK(nb.siblings.size() == 2);
  CHECK(neighborhood_row(nb) == 14);
  for (PointId m : nb.siblings) {
    auto [lo, hi] = nb.pairing.at(m);
    CHECK(q.window.leq(lo, m));
    CHECK(q.window.leq(m, hi));
  }

  Neighborhood origin = neighborhood(q.window, q.window.require("(0,0)"));
  CHECK(origin.c_minus.empty());
  CHECK(origin.c_plus.size() == 2);
  CHECK(origin.siblings.empty());

  auto oc = octant(5);
  Neighborhood diag = neighborhood(oc.window, oc.window.require("(1,1)"));
  CHECK(diag.c_minus.size() == 1);
  CHECK(diag.c_plus.size() == 1);
  CHECK(diag.siblings.size() == 1);

  CHECK_THROWS_AS(neighborhood(q.window, q.window.require("(5,0)")),
                  NeighborhoodNotVisible);
}

TEST_CASE("siblings form an antichain with injective pairing") {
  for (auto f : {quadrant(6), octant(6), strip(3, 6)}) {
    const auto& P = f.window;
    for (PointId p = 0; p < P.size(); ++p) {
      if (P.rank(p) + 1 >= P.max_rank()) continue;
      Neighborhood nb = neighborhood(P, p);
      for (PointId a : nb.siblings)
        for (PointId b : nb.siblings)
          if (a != b) CHECK((!P.leq(a, b) && !P.leq(b, a)));
      std::set<PointId> lo, hi;
      for (auto& [m, pr] : nb.pairing) {
        CHECK(lo.insert(pr.first).second);
        CHECK(hi.insert(pr.second).second);
      }
    }
  }
}

TEST_CASE("connected components") {
  auto q = quadrant(4), oc = octant(4);
  CHECK(connected_components(q.window).size() == 1);
  auto both = product(q, oc);
  auto comps = connected_components(both.window);
  CHECK(comps.size() == 2);
  CHECK(comps[0].size() + comps[1].size() == both.window.size());
  CHECK(connected_components(PointPosetWindow()).empty());
}

TEST_CASE("grid assignment of the quadrant") {
  auto q = quadrant(6);
  GridAssignment ga = assign_grid(q.window);
  CHECK(ga.chain_length() == 1);
  CHECK(ga.base_rank == 0);
  CHECK(ga.coords.at(q.window.require("(0,0)")) == GridCoord{0, 0});
  // every cell of the quarter-plane is occupied
  for (int v = 0; v <= 6; ++v) {
    CHECK(ga.h_min.at(v) == -v);
    CHECK(ga.h_max.at(v) == v);
  }
  for (auto& [p, c] : ga.coords)
    CHECK(c.v() == q.window.rank(p) - ga.base_rank);
  // the lexicographically smaller cover takes the smaller x
  CHECK(ga.coords.at(q.window.require("(0,1)")).x == 0);
  CHECK(ga.coords.at(q.window.require("(1,0)")).x == 1);
}

TEST_CASE("grid assignment of the octant") {
  auto oc = octant(6);
  GridAssignment ga = assign_grid(oc.window);
  REQUIRE(ga.chain_length() == 2);
  CHECK(oc.window.name(ga.bottom_chain[0]) == "(0,0)");
  CHECK(oc.window.name(ga.bottom_chain[1]) == "(1,0)");
  CHECK(ga.coords.at(oc.window.require("(1,0)")) == GridCoord{0, 0});
  CHECK(ga.base_rank == 1);
}

TEST_CASE("grid assignment flags chains and rejects triple covers") {
  GridAssignment ga = assign_grid(chain(5).window);
  CHECK(ga.chain_truncated);
  CHECK(ga.chain_length() == 6);
  CHECK(ga.coords.empty());

  auto finite = PointPosetWindow::Builder()
                    .max_rank(3)
                    .point("a", 0)
                    .point("b", 1)
                    .cover("a", "b")
                    .build();
  GridAssignment fa = assign_grid(finite);
  CHECK(fa.chain_finite);

  CHECK_THROWS_AS(assign_grid(testutil::n3_window(4)), TripleCover);
  auto q = quadrant(3), oc = octant(3);
  CHECK_THROWS_AS(assign_grid(product(q, oc).window), NotConnected);
  CHECK_THROWS_AS(assign_grid(PointPosetWindow()), NoMinimum);
}

TEST_CASE("restrict_window keeps induced structure") {
  auto q = quadrant(4);
  std::vector<bool> keep(q.window.size(), true);
  auto copy = restrict_window(q.window, keep, 3, 3);
  CHECK(copy.max_rank() == 3);
  for (PointId p = 0; p < copy.size(); ++p) CHECK(copy.rank(p) <= 3);
  CHECK(check_unique_cover_modular(copy).holds);
}
