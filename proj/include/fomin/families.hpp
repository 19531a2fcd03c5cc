#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fomin/diff_verify.hpp"
#include "fomin/graded_graph.hpp"
#include "fomin/point_poset.hpp"
#include "fomin/weight_scheme.hpp"

namespace fomin {

struct FamilySpec {
  enum class Kind {
    quadrant,
    octant,
    strip,
    chain,
    z_chain,
    twos,
    yf1,
    product,
    scaled,
    custom
  };
  Kind kind = Kind::quadrant;
  long k = 0;           // strip parameter
  std::string pattern;  // twos blocks, e.g. "B1B2"
  Rat factor = 1;       // scaled
  std::vector<FamilySpec> factors;
  std::string path;  // custom file
  int max_rank = 6;
};

/// Grammar: name[:param[:param]], e.g. strip:3, twos:B1B2, scaled:octant:2,
/// product:quadrant:quadrant, custom:poset.json.
FamilySpec parse_family_spec(const std::string& text, int max_rank);

struct PointFamily {
  PointPosetWindow window;
  WeightScheme weights;
};

/// Canonical window + weights for the distributive families.  The octant
/// weights are derived from its constraint system rather than stored.
PointFamily make_point_poset(const FamilySpec& spec);

struct GraphFamily {
  GradedWeightedGraph graph;
  Rat r = 0;
  bool positive = false;
};

/// Graded-graph presentation: z-chain, twos, yf1, or the ideal lattice
/// of any distributive family.
GraphFamily make_graded_graph(const FamilySpec& spec);

PointFamily product(const PointFamily& a, const PointFamily& b);
std::vector<PointFamily> factor(const PointFamily& f);
PointFamily scale(PointFamily f, const Rat& k);

/// Removes every point above (or at) a zero-weight point.
PointFamily truncate_points(const PointFamily& f);

/// Equivalence "no zero-weight covering between the meet and the join".
bool sim_equivalent(const PointPosetWindow& P, const WeightScheme& w,
                    const Diagram& x, const Diagram& y);

/// Verifies that the zero-hat block of the enumerated lattice coincides
/// with the ideal lattice of the truncated points, that the truncation
/// stays differential, and (when every negative-weight point has a
/// zero-weight ancestor) that the result is positive.
CheckReport truncate_lattice_check(const PointFamily& f, int n_max);

}  // namespace fomin
