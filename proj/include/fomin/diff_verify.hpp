#pragma once

#include <string>
#include <vector>

#include "fomin/graded_graph.hpp"
#include "fomin/ideal_lattice.hpp"
#include "fomin/point_poset.hpp"
#include "fomin/weight_scheme.hpp"

namespace fomin {

struct FailureSite {
  std::string site;
  Rat lhs, rhs;
};

struct CheckReport {
  bool holds = true;
  std::vector<FailureSite> failures;
  std::vector<std::string> skipped;  // sites clipped by the window

  void fail(std::string site, Rat lhs, Rat rhs) {
    holds = false;
    failures.push_back({std::move(site), std::move(lhs), std::move(rhs)});
  }
};

/// Sum of deletion-point weights plus r must equal the sum of
/// insertion-point weights, for every ideal of size <= n_max.
CheckReport check_global(const PointPosetWindow& P, const WeightScheme& w,
                         int n_max, int threads = 1);

/// The four-set difference identity between x and x + {p}.
CheckReport check_incremental(const PointPosetWindow& P, const WeightScheme& w,
                              const Diagram& x, PointId p);

/// The two-sum identity at p for one ideal/filter split of the siblings.
CheckReport check_partition_equation(const PointPosetWindow& P,
                                     const WeightScheme& w, PointId p,
                                     const std::vector<PointId>& t_minus,
                                     const std::vector<PointId>& t_plus);

enum class OrphanMode { join, meet };

/// The rank-local condition system: the minimal-point identity, the
/// orphan equation at every interior point, sibling-pairing injectivity,
/// and equal weights across each sibling pair.
CheckReport check_local(const PointPosetWindow& P, const WeightScheme& w,
                        OrphanMode mode);

/// Per-element balance sum(up) - sum(down) = r on a graded graph, for
/// elements whose edges are fully visible (or the given ranks).
CheckReport check_graded_graph(const GradedWeightedGraph& G, const Rat& r,
                               const std::vector<int>* ranks = nullptr);

/// Neighborhood data computed without the strict visibility guard; used
/// by the local checks, which quantify over interior points only.
Neighborhood local_neighborhood(const PointPosetWindow& P, PointId p);

bool is_upward_orphan(const PointPosetWindow& P, const Neighborhood& nb,
                      PointId b);
bool is_downward_orphan(const PointPosetWindow& P, const Neighborhood& nb,
                        PointId a);

}  // namespace fomin
