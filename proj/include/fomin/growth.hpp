#pragma once

#include <vector>

#include "fomin/graded_graph.hpp"
#include "fomin/rational.hpp"

namespace fomin {

/// Per-element bijection between (colored down-edges + r symbols) and
/// colored up-edges.  Edge copies are ordered by (neighbor index, copy);
/// symbols follow the down-edge block.  table[level][idx][d] is the
/// codomain position of domain position d.
struct McLarnanMap {
  long r = 0;
  std::vector<std::vector<std::vector<std::size_t>>> table;
};

/// The order-pairing map; requires positive integer edge weights and the
/// per-element cardinality identity (that is, the graph is r-differential).
McLarnanMap canonical_mclarnan(const GradedWeightedGraph& G, long r);

struct ColoredPermutation {
  std::vector<long> perm;    // values 1..n, bijective
  std::vector<long> colors;  // values 1..r

  std::size_t size() const { return perm.size(); }
  bool operator==(const ColoredPermutation&) const = default;
};

/// A path from zero-hat; edge_colors carries per-step copy indices when
/// the path lives in the colored graph (empty for plain paths).
struct PathTableau {
  std::vector<GElem> chain;
  std::vector<long> edge_colors;
};

struct RskResult {
  PathTableau P;  // colored
  PathTableau Q;  // plain
  GElem shape;
};

RskResult rsk_forward(const GradedWeightedGraph& G, const McLarnanMap& M,
                      const ColoredPermutation& sigma);

ColoredPermutation rsk_inverse(const GradedWeightedGraph& G,
                               const McLarnanMap& M, const PathTableau& P,
                               const PathTableau& Q);

struct IdentityReport {
  int n = 0;
  Rat lhs, rhs;  // n! r^n and sum of f(x)^2 c(x)
  bool match = false;
};

/// n! r^n against the weighted path-count sum at rank n, both exact.
IdentityReport verify_identity(const GradedWeightedGraph& G, const Rat& r,
                               int n);

/// All r-colored permutations of 1..n in lexicographic order.
std::vector<ColoredPermutation> all_colored_permutations(int n, long r);

}  // namespace fomin
