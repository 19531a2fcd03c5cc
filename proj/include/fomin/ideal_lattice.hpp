#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fomin/point_poset.hpp"
#include "fomin/rational.hpp"
#include "fomin/weight_scheme.hpp"

namespace fomin {

/// A finite order ideal of points in canonical (sorted) form.
struct Diagram {
  std::vector<PointId> points;

  std::size_t size() const { return points.size(); }
  bool contains(PointId p) const;
  auto operator<=>(const Diagram&) const = default;
};

Diagram make_diagram(std::vector<PointId> points);
bool is_ideal(const PointPosetWindow& P, const Diagram& x);

Diagram diagram_union(const Diagram& a, const Diagram& b);
Diagram diagram_intersection(const Diagram& a, const Diagram& b);

/// Minimal points of the complement / maximal points of the ideal.
std::vector<PointId> insertion_points(const PointPosetWindow& P,
                                      const Diagram& x);
std::vector<PointId> deletion_points(const PointPosetWindow& P,
                                     const Diagram& x);

/// All ideals of size <= n_max, leveled by size, with cover edges
/// labeled by the added point.
class IdealLattice {
 public:
  struct Edge {
    std::size_t upper;  // index within the next level
    PointId added;
  };

  std::size_t num_levels() const { return levels_.size(); }
  const std::vector<Diagram>& level(std::size_t s) const {
    return levels_[s];
  }
  const std::vector<Edge>& up_edges(std::size_t s, std::size_t i) const {
    return up_[s][i];
  }
  std::optional<std::pair<std::size_t, std::size_t>> find(
      const Diagram& x) const;

  /// Path counts f from the empty ideal, level by level.
  std::vector<std::vector<Int>> chain_counts() const;
  Int chain_count_f(const Diagram& x) const;

  friend IdealLattice enumerate_ideals(const PointPosetWindow& P, int n_max);

 private:
  std::vector<std::vector<Diagram>> levels_;
  std::vector<std::map<Diagram, std::size_t>> index_;
  std::vector<std::vector<std::vector<Edge>>> up_;
};

IdealLattice enumerate_ideals(const PointPosetWindow& P, int n_max);

/// Product of the point weights of x.
Rat coloring_count_c(const WeightScheme& w, const Diagram& x);

}  // namespace fomin
