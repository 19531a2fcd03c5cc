#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fomin/ideal_lattice.hpp"
#include "fomin/rational.hpp"

namespace fomin {

/// Element handle: level is an offset from min_rank, so rank = min_rank
/// + level.
struct GElem {
  int level = 0;
  std::size_t idx = 0;
  auto operator<=>(const GElem&) const = default;
};

/// Rank-indexed elements with weighted up-edges.  Structures without a
/// minimum element (min_rank < 0 or several bottom elements) are
/// supported; growth operations additionally require zero_hat.
class GradedWeightedGraph {
 public:
  struct UpEdge {
    std::size_t upper;
    Rat weight;
  };
  struct DownEdge {
    std::size_t lower;
    Rat weight;
  };

  GradedWeightedGraph() = default;
  GradedWeightedGraph(int min_rank,
                      std::vector<std::vector<std::string>> names,
                      std::vector<std::vector<std::vector<UpEdge>>> up);

  int min_rank() const { return min_rank_; }
  int max_rank() const {
    return min_rank_ + static_cast<int>(names_.size()) - 1;
  }
  std::size_t num_levels() const { return names_.size(); }
  std::size_t level_size(int level) const { return names_[level].size(); }
  const std::string& name(GElem e) const { return names_[e.level][e.idx]; }
  const std::vector<UpEdge>& up(GElem e) const { return up_[e.level][e.idx]; }
  const std::vector<DownEdge>& down(GElem e) const {
    return down_[e.level][e.idx];
  }

  std::optional<GElem> zero_hat() const;

  /// Total up/down edge weight at an element.
  Rat up_weight(GElem e) const;
  Rat down_weight(GElem e) const;

 private:
  int min_rank_ = 0;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<UpEdge>>> up_;
  std::vector<std::vector<std::vector<DownEdge>>> down_;
};

/// The ideal lattice of a window as a graded graph; edge weights are the
/// weights of the added points.
GradedWeightedGraph graph_from_ideals(const PointPosetWindow& P,
                                      const WeightScheme& w, int n_max);

std::string diagram_name(const PointPosetWindow& P, const Diagram& x);

}  // namespace fomin
