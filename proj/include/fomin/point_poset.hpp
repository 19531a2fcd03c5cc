#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fomin/errors.hpp"

namespace fomin {

using PointId = std::uint32_t;

/// A finite window onto a (possibly infinite) graded poset of points:
/// every point of rank <= max_rank is assumed present up to
/// complete_below, covers step rank by exactly one, and down-covers are
/// the transpose of up-covers.  Points are indexed densely; the index
/// order is (rank, name), so ids are deterministic for a given window.
class PointPosetWindow {
 public:
  PointPosetWindow() = default;

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  int max_rank() const { return max_rank_; }
  int complete_below() const { return complete_below_; }

  const std::string& name(PointId p) const { return names_[p]; }
  int rank(PointId p) const { return ranks_[p]; }
  const std::vector<PointId>& up_covers(PointId p) const { return up_[p]; }
  const std::vector<PointId>& down_covers(PointId p) const { return down_[p]; }

  std::optional<PointId> find(const std::string& name) const;
  PointId require(const std::string& name) const;

  /// Reflexive order relation within the window.
  bool leq(PointId a, PointId b) const { return leq_[a][b]; }

  std::vector<PointId> minimal_points() const;

  /// A point is interior when its covers are fully visible, so every
  /// rank-local condition at it can be evaluated without clipping.
  bool interior(PointId p) const {
    return ranks_[p] < max_rank_ && ranks_[p] + 1 <= complete_below_;
  }

  std::vector<PointId> points_of_rank(int r) const;

  class Builder;

 private:
  int max_rank_ = 0;
  int complete_below_ = 0;
  std::vector<std::string> names_;
  std::vector<int> ranks_;
  std::vector<std::vector<PointId>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::string, PointId> index_;
};

class PointPosetWindow::Builder {
 public:
  Builder& max_rank(int r) {
    max_rank_ = r;
    return *this;
  }
  /// Defaults to max_rank when unset.
  Builder& complete_below(int r) {
    complete_below_ = r;
    return *this;
  }
  Builder& point(const std::string& name, int rank);
  Builder& cover(const std::string& lower, const std::string& upper);
  PointPosetWindow build() const;

 private:
  int max_rank_ = -1;
  std::optional<int> complete_below_;
  std::vector<std::pair<std::string, int>> points_;
  std::vector<std::pair<std::string, std::string>> covers_;
};

struct PairWitness {
  PointId a, b;
  std::string what;
};

struct ModularityReport {
  bool holds = true;
  std::vector<PairWitness> witnesses;
};

/// Every two points covering a common point must share an upper cover,
/// and dually.  Pairs whose covers are clipped by the window are skipped.
ModularityReport check_cover_modular(const PointPosetWindow& P);

/// As check_cover_modular, but the shared cover and cocover must be unique.
ModularityReport check_unique_cover_modular(const PointPosetWindow& P);

struct Neighborhood {
  PointId center;
  std::vector<PointId> c_minus, c_plus;  // cocovers / covers
  std::vector<PointId> siblings;
  // sibling -> (down partner in c_minus, up partner in c_plus)
  std::map<PointId, std::pair<PointId, PointId>> pairing;
};

/// C_p-, C_p+, S_p and the sibling pairing m -> (m-, m+).  Requires the
/// whole neighborhood to be visible: rank(p)+1 < max_rank.
Neighborhood neighborhood(const PointPosetWindow& P, PointId p);

/// (|C+|, |C-|, |S|) must match one of the fourteen realizable
/// neighborhood shapes; returns the 1-based row in that table.
int neighborhood_row(const Neighborhood& nb);

std::vector<PointPosetWindow> connected_components(const PointPosetWindow& P);

/// Restriction of the window to a subset of points (covers induced).
PointPosetWindow restrict_window(const PointPosetWindow& P,
                                 const std::vector<bool>& keep,
                                 int max_rank, int complete_below);

}  // namespace fomin
