#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fomin/diff_verify.hpp"
#include "fomin/grid_assign.hpp"
#include "fomin/linear.hpp"
#include "fomin/point_poset.hpp"
#include "fomin/weight_scheme.hpp"

namespace fomin {

/// One row per rank-local condition instance over interior points:
/// the minimal-point identity, the orphan equation, and the equal-weight
/// row for each sibling pair.  Variables are all point weights plus r.
LinearSystem build_constraints(const PointPosetWindow& P);

/// Strictly positive member of the space on the window's points and r,
/// scaled to integers, or nullopt when none exists.
std::optional<WeightScheme> positivity_witness(
    const AffineSolutionSpace& space, const PointPosetWindow& P);

std::optional<Rat> space_member_with_r(const AffineSolutionSpace& space,
                                       const std::string& var,
                                       const Rat& r_value);

/// Invariants of the branch point of the bottom chain, normalized to
/// m = N (differential degree 1).  Delta values of nullopt mean infinity.
struct BottomChainProfile {
  std::size_t N = 0;
  Rat m, epsilon, delta_minus, delta_plus;
  std::optional<Rat> Delta_minus, Delta_plus;
  std::optional<long> x_limit, y_limit;  // structural; nullopt = infinity
  bool window_limited_x = false;  // axis ran into the window top
  bool window_limited_y = false;
  bool delta_identity_holds = false;  // 1/D- + 1/D+ + 1/N = 1
};

BottomChainProfile bottom_chain_profile(const PointPosetWindow& P,
                                        const AffineSolutionSpace& space);

/// A row of the reciprocal-decomposition case table.
struct CaseRow {
  bool parametric = false;  // the family Delta- = -n, Delta+ = n, N = 1
  std::optional<Rat> Delta_minus, Delta_plus;  // nullopt = infinity
  std::optional<long> x_limit, y_limit;
  long N = 0;
  std::string verdict;  // "Y" | "SY" | "Y_n" | "eliminated(...)"
};

/// Exactly the nine admissible rows under N > 0, x_L >= y_L, Delta != 1.
std::vector<CaseRow> enumerate_reciprocal_cases();

/// Forward determination of cell allocations and weights (in multiples
/// of m) on the quarter-plane grid above the branch point.
struct PropagationStep {
  GridCoord cell;
  enum Kind { allocated, not_allocated, balanced, contradiction } kind;
  Rat weight;  // of the allocated cell, or the unmatched residue
};

struct PropagationTrace {
  std::vector<PropagationStep> steps;
  std::vector<std::pair<GridCoord, Rat>> cells;  // allocated, with weights
  std::optional<GridCoord> contradiction;
};

/// Runs the grid determinations for branch data (delta-, delta+,
/// epsilon) with m = 1 through level v_max or until a contradiction.
PropagationTrace propagate_grid(const Rat& delta_minus, const Rat& delta_plus,
                                const Rat& epsilon, int v_max);

/// The impossible case-table rows: (3,2), (4,2), (6,2), or both limits
/// finite and > 2.  Returns the trace ending at the contradiction cell.
PropagationTrace propagate_elimination(long x_limit, long y_limit);

struct Survivor {
  std::string name;  // "Y", "SY", "Y_k"
  long k = 0;        // for Y_k
  PointPosetWindow window;
  WeightScheme weights;  // normalized to r = 1
  bool local_check_passed = false;
};

struct Elimination {
  long x_limit, y_limit;
  long N;
  PropagationTrace trace;
};

struct ClassifyReport {
  std::vector<CaseRow> case_table;
  std::vector<Elimination> eliminations;
  std::vector<Survivor> survivors;
  std::string path_case;  // the semi-infinite-chain survivor note
};

/// Reproduces the case analysis: the reciprocal table, one elimination
/// trace per impossible row, and the surviving lattices constructed to
/// the given rank with their canonical weights verified rank-locally.
ClassifyReport classify(int max_rank);

/// Window + weights reconstructed from a propagation run plus a bottom
/// chain of the given length, normalized to r = 1.
std::pair<PointPosetWindow, WeightScheme> window_from_trace(
    const PropagationTrace& trace, std::size_t chain_length, int max_rank);

}  // namespace fomin
