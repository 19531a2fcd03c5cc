#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fomin/rational.hpp"

namespace fomin {

struct LinearRow {
  std::map<std::size_t, Rat> coeffs;  // variable index -> coefficient
  Rat rhs = 0;
  std::string label;
};

struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearRow> rows;

  std::size_t add_variable(const std::string& name);
  std::optional<std::size_t> variable(const std::string& name) const;
};

/// Affine solution set: particular + span(basis).  For the homogeneous
/// systems built here the particular solution is the zero vector.
struct AffineSolutionSpace {
  std::vector<std::string> variables;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> basis;

  std::size_t dimension() const { return basis.size(); }
  std::vector<Rat> member(const std::vector<Rat>& t) const;
  bool contains(const std::vector<Rat>& assignment) const;
};

/// Exact Gaussian elimination; throws Infeasible with the labels of a
/// contradictory row combination.
AffineSolutionSpace solve(const LinearSystem& sys);

/// max c.x subject to A x <= b, x >= 0, for b >= 0 (the slack basis is
/// the starting vertex).  Bland's rule, exact arithmetic.
struct SimplexResult {
  bool unbounded = false;
  Rat value = 0;
  std::vector<Rat> x;
};
SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b,
                          const std::vector<Rat>& c);

}  // namespace fomin
