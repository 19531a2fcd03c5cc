#include "fomin/linear.hpp"

#include <algorithm>

#include "fomin/errors.hpp"

namespace fomin {

std::size_t LinearSystem::add_variable(const std::string& name) {
  if (auto v = variable(name)) return *v;
  variables.push_back(name);
  return variables.size() - 1;
}

std::optional<std::size_t> LinearSystem::variable(
    const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

std::vector<Rat> AffineSolutionSpace::member(
    const std::vector<Rat>& t) const {
  if (t.size() != basis.size())
    throw FominError("parameter count does not match the basis");
  std::vector<Rat> x = particular;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t v = 0; v < x.size(); ++v) x[v] += t[i] * basis[i][v];
  for (auto& xi : x) xi.canonicalize();
  return x;
}

bool AffineSolutionSpace::contains(const std::vector<Rat>& assignment) const {
  if (assignment.size() != variables.size()) return false;
  // Solve particular + basis * t = assignment by elimination over the
  // basis columns.
  std::size_t n = variables.size(), d = basis.size();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(d + 1, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) M[v][i] = basis[i][v];
    M[v][d] = assignment[v] - particular[v];
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col] / M[row][col];
      for (std::size_t j = col; j <= d; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (M[i][d] != 0) return false;
  for (std::size_t i = 0; i < row; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j)
      if (M[i][j] != 0) zero = false;
    if (zero && M[i][d] != 0) return false;
  }
  return true;
}

AffineSolutionSpace solve(const LinearSystem& sys) {
  std::size_t n = sys.variables.size(), m = sys.rows.size();
  // Augment with an identity block so a contradictory row can name the
  // combination of input rows that produced it.
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n + 1 + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (auto& [v, c] : sys.rows[i].coeffs) M[i][v] = c;
    M[i][n] = sys.rows[i].rhs;
    M[i][n + 1 + i] = 1;
  }
  std::vector<std::optional<std::size_t>> pivot_of_col(n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && M[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(M[piv], M[row]);
    Rat d = M[row][col];
    for (auto& x : M[row]) {
      x /= d;
      x.canonicalize();
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (std::size_t j = 0; j < M[i].size(); ++j) {
        M[i][j] -= f * M[row][j];
        M[i][j].canonicalize();
      }
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (M[i][n] == 0) continue;
    std::string combo;
    for (std::size_t k = 0; k < m; ++k)
      if (M[i][n + 1 + k] != 0) {
        if (!combo.empty()) combo += ", ";
        combo += sys.rows[k].label + " * " + rat_str(M[i][n + 1 + k]);
      }
    throw Infeasible("inconsistent rows: " + combo);
  }

  AffineSolutionSpace space;
  space.variables = sys.variables;
  space.particular.assign(n, 0);
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_of_col[col]) space.particular[col] = M[*pivot_of_col[col]][n];
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free]) continue;
    std::vector<Rat> dir(n, 0);
    dir[free] = 1;
    for (std::size_t col = 0; col < n; ++col)
      if (pivot_of_col[col]) dir[col] = -M[*pivot_of_col[col]][free];
    space.basis.push_back(std::move(dir));
  }
  return space;
}

SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b,
                          const std::vector<Rat>& c) {
  std::size_t m = A.size(), n = c.size();
  for (const Rat& bi : b)
    if (bi < 0) throw FominError("simplex_max requires b >= 0");
  // Tableau: columns [x (n) | slacks (m) | rhs], plus objective row.
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(n + m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: lowest-index column with negative objective entry.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rat best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][n + m] / T[i][enter];
      ratio.canonicalize();
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return {true, 0, {}};
    Rat piv = T[leave][enter];
    for (auto& x : T[leave]) {
      x /= piv;
      x.canonicalize();
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) {
        T[i][j] -= f * T[leave][j];
        T[i][j].canonicalize();
      }
    }
    basis[leave] = enter;
  }

  SimplexResult res;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = T[i][n + m];
  res.value = T[m][n + m];
  res.value.canonicalize();
  return res;
}

}  // namespace fomin
