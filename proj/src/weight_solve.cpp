#include "fomin/weight_solve.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fomin {

LinearSystem build_constraints(const PointPosetWindow& P) {
  LinearSystem sys;
  for (PointId p = 0; p < P.size(); ++p)
    sys.add_variable("w(" + P.name(p) + ")");
  std::size_t rv = sys.add_variable("r");

  if (!P.empty()) {
    LinearRow minimal;
    minimal.label = "minimal";
    for (PointId z : P.minimal_points()) minimal.coeffs[z] += 1;
    minimal.coeffs[rv] -= 1;
    sys.rows.push_back(std::move(minimal));
  }

  for (PointId p = 0; p < P.size(); ++p) {
    if (!P.interior(p)) continue;
    Neighborhood nb = local_neighborhood(P, p);
    LinearRow orphan;
    orphan.label = "orphan@" + P.name(p);
    for (PointId a : nb.c_minus) orphan.coeffs[a] += 1;
    for (PointId b : nb.c_plus)
      if (is_upward_orphan(P, nb, b)) orphan.coeffs[b] += 1;
    orphan.coeffs[p] -= 2;
    sys.rows.push_back(std::move(orphan));
    for (auto& [m, pr] : nb.pairing) {
      if (pr.first == pr.second) continue;
      LinearRow pair;
      pair.label = "pair@" + P.name(p) + ":" + P.name(m);
      pair.coeffs[pr.first] += 1;
      pair.coeffs[pr.second] -= 1;
      if (!pair.coeffs.empty()) sys.rows.push_back(std::move(pair));
    }
  }
  return sys;
}

std::optional<WeightScheme> positivity_witness(
    const AffineSolutionSpace& space, const PointPosetWindow& P) {
  std::size_t n = space.variables.size(), d = space.dimension();
  // max e subject to e <= member_v for every variable v and e <= 1,
  // with free variables split into nonnegative pairs.
  std::size_t cols = 2 * d + 2;
  std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(cols, 0));
  std::vector<Rat> b(n + 1, 0), c(cols, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      A[v][2 * i] = -space.basis[i][v];
      A[v][2 * i + 1] = space.basis[i][v];
    }
    A[v][2 * d] = 1;
    A[v][2 * d + 1] = -1;
    b[v] = space.particular[v];
    if (b[v] < 0) throw FominError("positivity probe needs b >= 0");
  }
  A[n][2 * d] = 1;
  A[n][2 * d + 1] = -1;
  b[n] = 1;
  c[2 * d] = 1;
  c[2 * d + 1] = -1;

  SimplexResult res = simplex_max(A, b, c);
  if (res.unbounded || res.value <= 0) return std::nullopt;
  std::vector<Rat> t(d);
  for (std::size_t i = 0; i < d; ++i) t[i] = res.x[2 * i] - res.x[2 * i + 1];
  std::vector<Rat> member = space.member(t);

  Int lcm = 1;
  for (const Rat& x : member) {
    Int den = x.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  WeightScheme w;
  w.w.assign(P.size(), 0);
  for (PointId p = 0; p < P.size(); ++p) {
    auto idx = std::find(space.variables.begin(), space.variables.end(),
                         "w(" + P.name(p) + ")");
    if (idx == space.variables.end())
      throw FominError("solution space lacks a point variable");
    w.w[p] = member[idx - space.variables.begin()] * lcm;
    w.w[p].canonicalize();
  }
  auto rv = std::find(space.variables.begin(), space.variables.end(), "r");
  if (rv == space.variables.end())
    throw FominError("solution space lacks r");
  w.r = member[rv - space.variables.begin()] * lcm;
  w.r.canonicalize();
  return w;
}

std::optional<Rat> space_member_with_r(const AffineSolutionSpace& space,
                                       const std::string& var,
                                       const Rat& r_value) {
  auto rit = std::find(space.variables.begin(), space.variables.end(), "r");
  auto vit = std::find(space.variables.begin(), space.variables.end(), var);
  if (rit == space.variables.end() || vit == space.variables.end())
    return std::nullopt;
  std::size_t r_idx = rit - space.variables.begin();
  std::size_t v_idx = vit - space.variables.begin();
  // The value of `var` over the slice {r = r_value} is well defined only
  // when it is constant there.
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < space.basis.size(); ++i)
    if (space.basis[i][r_idx] != 0) {
      if (pivot) return std::nullopt;  // slice has extra r freedom? keep going
      pivot = i;
    }
  Rat value = space.particular[v_idx];
  if (pivot) {
    Rat t = (r_value - space.particular[r_idx]) / space.basis[*pivot][r_idx];
    value += t * space.basis[*pivot][v_idx];
  } else if (space.particular[r_idx] != r_value) {
    return std::nullopt;
  }
  // Any other direction must not move `var`.
  for (std::size_t i = 0; i < space.basis.size(); ++i)
    if ((!pivot || i != *pivot) && space.basis[i][v_idx] != 0)
      return std::nullopt;
  value.canonicalize();
  return value;
}

namespace {

std::optional<Rat> delta_ratio(const Rat& m, const Rat& delta) {
  if (delta == 0) return std::nullopt;  // infinity
  Rat d = -m / delta;
  d.canonicalize();
  return d;
}

}  // namespace

BottomChainProfile bottom_chain_profile(const PointPosetWindow& P,
                                        const AffineSolutionSpace& space) {
  GridAssignment ga = assign_grid(P);
  if (ga.chain_truncated)
    throw ChainUnbounded(
        "bottom chain fills the window: semi-infinite path case");
  if (ga.chain_finite)
    throw FominError("bottom chain dead-ends below the window top");

  BottomChainProfile prof;
  prof.N = ga.chain_length();
  prof.m = Rat(static_cast<long>(prof.N));
  prof.epsilon = -1;  // w(B_i) = i r with r = 1

  // Structural axis limits from the assignment.
  int top_v = P.max_rank() - ga.base_rank;
  std::map<GridCoord, bool> alloc;
  for (auto& [p, c] : ga.coords) alloc[c] = true;
  auto axis_limit = [&](bool x_axis, bool& window_limited) {
    for (int i = 1; i <= top_v; ++i) {
      GridCoord c = x_axis ? GridCoord{i, 0} : GridCoord{0, i};
      if (!alloc.count(c)) return std::optional<long>(i);
    }
    window_limited = true;
    return std::optional<long>();  // all allocated up to the window top
  };
  prof.x_limit = axis_limit(true, prof.window_limited_x);
  prof.y_limit = axis_limit(false, prof.window_limited_y);

  // delta+ and delta- from the limits, with the branch-point balance
  // m + epsilon + delta- + delta+ = 0 filling in an unlimited side.
  Rat balance = -prof.m - prof.epsilon;
  bool have_minus = false, have_plus = false;
  if (prof.x_limit) {
    prof.delta_minus = -prof.m / Rat(*prof.x_limit);
    have_minus = true;
  }
  if (prof.y_limit) {
    prof.delta_plus = -prof.m / Rat(*prof.y_limit);
    have_plus = true;
  }
  if (have_minus && !have_plus) prof.delta_plus = balance - prof.delta_minus;
  if (have_plus && !have_minus) prof.delta_minus = balance - prof.delta_plus;
  if (!have_minus && !have_plus) {
    // Positivity along both full axes forces both slopes nonnegative;
    // the balance then pins them.
    if (balance != 0)
      throw FominError("both axes unlimited but the branch balance is " +
                       rat_str(balance));
    prof.delta_minus = prof.delta_plus = 0;
  }
  prof.delta_minus.canonicalize();
  prof.delta_plus.canonicalize();
  prof.Delta_minus = delta_ratio(prof.m, prof.delta_minus);
  prof.Delta_plus = delta_ratio(prof.m, prof.delta_plus);

  // Cross-check against the solution space when the r = 1 slice pins the
  // branch weights.
  if (!ga.coords.empty()) {
    PointId t10 = 0, t01 = 0;
    for (auto& [p, c] : ga.coords) {
      if (c == GridCoord{1, 0}) t10 = p;
      if (c == GridCoord{0, 1}) t01 = p;
    }
    auto w10 = space_member_with_r(space, "w(" + P.name(t10) + ")", 1);
    auto w01 = space_member_with_r(space, "w(" + P.name(t01) + ")", 1);
    if (w10 && *w10 - prof.m != prof.delta_minus)
      throw FominError("solution space disagrees with the profile at T(1,0)");
    if (w01 && *w01 - prof.m != prof.delta_plus)
      throw FominError("solution space disagrees with the profile at T(0,1)");
  }

  Rat recip_sum = -(prof.epsilon + prof.delta_minus + prof.delta_plus) / prof.m;
  recip_sum.canonicalize();
  prof.delta_identity_holds = recip_sum == 1;
  return prof;
}

std::vector<CaseRow> enumerate_reciprocal_cases() {
  std::vector<CaseRow> rows;

  // Parametric family: 1/1 + 1/n + (-1/n) with the negative term on the
  // x side (the convention x_L >= y_L fixes the orientation).
  CaseRow param;
  param.parametric = true;
  param.Delta_plus = Rat(0);  // stands for n; printed symbolically
  param.N = 1;
  param.verdict = "Y_n";
  rows.push_back(param);

  const long kMax = 64;
  auto as_recip = [](std::optional<long> d) {
    return d ? Rat(1, *d) : Rat(0);
  };
  std::vector<std::optional<long>> choices;
  choices.push_back(std::nullopt);  // infinity
  for (long k = 2; k <= kMax; ++k) choices.push_back(k);

  for (auto dm : choices)
    for (auto dp : choices) {
      // x_L >= y_L, with infinity largest.
      if (dm && (!dp || *dm < *dp)) continue;
      Rat inv_n = 1 - as_recip(dm) - as_recip(dp);
      inv_n.canonicalize();
      if (inv_n <= 0) continue;
      if (inv_n.get_num() != 1) continue;
      long N = inv_n.get_den().get_si();
      CaseRow row;
      row.Delta_minus = dm ? std::optional<Rat>(Rat(*dm)) : std::nullopt;
      row.Delta_plus = dp ? std::optional<Rat>(Rat(*dp)) : std::nullopt;
      row.x_limit = dm;
      row.y_limit = dp;
      row.N = N;
      if (!dm && !dp)
        row.verdict = "Y";
      else if (!dm && *dp == 2 && N == 2)
        row.verdict = "SY";
      else if (dm && dp && *dm == 3 && *dp == 2)
        row.verdict = "eliminated(xy-32)";
      else if (dm && dp && *dm == 4 && *dp == 2)
        row.verdict = "eliminated(xy-42)";
      else if (dm && dp && *dm == 6 && *dp == 2)
        row.verdict = "eliminated(xy-62)";
      else if (dm && dp && *dm > 2 && *dp > 2)
        row.verdict = "eliminated(xy-ge-3)";
      else
        throw FominError("unexpected reciprocal case");
      rows.push_back(std::move(row));
    }

  // Present in the order of the case table: the parametric family, the
  // two other survivors, then the eliminated rows.
  auto key = [](const CaseRow& r) {
    if (r.parametric) return 0;
    if (r.verdict == "Y") return 1;
    if (r.verdict == "SY") return 2;
    static const std::pair<long, long> order[] = {{3, 2}, {6, 2}, {6, 3},
                                                  {4, 2}, {4, 4}, {3, 3}};
    for (std::size_t i = 0; i < std::size(order); ++i)
      if (r.x_limit && r.y_limit && *r.x_limit == order[i].first &&
          *r.y_limit == order[i].second)
        return static_cast<int>(3 + i);
    return 99;
  };
  std::sort(rows.begin(), rows.end(),
            [&](const CaseRow& a, const CaseRow& b) { return key(a) < key(b); });
  return rows;
}

namespace {

struct Engine {
  std::map<GridCoord, Rat> weight;  // allocated cells
  std::set<GridCoord> not_alloc;
  PropagationTrace trace;

  bool allocated(GridCoord c) const { return weight.count(c) > 0; }
  bool decided(GridCoord c) const {
    return allocated(c) || not_alloc.count(c) > 0;
  }

  void allocate(GridCoord c, Rat w) {
    weight[c] = w;
    trace.steps.push_back({c, PropagationStep::allocated, std::move(w)});
  }
  void exclude(GridCoord c) {
    not_alloc.insert(c);
    trace.steps.push_back({c, PropagationStep::not_allocated, 0});
  }
  bool contradict(GridCoord c, Rat residue) {
    trace.steps.push_back(
        {c, PropagationStep::contradiction, std::move(residue)});
    trace.contradiction = c;
    return false;
  }

  // The orphan equation at an allocated cell p; level v+1 statuses are
  // resolved through at most one undecided up-neighbor.
  bool process_cell(GridCoord p, const Rat& epsilon) {
    Rat lhs = 0;
    if (p == GridCoord{0, 0}) lhs += weight.at(p) + epsilon;
    for (GridCoord a : {GridCoord{p.x - 1, p.y}, GridCoord{p.x, p.y - 1}})
      if (a.x >= 0 && a.y >= 0 && allocated(a)) lhs += weight.at(a);

    std::vector<GridCoord> unknown;
    for (auto [q, other] :
         {std::pair{GridCoord{p.x + 1, p.y}, GridCoord{p.x + 1, p.y - 1}},
          std::pair{GridCoord{p.x, p.y + 1}, GridCoord{p.x - 1, p.y + 1}}}) {
      bool other_alloc =
          other.x >= 0 && other.y >= 0 && allocated(other);
      if (allocated(q)) {
        if (!other_alloc) lhs += weight.at(q);  // q is an orphan over p
      } else if (!not_alloc.count(q)) {
        unknown.push_back(q);  // would be an orphan if present
      }
    }
    Rat residue = 2 * weight.at(p) - lhs;
    residue.canonicalize();
    if (unknown.empty()) {
      if (residue != 0) return contradict(p, residue);
      trace.steps.push_back({p, PropagationStep::balanced, 0});
      return true;
    }
    if (unknown.size() > 1)
      throw FominError("orphan equation underdetermined at level " +
                       std::to_string(p.v()));
    if (residue < 0) return contradict(p, residue);
    if (residue == 0)
      exclude(unknown[0]);
    else
      allocate(unknown[0], residue);
    return true;
  }
};

}  // namespace

PropagationTrace propagate_grid(const Rat& delta_minus, const Rat& delta_plus,
                                const Rat& epsilon, int v_max) {
  Rat m = 1;
  if (m + delta_minus <= 0 || m + delta_plus <= 0)
    throw FominError("branch covers need positive weight");
  Engine e;
  e.allocate({0, 0}, m);
  e.allocate({1, 0}, m + delta_minus);
  e.allocate({0, 1}, m + delta_plus);

  bool alive = e.process_cell({0, 0}, epsilon);
  for (int v = 1; alive && v <= v_max; ++v) {
    std::vector<GridCoord> cells;
    for (auto& [c, w] : e.weight)
      if (c.v() == v) cells.push_back(c);
    if (cells.empty()) break;
    std::sort(cells.begin(), cells.end(),
              [](GridCoord a, GridCoord b) { return a.h() < b.h(); });

    // Adjacent pairs force their join, weighted by the pair rule: the
    // join's weight equals that of the cell diagonally below it.
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      if (cells[i + 1].h() != cells[i].h() + 2) continue;
      GridCoord join{cells[i].x, cells[i].y + 1};
      GridCoord below{cells[i].x - 1, cells[i].y};
      if (!e.allocated(below))
        throw FominError("grid lost contiguity below level " +
                         std::to_string(v));
      if (!e.allocated(join)) e.allocate(join, e.weight.at(below));
    }
    for (GridCoord p : cells) {
      alive = e.process_cell(p, epsilon);
      if (!alive) break;
    }
  }
  for (auto& [c, w] : e.weight) e.trace.cells.emplace_back(c, w);
  return e.trace;
}

PropagationTrace propagate_elimination(long x_limit, long y_limit) {
  bool named = (x_limit == 3 && y_limit == 2) ||
               (x_limit == 4 && y_limit == 2) ||
               (x_limit == 6 && y_limit == 2);
  bool both_big = x_limit > 2 && y_limit > 2;
  if (!named && !both_big)
    throw NotAnEliminationCase("(" + std::to_string(x_limit) + "," +
                               std::to_string(y_limit) +
                               ") is not an eliminated pair");
  Rat dm(-1, x_limit), dp(-1, y_limit);
  dm.canonicalize();
  dp.canonicalize();
  Rat epsilon = -(1 - Rat(1, x_limit) - Rat(1, y_limit));
  epsilon.canonicalize();
  PropagationTrace trace = propagate_grid(dm, dp, epsilon, 64);
  if (!trace.contradiction)
    throw FominError("elimination run ended without a contradiction");
  return trace;
}

std::pair<PointPosetWindow, WeightScheme> window_from_trace(
    const PropagationTrace& trace, std::size_t chain_length, int max_rank) {
  long N = static_cast<long>(chain_length);
  auto cell_name = [](GridCoord c) {
    return "T(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  };
  PointPosetWindow::Builder b;
  b.max_rank(max_rank);
  std::map<std::string, Rat> w;
  for (long i = 1; i < N; ++i) {
    b.point("B" + std::to_string(i), static_cast<int>(i - 1));
    w["B" + std::to_string(i)] = Rat(i);
  }
  std::map<GridCoord, Rat> cells(trace.cells.begin(), trace.cells.end());
  for (auto& [c, wt] : cells) {
    int rank = static_cast<int>(N) - 1 + c.v();
    if (rank > max_rank) continue;
    b.point(cell_name(c), rank);
    Rat scaled = wt * N;  // r-1 normalization: the trace works at m = 1
    scaled.canonicalize();
    w[cell_name(c)] = scaled;
  }
  for (long i = 1; i + 1 < N; ++i)
    b.cover("B" + std::to_string(i), "B" + std::to_string(i + 1));
  if (N > 1 && cells.count({0, 0}))
    b.cover("B" + std::to_string(N - 1), cell_name({0, 0}));
  for (auto& [c, wt] : cells) {
    int rank = static_cast<int>(N) - 1 + c.v();
    if (rank >= max_rank) continue;
    for (GridCoord up : {GridCoord{c.x + 1, c.y}, GridCoord{c.x, c.y + 1}})
      if (cells.count(up)) b.cover(cell_name(c), cell_name(up));
  }
  PointPosetWindow P = b.build();
  WeightScheme scheme;
  scheme.r = 1;
  scheme.w.assign(P.size(), 0);
  for (PointId p = 0; p < P.size(); ++p) scheme.w[p] = w.at(P.name(p));
  return {std::move(P), std::move(scheme)};
}

ClassifyReport classify(int max_rank) {
  ClassifyReport rep;
  rep.case_table = enumerate_reciprocal_cases();
  rep.path_case =
      "semi-infinite path: L = Y_1 with w(B_i) = i r; "
      "a finite chain forces r = 0 and w = 0";

  for (const CaseRow& row : rep.case_table) {
    if (row.verdict.rfind("eliminated", 0) != 0) continue;
    Elimination e;
    e.x_limit = *row.x_limit;
    e.y_limit = *row.y_limit;
    e.N = row.N;
    e.trace = propagate_elimination(e.x_limit, e.y_limit);
    rep.eliminations.push_back(std::move(e));
  }

  auto build_survivor = [&](const std::string& name, long k, Rat dm, Rat dp,
                            Rat eps, std::size_t N) {
    Survivor s;
    s.name = name;
    s.k = k;
    PropagationTrace t =
        propagate_grid(dm, dp, eps, max_rank - static_cast<int>(N) + 1);
    if (t.contradiction)
      throw FominError("survivor construction hit a contradiction");
    auto [win, w] = window_from_trace(t, N, max_rank);
    s.window = std::move(win);
    s.weights = std::move(w);
    s.local_check_passed =
        check_local(s.window, s.weights, OrphanMode::join).holds &&
        check_local(s.window, s.weights, OrphanMode::meet).holds;
    rep.survivors.push_back(std::move(s));
  };

  build_survivor("Y", 0, 0, 0, -1, 1);
  build_survivor("SY", 0, 0, Rat(-1, 2), Rat(-1, 2), 2);

  // Y_1 is the path case: a chain with w(B_i) = i r.
  if (max_rank >= 0) {
    Survivor s;
    s.name = "Y_k";
    s.k = 1;
    PointPosetWindow::Builder b;
    b.max_rank(max_rank);
    for (long i = 1; i <= max_rank + 1; ++i)
      b.point("B" + std::to_string(i), static_cast<int>(i - 1));
    for (long i = 1; i <= max_rank; ++i)
      b.cover("B" + std::to_string(i), "B" + std::to_string(i + 1));
    s.window = b.build();
    s.weights.r = 1;
    s.weights.w.assign(s.window.size(), 0);
    for (PointId p = 0; p < s.window.size(); ++p)
      s.weights.w[p] = Rat(s.window.rank(p) + 1);
    s.local_check_passed =
        check_local(s.window, s.weights, OrphanMode::join).holds &&
        check_local(s.window, s.weights, OrphanMode::meet).holds;
    rep.survivors.push_back(std::move(s));
  }
  for (long k = 2; k <= max_rank; ++k)
    build_survivor("Y_k", k, Rat(1, k), Rat(-1, k), -1, 1);
  return rep;
}

}  // namespace fomin
