#include "fomin/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fomin/linear.hpp"
#include "fomin/weight_solve.hpp"
#include "json.hpp"

namespace fomin {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

std::string coord_name(long x, long y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

PointFamily make_quadrant(int R) {
  PointPosetWindow::Builder b;
  b.max_rank(R);
  for (int x = 0; x <= R; ++x)
    for (int y = 0; x + y <= R; ++y) b.point(coord_name(x, y), x + y);
  for (int x = 0; x <= R; ++x)
    for (int y = 0; x + y <= R; ++y) {
      if (x + y + 1 > R) continue;
      b.cover(coord_name(x, y), coord_name(x + 1, y));
      b.cover(coord_name(x, y), coord_name(x, y + 1));
    }
  PointFamily f{b.build(), {}};
  f.weights = constant_weights(f.window, 1, 1);
  return f;
}

PointPosetWindow octant_window(int R) {
  PointPosetWindow::Builder b;
  b.max_rank(R);
  for (int x = 0; x <= R; ++x)
    for (int y = 0; y <= x && x + y <= R; ++y)
      b.point(coord_name(x, y), x + y);
  for (int x = 0; x <= R; ++x)
    for (int y = 0; y <= x && x + y <= R; ++y) {
      if (x + y + 1 > R) continue;
      b.cover(coord_name(x, y), coord_name(x + 1, y));
      if (y + 1 <= x) b.cover(coord_name(x, y), coord_name(x, y + 1));
    }
  return b.build();
}

std::string fixture_path(const std::string& key) {
  const char* dir = std::getenv("FOMIN_FIXTURE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/" + key + ".json";
}

// The canonical octant weights come out of its own constraint system
// with r = 1; the pattern is cached once derived.
PointFamily make_octant(int R) {
  PointFamily f{octant_window(R), {}};
  f.weights.r = 1;
  f.weights.w.assign(f.window.size(), 0);

  std::string cache = fixture_path("octant-r" + std::to_string(R));
  if (!cache.empty()) {
    std::ifstream in(cache);
    if (in) {
      nlohmann::json j = nlohmann::json::parse(in);
      for (PointId p = 0; p < f.window.size(); ++p)
        f.weights.w[p] = parse_rat(j.at(f.window.name(p)).get<std::string>());
      return f;
    }
  }

  AffineSolutionSpace space = solve(build_constraints(f.window));
  if (space.dimension() != 1)
    throw FominError("octant system is not one-dimensional");
  auto rv = std::find(space.variables.begin(), space.variables.end(), "r");
  std::size_t r_idx = rv - space.variables.begin();
  if (space.basis[0][r_idx] == 0)
    throw FominError("octant ray does not move r");
  Rat t = (Rat(1) - space.particular[r_idx]) / space.basis[0][r_idx];
  std::vector<Rat> member = space.member({t});
  for (PointId p = 0; p < f.window.size(); ++p) {
    auto it = std::find(space.variables.begin(), space.variables.end(),
                        "w(" + f.window.name(p) + ")");
    f.weights.w[p] = member[it - space.variables.begin()];
    if (!is_integer(f.weights.w[p]) || f.weights.w[p] <= 0)
      throw FominError("octant weights did not come out positive integers");
  }

  if (!cache.empty()) {
    nlohmann::json j;
    for (PointId p = 0; p < f.window.size(); ++p)
      j[f.window.name(p)] = rat_str(f.weights.w[p]);
    std::ofstream out(cache);
    out << j.dump(2) << "\n";
  }
  return f;
}

PointFamily make_strip(long k, int R) {
  if (k < 1) throw UnsupportedSpec("strip needs k >= 1");
  PointPosetWindow::Builder b;
  b.max_rank(R);
  for (long x = 0; x <= R; ++x)
    for (long y = 0; y < k && x + y <= R; ++y)
      b.point(coord_name(x, y), static_cast<int>(x + y));
  for (long x = 0; x <= R; ++x)
    for (long y = 0; y < k && x + y <= R; ++y) {
      if (x + y + 1 > R) continue;
      b.cover(coord_name(x, y), coord_name(x + 1, y));
      if (y + 1 < k) b.cover(coord_name(x, y), coord_name(x, y + 1));
    }
  PointFamily f{b.build(), {}};
  f.weights.r = Rat(k);
  f.weights.w.assign(f.window.size(), 0);
  for (PointId p = 0; p < f.window.size(); ++p) {
    auto parts = split(
        f.window.name(p).substr(1, f.window.name(p).size() - 2), ',');
    long x = std::stol(parts[0]), y = std::stol(parts[1]);
    f.weights.w[p] = Rat(k + x - y);
  }
  return f;
}

PointFamily make_chain(int R) {
  PointPosetWindow::Builder b;
  b.max_rank(R);
  for (int i = 1; i <= R + 1; ++i) b.point("B" + std::to_string(i), i - 1);
  for (int i = 1; i <= R; ++i)
    b.cover("B" + std::to_string(i), "B" + std::to_string(i + 1));
  PointFamily f{b.build(), {}};
  f.weights.r = 1;
  f.weights.w.assign(f.window.size(), 0);
  for (PointId p = 0; p < f.window.size(); ++p)
    f.weights.w[p] = Rat(f.window.rank(p) + 1);
  return f;
}

GraphFamily make_z_chain(int H) {
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<GradedWeightedGraph::UpEdge>>> up;
  for (int i = -H; i <= H; ++i) {
    names.push_back({"z(" + std::to_string(i) + ")"});
    if (i < H)
      up.push_back({{{0, Rat(i)}}});
    else
      up.push_back({{}});
  }
  GraphFamily g{GradedWeightedGraph(-H, std::move(names), std::move(up)), 1,
                false};
  return g;
}

GraphFamily make_twos(const std::string& pattern, int H) {
  std::vector<int> blocks;  // 1 = edge, 2 = diamond
  for (std::size_t i = 0; i < pattern.size(); i += 2) {
    if (i + 1 >= pattern.size() || (pattern[i] != 'B' && pattern[i] != 'b') ||
        (pattern[i + 1] != '1' && pattern[i + 1] != '2'))
      throw UnsupportedSpec("twos pattern uses blocks B1 and B2");
    blocks.push_back(pattern[i + 1] - '0');
  }
  if (blocks.empty()) throw UnsupportedSpec("twos pattern is empty");

  // Stack blocks from rank -H upward until the window is covered.
  struct Level {
    std::vector<std::string> names;
  };
  std::vector<Level> levels;
  levels.push_back({{"j0"}});
  std::vector<std::vector<std::vector<std::size_t>>> edges;  // topology only
  int joint = 0;
  std::size_t bi = 0;
  while (static_cast<int>(levels.size()) <= 2 * H) {
    int block = blocks[bi % blocks.size()];
    ++bi;
    ++joint;
    if (block == 1) {
      edges.push_back({{0}});
      levels.push_back({{"j" + std::to_string(joint)}});
    } else {
      std::string tag = std::to_string(joint);
      edges.push_back({{0, 1}});
      levels.push_back({{"m" + tag + "a", "m" + tag + "b"}});
      edges.push_back({{0}, {0}});
      levels.push_back({{"j" + std::to_string(joint)}});
    }
  }
  edges.push_back(std::vector<std::vector<std::size_t>>(
      levels.back().names.size()));

  // Edge weights from per-element balance at r = 0 plus equal weights on
  // the projective sides of each diamond, normalized to minimum 1.
  LinearSystem sys;
  std::vector<std::vector<std::vector<std::size_t>>> evar(levels.size());
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    evar[l].resize(levels[l].names.size());
    for (std::size_t i = 0; i < edges[l].size(); ++i)
      for (std::size_t t : edges[l][i])
        evar[l][i].push_back(sys.add_variable(
            "e:" + levels[l].names[i] + ">" + levels[l + 1].names[t]));
  }
  for (std::size_t l = 1; l + 1 < levels.size(); ++l)
    for (std::size_t i = 0; i < levels[l].names.size(); ++i) {
      LinearRow row;
      row.label = "balance@" + levels[l].names[i];
      for (std::size_t v : evar[l][i]) row.coeffs[v] += 1;
      for (std::size_t below = 0; below < edges[l - 1].size(); ++below)
        for (std::size_t k = 0; k < edges[l - 1][below].size(); ++k)
          if (edges[l - 1][below][k] == i)
            row.coeffs[evar[l - 1][below][k]] -= 1;
      sys.rows.push_back(std::move(row));
    }
  for (std::size_t l = 0; l + 2 < levels.size(); ++l) {
    if (levels[l + 1].names.size() != 2) continue;
    // diamond between two joints: lower-left pairs with upper-right
    LinearRow r1, r2;
    r1.label = "proj@" + levels[l + 1].names[0];
    r1.coeffs[evar[l][0][0]] += 1;
    r1.coeffs[evar[l + 1][1][0]] -= 1;
    r2.label = "proj@" + levels[l + 1].names[1];
    r2.coeffs[evar[l][0][1]] += 1;
    r2.coeffs[evar[l + 1][0][0]] -= 1;
    sys.rows.push_back(std::move(r1));
    sys.rows.push_back(std::move(r2));
  }
  AffineSolutionSpace space = solve(sys);
  if (space.dimension() != 1)
    throw FominError("twos edge system is not one-dimensional");
  std::vector<Rat> w = space.basis[0];
  bool neg = std::all_of(w.begin(), w.end(), [](const Rat& x) { return x <= 0; });
  if (neg)
    for (auto& x : w) x = -x;
  Rat mn;
  bool first = true;
  for (const Rat& x : w) {
    if (x <= 0) throw FominError("twos edge ray is not positive");
    if (first || x < mn) mn = x;
    first = false;
  }
  for (auto& x : w) {
    x /= mn;
    x.canonicalize();
  }

  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<GradedWeightedGraph::UpEdge>>> up;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    names.push_back(levels[l].names);
    up.emplace_back(levels[l].names.size());
    if (l + 1 >= levels.size()) continue;
    for (std::size_t i = 0; i < edges[l].size(); ++i)
      for (std::size_t k = 0; k < edges[l][i].size(); ++k)
        up[l][i].push_back({edges[l][i][k], w[evar[l][i][k]]});
  }
  return {GradedWeightedGraph(-H, std::move(names), std::move(up)), 0, false};
}

// Young-Fibonacci words over {1,2}; a word is covered by the results of
// inserting a 1 anywhere in its leading run of 2s or turning its first 1
// into a 2.
GraphFamily make_yf1(int R) {
  std::vector<std::vector<std::string>> names(R + 1);
  names[0].push_back("-");  // the empty word
  for (int n = 1; n <= R; ++n) {
    std::set<std::string> level;
    for (const std::string& v : names[n - 1]) {
      std::string word = v == "-" ? "" : v;
      std::size_t run = 0;
      while (run < word.size() && word[run] == '2') ++run;
      for (std::size_t i = 0; i <= run; ++i)
        level.insert(word.substr(0, i) + "1" + word.substr(i));
      if (n >= 2 && run < word.size())
        level.insert(word.substr(0, run) + "2" + word.substr(run + 1));
    }
    names[n].assign(level.begin(), level.end());
  }
  std::vector<std::vector<std::vector<GradedWeightedGraph::UpEdge>>> up(
      R + 1);
  for (int n = 0; n <= R; ++n) up[n].resize(names[n].size());
  for (int n = 0; n < R; ++n) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names[n + 1].size(); ++i)
      idx[names[n + 1][i]] = i;
    for (std::size_t i = 0; i < names[n].size(); ++i) {
      std::string word = names[n][i] == "-" ? "" : names[n][i];
      std::size_t run = 0;
      while (run < word.size() && word[run] == '2') ++run;
      std::set<std::string> ups;
      for (std::size_t j = 0; j <= run; ++j)
        ups.insert(word.substr(0, j) + "1" + word.substr(j));
      if (run < word.size())
        ups.insert(word.substr(0, run) + "2" + word.substr(run + 1));
      for (const std::string& u : ups) up[n][i].push_back({idx.at(u), 1});
    }
  }
  return {GradedWeightedGraph(0, std::move(names), std::move(up)), 1, true};
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text, int max_rank) {
  auto parts = split(text, ':');
  if (parts.empty()) throw UnsupportedSpec("empty family");
  FamilySpec spec;
  spec.max_rank = max_rank;
  const std::string& head = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw UnsupportedSpec("family " + head + " takes " + std::to_string(n) +
                            " parameter(s)");
  };
  if (head == "quadrant") {
    spec.kind = FamilySpec::Kind::quadrant;
  } else if (head == "octant") {
    spec.kind = FamilySpec::Kind::octant;
  } else if (head == "strip") {
    arity(1);
    spec.kind = FamilySpec::Kind::strip;
    spec.k = std::stol(parts[1]);
  } else if (head == "chain") {
    spec.kind = FamilySpec::Kind::chain;
  } else if (head == "z-chain") {
    spec.kind = FamilySpec::Kind::z_chain;
  } else if (head == "twos") {
    arity(1);
    spec.kind = FamilySpec::Kind::twos;
    spec.pattern = parts[1];
  } else if (head == "yf1") {
    spec.kind = FamilySpec::Kind::yf1;
  } else if (head == "product") {
    arity(2);
    spec.kind = FamilySpec::Kind::product;
    spec.factors.push_back(parse_family_spec(parts[1], max_rank));
    spec.factors.push_back(parse_family_spec(parts[2], max_rank));
  } else if (head == "scaled") {
    arity(2);
    spec.kind = FamilySpec::Kind::scaled;
    spec.factors.push_back(parse_family_spec(parts[1], max_rank));
    spec.factor = parse_rat(parts[2]);
  } else if (head == "custom") {
    arity(1);
    spec.kind = FamilySpec::Kind::custom;
    spec.path = parts[1];
  } else {
    throw UnsupportedSpec("unknown family: " + head);
  }
  return spec;
}

PointFamily make_point_poset(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::quadrant:
      return make_quadrant(spec.max_rank);
    case FamilySpec::Kind::octant:
      return make_octant(spec.max_rank);
    case FamilySpec::Kind::strip:
      return make_strip(spec.k, spec.max_rank);
    case FamilySpec::Kind::chain:
      return make_chain(spec.max_rank);
    case FamilySpec::Kind::product:
      return product(make_point_poset(spec.factors[0]),
                     make_point_poset(spec.factors[1]));
    case FamilySpec::Kind::scaled:
      return scale(make_point_poset(spec.factors[0]), spec.factor);
    default:
      throw UnsupportedSpec("family has no point-poset presentation");
  }
}

GraphFamily make_graded_graph(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::z_chain:
      return make_z_chain(spec.max_rank);
    case FamilySpec::Kind::twos:
      return make_twos(spec.pattern, spec.max_rank);
    case FamilySpec::Kind::yf1:
      return make_yf1(spec.max_rank);
    default: {
      PointFamily f = make_point_poset(spec);
      GraphFamily g;
      g.r = f.weights.r;
      g.positive = f.weights.positive();
      g.graph = graph_from_ideals(f.window, f.weights, spec.max_rank);
      return g;
    }
  }
}

PointFamily product(const PointFamily& a, const PointFamily& b) {
  int R = std::min(a.window.max_rank(), b.window.max_rank());
  int cb = std::min(a.window.complete_below(), b.window.complete_below());
  PointPosetWindow::Builder bld;
  bld.max_rank(R).complete_below(cb);
  std::map<std::string, Rat> w;
  auto add = [&](const PointFamily& f, const std::string& tag) {
    for (PointId p = 0; p < f.window.size(); ++p) {
      if (f.window.rank(p) > R) continue;
      bld.point(tag + f.window.name(p), f.window.rank(p));
      w[tag + f.window.name(p)] = f.weights.at(p);
    }
    for (PointId p = 0; p < f.window.size(); ++p) {
      if (f.window.rank(p) >= R) continue;
      for (PointId q : f.window.up_covers(p))
        if (f.window.rank(q) <= R)
          bld.cover(tag + f.window.name(p), tag + f.window.name(q));
    }
  };
  add(a, "L:");
  add(b, "R:");
  PointFamily out{bld.build(), {}};
  out.weights.r = a.weights.r + b.weights.r;
  out.weights.w.assign(out.window.size(), 0);
  for (PointId p = 0; p < out.window.size(); ++p)
    out.weights.w[p] = w.at(out.window.name(p));
  return out;
}

std::vector<PointFamily> factor(const PointFamily& f) {
  Rat minimal_sum = 0;
  for (PointId z : f.window.minimal_points()) minimal_sum += f.weights.at(z);
  if (minimal_sum != f.weights.r)
    throw NotDifferential("minimal-point identity fails; cannot factor");
  std::vector<PointFamily> out;
  for (PointPosetWindow& comp : connected_components(f.window)) {
    PointFamily g{std::move(comp), {}};
    g.weights.w.assign(g.window.size(), 0);
    for (PointId p = 0; p < g.window.size(); ++p)
      g.weights.w[p] = f.weights.at(f.window.require(g.window.name(p)));
    g.weights.r = 0;
    for (PointId z : g.window.minimal_points())
      g.weights.r += g.weights.at(z);
    out.push_back(std::move(g));
  }
  return out;
}

PointFamily scale(PointFamily f, const Rat& k) {
  f.weights.r *= k;
  f.weights.r.canonicalize();
  for (Rat& x : f.weights.w) {
    x *= k;
    x.canonicalize();
  }
  return f;
}

PointFamily truncate_points(const PointFamily& f) {
  std::vector<bool> keep(f.window.size(), true);
  for (PointId z = 0; z < f.window.size(); ++z) {
    if (f.weights.at(z) != 0) continue;
    for (PointId p = 0; p < f.window.size(); ++p)
      if (f.window.leq(z, p)) keep[p] = false;
  }
  PointFamily out;
  out.window = restrict_window(f.window, keep, f.window.max_rank(),
                               f.window.complete_below());
  out.weights.r = f.weights.r;
  out.weights.w.assign(out.window.size(), 0);
  for (PointId p = 0; p < out.window.size(); ++p)
    out.weights.w[p] = f.weights.at(f.window.require(out.window.name(p)));
  return out;
}

bool sim_equivalent(const PointPosetWindow& P, const WeightScheme& w,
                    const Diagram& x, const Diagram& y) {
  Diagram join = diagram_union(x, y);
  Diagram meet = diagram_intersection(x, y);
  for (PointId p : join.points)
    if (!meet.contains(p) && w.at(p) == 0) return false;
  return true;
}

CheckReport truncate_lattice_check(const PointFamily& f, int n_max) {
  CheckReport rep;
  IdealLattice lat = enumerate_ideals(f.window, n_max);

  // Block of the empty ideal, following only nonzero-weight covers.
  std::set<std::pair<std::size_t, std::size_t>> block;
  block.insert({0, 0});
  for (std::size_t s = 0; s + 1 < lat.num_levels(); ++s)
    for (std::size_t i = 0; i < lat.level(s).size(); ++i) {
      if (!block.count({s, i})) continue;
      for (const IdealLattice::Edge& e : lat.up_edges(s, i))
        if (f.weights.at(e.added) != 0) block.insert({s + 1, e.upper});
    }

  PointFamily trunc = truncate_points(f);
  IdealLattice tlat = enumerate_ideals(trunc.window, n_max);

  std::set<std::vector<std::string>> block_names, trunc_names;
  for (auto& [s, i] : block) {
    std::vector<std::string> names;
    for (PointId p : lat.level(s)[i].points) names.push_back(f.window.name(p));
    block_names.insert(std::move(names));
  }
  for (std::size_t s = 0; s < tlat.num_levels(); ++s)
    for (const Diagram& x : tlat.level(s)) {
      std::vector<std::string> names;
      for (PointId p : x.points) names.push_back(trunc.window.name(p));
      trunc_names.insert(std::move(names));
    }
  if (block_names != trunc_names)
    rep.fail("zero-hat block vs ideals of truncated points",
             Rat(static_cast<long>(block_names.size())),
             Rat(static_cast<long>(trunc_names.size())));

  CheckReport diff = check_global(trunc.window, trunc.weights, n_max);
  if (!diff.holds) {
    rep.holds = false;
    for (auto& fail : diff.failures)
      rep.failures.push_back(
          {"truncation differential: " + fail.site, fail.lhs, fail.rhs});
  }

  bool admissible = true;
  for (PointId p = 0; p < f.window.size(); ++p) {
    if (f.weights.at(p) >= 0) continue;
    bool has_zero_ancestor = false;
    for (PointId z = 0; z < f.window.size(); ++z)
      if (f.weights.at(z) == 0 && f.window.leq(z, p)) has_zero_ancestor = true;
    if (!has_zero_ancestor) admissible = false;
  }
  if (admissible && f.weights.r > 0 && !trunc.weights.positive())
    rep.fail("admissible truncation should be positive", 0, 1);
  return rep;
}

}  // namespace fomin
