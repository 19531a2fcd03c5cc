#include "fomin/growth.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fomin/errors.hpp"

namespace fomin {

namespace {

long edge_multiplicity(const Rat& w) {
  if (!is_integer(w) || w <= 0)
    throw CardinalityMismatch("edge weights must be positive integers");
  return w.get_num().get_si();
}

// Domain layout at x: colored down-edge copies by (lower, copy), then
// the symbols 1..r.  Codomain: colored up-edge copies by (upper, copy).
long domain_size(const GradedWeightedGraph& G, GElem x, long r) {
  long n = r;
  for (const auto& d : G.down(x)) n += edge_multiplicity(d.weight);
  return n;
}

long codomain_size(const GradedWeightedGraph& G, GElem x) {
  long n = 0;
  for (const auto& u : G.up(x)) n += edge_multiplicity(u.weight);
  return n;
}

std::size_t domain_pos_of_down(const GradedWeightedGraph& G, GElem x,
                               std::size_t lower, long copy) {
  std::size_t pos = 0;
  for (const auto& d : G.down(x)) {
    long mult = edge_multiplicity(d.weight);
    if (d.lower == lower) {
      if (copy < 1 || copy > mult)
        throw InvalidColoring("copy index outside the edge weight");
      return pos + static_cast<std::size_t>(copy - 1);
    }
    pos += static_cast<std::size_t>(mult);
  }
  throw FominError("no such down edge");
}

std::size_t codomain_pos_of_up(const GradedWeightedGraph& G, GElem x,
                               std::size_t upper, long copy) {
  std::size_t pos = 0;
  for (const auto& u : G.up(x)) {
    long mult = edge_multiplicity(u.weight);
    if (u.upper == upper) {
      if (copy < 1 || copy > mult)
        throw InvalidColoring("copy index outside the edge weight");
      return pos + static_cast<std::size_t>(copy - 1);
    }
    pos += static_cast<std::size_t>(mult);
  }
  throw FominError("no such up edge");
}

struct UpItem {
  std::size_t upper;
  long copy;
};

UpItem up_item_at(const GradedWeightedGraph& G, GElem x, std::size_t pos) {
  for (const auto& u : G.up(x)) {
    long mult = edge_multiplicity(u.weight);
    if (pos < static_cast<std::size_t>(mult))
      return {u.upper, static_cast<long>(pos) + 1};
    pos -= static_cast<std::size_t>(mult);
  }
  throw FominError("codomain position out of range");
}

struct DomItem {
  bool symbol;       // true: one of 1..r
  long value;        // the symbol
  std::size_t lower;  // or the down edge
  long copy;
};

DomItem domain_item_at(const GradedWeightedGraph& G, GElem x, long r,
                       std::size_t pos) {
  for (const auto& d : G.down(x)) {
    long mult = edge_multiplicity(d.weight);
    if (pos < static_cast<std::size_t>(mult))
      return {false, 0, d.lower, static_cast<long>(pos) + 1};
    pos -= static_cast<std::size_t>(mult);
  }
  if (pos < static_cast<std::size_t>(r))
    return {true, static_cast<long>(pos) + 1, 0, 0};
  throw FominError("domain position out of range");
}

std::optional<GradedWeightedGraph::UpEdge> up_edge_to(
    const GradedWeightedGraph& G, GElem x, std::size_t upper) {
  for (const auto& u : G.up(x))
    if (u.upper == upper) return u;
  return std::nullopt;
}

}  // namespace

McLarnanMap canonical_mclarnan(const GradedWeightedGraph& G, long r) {
  if (r < 0) throw CardinalityMismatch("negative differential degree");
  McLarnanMap M;
  M.r = r;
  M.table.resize(G.num_levels());
  for (int l = 0; l < static_cast<int>(G.num_levels()); ++l) {
    M.table[l].resize(G.level_size(l));
    bool top = l + 1 == static_cast<int>(G.num_levels());
    if (top) continue;  // up-edges clipped by the window: leave empty
    for (std::size_t i = 0; i < G.level_size(l); ++i) {
      GElem x{l, i};
      long dom = domain_size(G, x, r), cod = codomain_size(G, x);
      if (dom != cod)
        throw CardinalityMismatch("at " + G.name(x) + ": " +
                                  std::to_string(dom) + " vs " +
                                  std::to_string(cod));
      M.table[l][i].resize(static_cast<std::size_t>(dom));
      std::iota(M.table[l][i].begin(), M.table[l][i].end(), 0);
    }
  }
  return M;
}

namespace {

struct Grid {
  int n;
  std::vector<GElem> elem;     // (n+1)^2 corners
  std::vector<long> vcolor;    // color of (i,j)->(i,j+1), 0 when equal
  GElem& at(int i, int j) { return elem[i * (n + 1) + j]; }
  long& vc(int i, int j) { return vcolor[i * (n + 1) + j]; }
};

}  // namespace

RskResult rsk_forward(const GradedWeightedGraph& G, const McLarnanMap& M,
                      const ColoredPermutation& sigma) {
  auto zh = G.zero_hat();
  if (!zh) throw FominError("growth needs a minimum element");
  int n = static_cast<int>(sigma.size());
  if (n >= static_cast<int>(G.num_levels()))
    throw WindowTooShallow("graph has too few levels for this size");
  {
    std::vector<bool> seen(n + 1, false);
    if (sigma.colors.size() != sigma.perm.size())
      throw InvalidColoring("color list does not match the permutation");
    for (long v : sigma.perm) {
      if (v < 1 || v > n || seen[v]) throw FominError("not a permutation");
      seen[v] = true;
    }
    for (long c : sigma.colors)
      if (c < 1 || c > M.r) throw InvalidColoring("color out of range");
  }

  Grid g;
  g.n = n;
  g.elem.assign((n + 1) * (n + 1), *zh);
  g.vcolor.assign((n + 1) * (n + 1), 0);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GElem A = g.at(i - 1, j - 1), B = g.at(i, j - 1), C = g.at(i - 1, j);
      long vin = g.vc(i - 1, j - 1);
      long mark = sigma.perm[i - 1] == j ? sigma.colors[i - 1] : 0;
      GElem D;
      long vout = 0;
      if (A == B && A == C) {
        if (mark == 0) {
          D = A;
        } else {
          std::size_t pos = M.table[A.level][A.idx].at(
              domain_size(G, A, M.r) - M.r + mark - 1);
          UpItem out = up_item_at(G, A, pos);
          D = GElem{A.level + 1, out.upper};
          vout = out.copy;
        }
      } else if (A == B) {  // colored step passes through
        D = C;
        vout = vin;
      } else if (A == C) {  // plain step passes through
        D = B;
      } else if (B == C) {  // apply the bijection to the down edge
        std::size_t pos = M.table[B.level][B.idx].at(
            domain_pos_of_down(G, B, A.idx, vin));
        UpItem out = up_item_at(G, B, pos);
        D = GElem{B.level + 1, out.upper};
        vout = out.copy;
      } else {  // the join completes the square, color carried across
        std::vector<std::size_t> joins;
        for (const auto& u : G.up(B))
          if (up_edge_to(G, C, u.upper)) joins.push_back(u.upper);
        if (joins.size() != 1)
          throw FominError("no unique join over " + G.name(B) + ", " +
                           G.name(C));
        D = GElem{B.level + 1, joins[0]};
        vout = vin;
        auto e = up_edge_to(G, B, D.idx);
        if (vout > edge_multiplicity(e->weight))
          throw InvalidColoring("carried color exceeds the parallel weight");
      }
      g.at(i, j) = D;
      g.vc(i, j - 1) = vout;
    }

  RskResult res;
  for (int j = 0; j <= n; ++j) {
    res.P.chain.push_back(g.at(n, j));
    if (j < n) res.P.edge_colors.push_back(g.vc(n, j));
  }
  for (int i = 0; i <= n; ++i) res.Q.chain.push_back(g.at(i, n));
  res.shape = g.at(n, n);
  return res;
}

ColoredPermutation rsk_inverse(const GradedWeightedGraph& G,
                               const McLarnanMap& M, const PathTableau& P,
                               const PathTableau& Q) {
  auto zh = G.zero_hat();
  if (!zh) throw FominError("growth needs a minimum element");
  if (P.chain.size() != Q.chain.size() || P.chain.empty())
    throw ShapeMismatch("path lengths differ");
  int n = static_cast<int>(P.chain.size()) - 1;
  if (P.chain.back() != Q.chain.back())
    throw ShapeMismatch("paths end at different shapes");
  if (P.chain.front() != *zh || Q.chain.front() != *zh)
    throw ShapeMismatch("paths must start at the minimum");
  if (P.edge_colors.size() != static_cast<std::size_t>(n))
    throw InvalidColoring("path needs one color per step");
  for (int j = 0; j < n; ++j) {
    auto e = up_edge_to(G, P.chain[j], P.chain[j + 1].idx);
    if (P.chain[j + 1].level != P.chain[j].level + 1 || !e)
      throw ShapeMismatch("left path is not a cover chain");
    if (P.edge_colors[j] < 1 ||
        P.edge_colors[j] > edge_multiplicity(e->weight))
      throw InvalidColoring("path color outside the edge weight");
  }
  for (int i = 0; i < n; ++i) {
    auto e = up_edge_to(G, Q.chain[i], Q.chain[i + 1].idx);
    if (Q.chain[i + 1].level != Q.chain[i].level + 1 || !e)
      throw ShapeMismatch("right path is not a cover chain");
  }

  Grid g;
  g.n = n;
  g.elem.assign((n + 1) * (n + 1), *zh);
  g.vcolor.assign((n + 1) * (n + 1), 0);
  for (int j = 0; j <= n; ++j) {
    g.at(n, j) = P.chain[j];
    if (j < n) g.vc(n, j) = P.edge_colors[j];
  }
  for (int i = 0; i <= n; ++i) g.at(i, n) = Q.chain[i];

  ColoredPermutation sigma;
  sigma.perm.assign(n, 0);
  sigma.colors.assign(n, 0);

  for (int j = n; j >= 1; --j)
    for (int i = n; i >= 1; --i) {
      GElem B = g.at(i, j - 1), C = g.at(i - 1, j), D = g.at(i, j);
      long vout = g.vc(i, j - 1);
      GElem A;
      long vin = 0, mark = 0;
      if (D == B && D == C) {
        A = D;
      } else if (D == C) {  // undo the pass-through of a colored step
        A = B;
        vin = vout;
      } else if (D == B) {
        A = C;
      } else if (B == C) {  // undo the bijection at B
        const auto& tab = M.table[B.level][B.idx];
        std::size_t cod = codomain_pos_of_up(G, B, D.idx, vout);
        std::size_t dom = std::find(tab.begin(), tab.end(), cod) - tab.begin();
        DomItem item = domain_item_at(G, B, M.r, dom);
        if (item.symbol) {
          A = B;
          mark = item.value;
        } else {
          A = GElem{B.level - 1, item.lower};
          vin = item.copy;
        }
      } else {  // undo the square: the meet is the unique common cocover
        std::vector<std::size_t> meets;
        for (const auto& d : G.down(B)) {
          GElem cand{B.level - 1, d.lower};
          for (const auto& d2 : G.down(C))
            if (d2.lower == d.lower) meets.push_back(d.lower);
        }
        if (meets.size() != 1)
          throw FominError("no unique meet under " + G.name(B) + ", " +
                           G.name(C));
        A = GElem{B.level - 1, meets[0]};
        vin = vout;
        auto e = up_edge_to(G, A, C.idx);
        if (!e || vin > edge_multiplicity(e->weight))
          throw InvalidColoring("carried color exceeds the parallel weight");
      }
      g.at(i - 1, j - 1) = A;
      g.vc(i - 1, j - 1) = vin;
      if (mark > 0) {
        if (sigma.perm[i - 1] != 0)
          throw InvalidColoring("two marks in one column");
        sigma.perm[i - 1] = j;
        sigma.colors[i - 1] = mark;
      }
    }

  for (int i = 0; i <= n; ++i)
    if (g.at(i, 0) != *zh)
      throw InvalidColoring("bottom boundary did not close at the minimum");
  for (int j = 0; j <= n; ++j)
    if (g.at(0, j) != *zh)
      throw InvalidColoring("left boundary did not close at the minimum");
  for (int i = 0; i < n; ++i)
    if (sigma.perm[i] == 0)
      throw InvalidColoring("column " + std::to_string(i + 1) +
                            " has no mark");
  return sigma;
}

IdentityReport verify_identity(const GradedWeightedGraph& G, const Rat& r,
                               int n) {
  if (n < 0 || n >= static_cast<int>(G.num_levels()))
    throw WindowTooShallow("graph has fewer than n+1 levels");
  if (!G.zero_hat()) throw FominError("identity needs a minimum element");
  std::vector<std::vector<Int>> f(G.num_levels());
  std::vector<std::vector<Rat>> gw(G.num_levels());
  f[0].assign(1, 1);
  gw[0].assign(1, 1);
  for (int l = 0; l < n; ++l) {
    f[l + 1].assign(G.level_size(l + 1), 0);
    gw[l + 1].assign(G.level_size(l + 1), 0);
    for (std::size_t i = 0; i < G.level_size(l); ++i)
      for (const auto& u : G.up(GElem{l, i})) {
        f[l + 1][u.upper] += f[l][i];
        gw[l + 1][u.upper] += gw[l][i] * u.weight;
      }
  }
  IdentityReport rep;
  rep.n = n;
  Int fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  Rat rpow = 1;
  for (int k = 0; k < n; ++k) rpow *= r;
  rep.lhs = Rat(fact) * rpow;
  rep.lhs.canonicalize();
  rep.rhs = 0;
  for (std::size_t i = 0; i < G.level_size(n); ++i)
    rep.rhs += Rat(f[n][i]) * gw[n][i];
  rep.rhs.canonicalize();
  rep.match = rep.lhs == rep.rhs;
  return rep;
}

std::vector<ColoredPermutation> all_colored_permutations(int n, long r) {
  std::vector<ColoredPermutation> out;
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<long> colors(n, 1);
    for (;;) {
      out.push_back({perm, colors});
      int k = n - 1;
      while (k >= 0 && colors[k] == r) colors[k--] = 1;
      if (k < 0) break;
      ++colors[k];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace fomin
