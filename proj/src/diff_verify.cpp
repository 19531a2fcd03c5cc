#include "fomin/diff_verify.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace fomin {

namespace {

Rat sum_weights(const WeightScheme& w, const std::vector<PointId>& pts) {
  Rat s = 0;
  for (PointId p : pts) s += w.at(p);
  return s;
}

template <typename F>
void parallel_over(std::size_t n, int threads, F&& f) {
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::size_t nt = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += nt) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Neighborhood local_neighborhood(const PointPosetWindow& P, PointId p) {
  Neighborhood nb;
  nb.center = p;
  nb.c_minus = P.down_covers(p);
  nb.c_plus = P.up_covers(p);
  std::set<PointId> sib;
  for (PointId a : nb.c_minus)
    for (PointId m : P.up_covers(a))
      if (m != p)
        for (PointId b : nb.c_plus)
          if (P.leq(m, b)) sib.insert(m);
  nb.siblings.assign(sib.begin(), sib.end());
  for (PointId m : nb.siblings) {
    std::vector<PointId> lo, hi;
    for (PointId a : nb.c_minus)
      if (P.leq(a, m)) lo.push_back(a);
    for (PointId b : nb.c_plus)
      if (P.leq(m, b)) hi.push_back(b);
    if (lo.size() != 1 || hi.size() != 1)
      throw NonUniquePartner("sibling " + P.name(m) + " of " + P.name(p) +
                             " has no unique partner pair");
    nb.pairing[m] = {lo[0], hi[0]};
  }
  return nb;
}

bool is_upward_orphan(const PointPosetWindow& P, const Neighborhood& nb,
                      PointId b) {
  for (PointId z : P.down_covers(b))
    if (std::binary_search(nb.siblings.begin(), nb.siblings.end(), z))
      return false;
  return true;
}

bool is_downward_orphan(const PointPosetWindow& P, const Neighborhood& nb,
                        PointId a) {
  for (PointId z : P.up_covers(a))
    if (std::binary_search(nb.siblings.begin(), nb.siblings.end(), z))
      return false;
  return true;
}

CheckReport check_global(const PointPosetWindow& P, const WeightScheme& w,
                         int n_max, int threads) {
  IdealLattice lat = enumerate_ideals(P, n_max);
  CheckReport rep;
  for (std::size_t s = 0; s < lat.num_levels(); ++s) {
    const auto& level = lat.level(s);
    std::vector<std::optional<FailureSite>> out(level.size());
    parallel_over(level.size(), threads, [&](std::size_t i) {
      const Diagram& x = level[i];
      Rat lhs = sum_weights(w, deletion_points(P, x)) + w.r;
      Rat rhs = sum_weights(w, insertion_points(P, x));
      if (lhs != rhs) out[i] = FailureSite{diagram_name(P, x), lhs, rhs};
    });
    for (auto& f : out)
      if (f) {
        rep.holds = false;
        rep.failures.push_back(std::move(*f));
      }
  }
  return rep;
}

CheckReport check_incremental(const PointPosetWindow& P, const WeightScheme& w,
                              const Diagram& x, PointId p) {
  auto ins = insertion_points(P, x);
  if (!std::binary_search(ins.begin(), ins.end(), p))
    throw NotInsertionPoint(P.name(p) + " is not an insertion point");
  Diagram xp = diagram_union(x, Diagram{{p}});
  auto del_x = deletion_points(P, x);
  auto del_xp = deletion_points(P, xp);
  auto ins_xp = insertion_points(P, xp);
  auto minus = [](const std::vector<PointId>& a, const std::vector<PointId>& b) {
    std::vector<PointId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
  };
  Rat lhs = sum_weights(w, minus(del_xp, del_x)) -
            sum_weights(w, minus(del_x, del_xp));
  Rat rhs = sum_weights(w, minus(ins_xp, ins)) -
            sum_weights(w, minus(ins, ins_xp));
  CheckReport rep;
  if (lhs != rhs)
    rep.fail(diagram_name(P, x) + " + " + P.name(p), lhs, rhs);
  return rep;
}

CheckReport check_partition_equation(const PointPosetWindow& P,
                                     const WeightScheme& w, PointId p,
                                     const std::vector<PointId>& t_minus,
                                     const std::vector<PointId>& t_plus) {
  Neighborhood nb = local_neighborhood(P, p);
  std::vector<PointId> both;
  both.insert(both.end(), t_minus.begin(), t_minus.end());
  both.insert(both.end(), t_plus.begin(), t_plus.end());
  std::sort(both.begin(), both.end());
  if (both.size() != nb.siblings.size() ||
      !std::equal(both.begin(), both.end(), nb.siblings.begin()))
    throw BadPartition("T- and T+ do not partition the siblings of " +
                       P.name(p));
  for (PointId lo : t_minus)
    for (PointId hi : t_plus)
      if (P.leq(hi, lo))
        throw BadPartition("T- is not an ideal of the siblings");

  Rat lhs = 0;
  for (PointId a : nb.c_minus) {
    bool below = false;
    for (PointId t : t_minus)
      if (P.leq(a, t)) below = true;
    if (!below) lhs += w.at(a);
  }
  for (PointId b : nb.c_plus) {
    bool above = false;
    for (PointId t : t_plus)
      if (P.leq(t, b)) above = true;
    if (!above) lhs += w.at(b);
  }
  Rat rhs = 2 * w.at(p);
  CheckReport rep;
  if (lhs != rhs) rep.fail(P.name(p), lhs, rhs);
  return rep;
}

CheckReport check_local(const PointPosetWindow& P, const WeightScheme& w,
                        OrphanMode mode) {
  CheckReport rep;

  Rat minimal_sum = 0;
  for (PointId z : P.minimal_points()) {
    minimal_sum += w.at(z);
    if (P.rank(z) > P.complete_below())
      rep.skipped.push_back(P.name(z) + " (minimality unreliable)");
  }
  if (!P.empty() && minimal_sum != w.r)
    rep.fail("minimal-point identity", minimal_sum, w.r);

  for (PointId p = 0; p < P.size(); ++p) {
    if (!P.interior(p)) {
      rep.skipped.push_back(P.name(p));
      continue;
    }
    Neighborhood nb = local_neighborhood(P, p);

    Rat lhs = 0;
    if (mode == OrphanMode::join) {
      for (PointId a : nb.c_minus) lhs += w.at(a);
      for (PointId b : nb.c_plus)
        if (is_upward_orphan(P, nb, b)) lhs += w.at(b);
    } else {
      for (PointId a : nb.c_minus)
        if (is_downward_orphan(P, nb, a)) lhs += w.at(a);
      for (PointId b : nb.c_plus) lhs += w.at(b);
    }
    Rat rhs = 2 * w.at(p);
    if (lhs != rhs) rep.fail("orphan equation at " + P.name(p), lhs, rhs);

    std::set<PointId> lows, highs;
    for (auto& [m, pr] : nb.pairing) {
      if (!lows.insert(pr.first).second || !highs.insert(pr.second).second)
        rep.fail("sibling pairing at " + P.name(p) + " is not injective", 0,
                 0);
      if (w.at(pr.first) != w.at(pr.second))
        rep.fail("pair weights at " + P.name(p) + " via " + P.name(m),
                 w.at(pr.first), w.at(pr.second));
    }
  }
  return rep;
}

CheckReport check_graded_graph(const GradedWeightedGraph& G, const Rat& r,
                               const std::vector<int>* ranks) {
  CheckReport rep;
  auto interior = [&](int rank) {
    if (ranks)
      return std::find(ranks->begin(), ranks->end(), rank) != ranks->end();
    bool lo_ok = G.zero_hat() ? rank >= G.min_rank() : rank > G.min_rank();
    return lo_ok && rank < G.max_rank();
  };
  for (int l = 0; l < static_cast<int>(G.num_levels()); ++l) {
    int rank = G.min_rank() + l;
    if (!interior(rank)) continue;
    for (std::size_t i = 0; i < G.level_size(l); ++i) {
      GElem e{l, i};
      Rat lhs = G.up_weight(e) - G.down_weight(e);
      if (lhs != r) rep.fail(G.name(e), lhs, r);
    }
  }
  return rep;
}

}  // namespace fomin
