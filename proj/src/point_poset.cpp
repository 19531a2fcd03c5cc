#include "fomin/point_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fomin {

std::optional<PointId> PointPosetWindow::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId PointPosetWindow::require(const std::string& name) const {
  auto p = find(name);
  if (!p) throw InvalidWindow("no such point: " + name);
  return *p;
}

std::vector<PointId> PointPosetWindow::minimal_points() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < size(); ++p)
    if (down_[p].empty()) out.push_back(p);
  return out;
}

std::vector<PointId> PointPosetWindow::points_of_rank(int r) const {
  std::vector<PointId> out;
  for (PointId p = 0; p < size(); ++p)
    if (ranks_[p] == r) out.push_back(p);
  return out;
}

PointPosetWindow::Builder& PointPosetWindow::Builder::point(
    const std::string& name, int rank) {
  points_.emplace_back(name, rank);
  return *this;
}

PointPosetWindow::Builder& PointPosetWindow::Builder::cover(
    const std::string& lower, const std::string& upper) {
  covers_.emplace_back(lower, upper);
  return *this;
}

PointPosetWindow PointPosetWindow::Builder::build() const {
  PointPosetWindow w;
  if (max_rank_ < 0) {
    int m = 0;
    for (auto& [n, r] : points_) m = std::max(m, r);
    w.max_rank_ = m;
  } else {
    w.max_rank_ = max_rank_;
  }
  w.complete_below_ = complete_below_.value_or(w.max_rank_);

  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (auto& [name, rank] : sorted) {
    if (rank < 0) throw InvalidWindow("negative rank: " + name);
    if (rank > w.max_rank_)
      throw InvalidWindow("rank above max_rank: " + name);
    if (w.index_.count(name)) throw InvalidWindow("duplicate point: " + name);
    w.index_[name] = static_cast<PointId>(w.names_.size());
    w.names_.push_back(name);
    w.ranks_.push_back(rank);
  }
  std::size_t n = w.names_.size();
  w.up_.resize(n);
  w.down_.resize(n);
  for (auto& [lo, hi] : covers_) {
    PointId a = w.require(lo), b = w.require(hi);
    if (w.ranks_[b] != w.ranks_[a] + 1)
      throw InvalidWindow("cover must raise rank by one: " + lo + " < " + hi);
    w.up_[a].push_back(b);
    w.down_[b].push_back(a);
  }
  for (auto& v : w.up_) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw InvalidWindow("duplicate cover");
  }
  for (auto& v : w.down_) std::sort(v.begin(), v.end());

  // leq by upward closure, one rank at a time (ids are rank-sorted).
  w.leq_.assign(n, std::vector<bool>(n, false));
  for (PointId p = 0; p < n; ++p) w.leq_[p][p] = true;
  for (PointId b = 0; b < n; ++b)
    for (PointId a : w.down_[b])
      for (PointId q = 0; q < n; ++q)
        if (w.leq_[q][a]) w.leq_[q][b] = true;
  return w;
}

namespace {

std::vector<PointId> common_ups(const PointPosetWindow& P, PointId a,
                                PointId b) {
  std::vector<PointId> out;
  std::set_intersection(P.up_covers(a).begin(), P.up_covers(a).end(),
                        P.up_covers(b).begin(), P.up_covers(b).end(),
                        std::back_inserter(out));
  return out;
}

std::vector<PointId> common_downs(const PointPosetWindow& P, PointId a,
                                  PointId b) {
  std::vector<PointId> out;
  std::set_intersection(P.down_covers(a).begin(), P.down_covers(a).end(),
                        P.down_covers(b).begin(), P.down_covers(b).end(),
                        std::back_inserter(out));
  return out;
}

// Pairs sharing a cocover or (visibly) a cover.  The bool marks whether
// the pair's own upward covers are fully visible in the window.
template <typename F>
void for_hypothesis_pairs(const PointPosetWindow& P, F&& f) {
  std::set<std::pair<PointId, PointId>> seen;
  auto emit = [&](PointId a, PointId b) {
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) {
      bool up_visible = P.rank(a) < P.max_rank() &&
                        P.rank(a) + 1 <= P.complete_below();
      f(a, b, up_visible);
    }
  };
  for (PointId z = 0; z < P.size(); ++z) {
    const auto& up = P.up_covers(z);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) emit(up[i], up[j]);
    const auto& dn = P.down_covers(z);
    for (std::size_t i = 0; i < dn.size(); ++i)
      for (std::size_t j = i + 1; j < dn.size(); ++j) emit(dn[i], dn[j]);
  }
}

}  // namespace

ModularityReport check_cover_modular(const PointPosetWindow& P) {
  ModularityReport rep;
  for_hypothesis_pairs(P, [&](PointId a, PointId b, bool up_visible) {
    auto downs = common_downs(P, a, b);
    auto ups = common_ups(P, a, b);
    if (downs.empty()) {
      rep.holds = false;
      rep.witnesses.push_back({a, b, "no common cocover"});
    }
    if (ups.empty() && up_visible) {
      rep.holds = false;
      rep.witnesses.push_back({a, b, "no common cover"});
    }
  });
  return rep;
}

ModularityReport check_unique_cover_modular(const PointPosetWindow& P) {
  ModularityReport rep;
  for_hypothesis_pairs(P, [&](PointId a, PointId b, bool up_visible) {
    auto downs = common_downs(P, a, b);
    auto ups = common_ups(P, a, b);
    if (downs.size() != 1) {
      rep.holds = false;
      rep.witnesses.push_back(
          {a, b, downs.empty() ? "no common cocover" : "two common cocovers"});
    }
    if (ups.size() > 1 || (ups.empty() && up_visible)) {
      rep.holds = false;
      rep.witnesses.push_back(
          {a, b, ups.empty() ? "no common cover" : "two common covers"});
    }
  });
  return rep;
}

Neighborhood neighborhood(const PointPosetWindow& P, PointId p) {
  if (!(P.rank(p) + 1 < P.max_rank()))
    throw NeighborhoodNotVisible("neighborhood of " + P.name(p) +
                                 " is clipped by the window");
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

int neighborhood_row(const Neighborhood& nb) {
  static const int table[][3] = {
      // |C+| |C-| |S|
      {0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {1, 0, 0}, {1, 1, 0},
      {1, 1, 1}, {1, 2, 0}, {1, 2, 1}, {2, 0, 0}, {2, 1, 0},
      {2, 1, 1}, {2, 2, 0}, {2, 2, 1}, {2, 2, 2},
  };
  int cp = static_cast<int>(nb.c_plus.size());
  int cm = static_cast<int>(nb.c_minus.size());
  int s = static_cast<int>(nb.siblings.size());
  for (std::size_t i = 0; i < std::size(table); ++i)
    if (table[i][0] == cp && table[i][1] == cm && table[i][2] == s)
      return static_cast<int>(i) + 1;
  throw FominError("neighborhood shape (" + std::to_string(cp) + "," +
                   std::to_string(cm) + "," + std::to_string(s) +
                   ") is not a realizable row");
}

std::vector<PointPosetWindow> connected_components(const PointPosetWindow& P) {
  std::size_t n = P.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (PointId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<PointId> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      PointId p = stack.back();
      stack.pop_back();
      for (auto& nbrs : {P.up_covers(p), P.down_covers(p)})
        for (PointId q : nbrs)
          if (comp[q] < 0) {
            comp[q] = ncomp;
            stack.push_back(q);
          }
    }
    ++ncomp;
  }
  std::vector<PointPosetWindow> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<bool> keep(n, false);
    for (PointId p = 0; p < n; ++p) keep[p] = comp[p] == c;
    out.push_back(
        restrict_window(P, keep, P.max_rank(), P.complete_below()));
  }
  return out;
}

PointPosetWindow restrict_window(const PointPosetWindow& P,
                                 const std::vector<bool>& keep, int max_rank,
                                 int complete_below) {
  PointPosetWindow::Builder b;
  b.max_rank(max_rank).complete_below(complete_below);
  for (PointId p = 0; p < P.size(); ++p)
    if (keep[p] && P.rank(p) <= max_rank) b.point(P.name(p), P.rank(p));
  for (PointId p = 0; p < P.size(); ++p) {
    if (!keep[p] || P.rank(p) > max_rank) continue;
    for (PointId q : P.up_covers(p))
      if (keep[q] && P.rank(q) <= max_rank) b.cover(P.name(p), P.name(q));
  }
  return b.build();
}

}  // namespace fomin
