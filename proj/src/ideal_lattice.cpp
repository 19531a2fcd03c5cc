#include "fomin/ideal_lattice.hpp"

#include <algorithm>

namespace fomin {

bool Diagram::contains(PointId p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

Diagram make_diagram(std::vector<PointId> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Diagram{std::move(points)};
}

bool is_ideal(const PointPosetWindow& P, const Diagram& x) {
  for (PointId p : x.points)
    for (PointId a : P.down_covers(p))
      if (!x.contains(a)) return false;
  return true;
}

Diagram diagram_union(const Diagram& a, const Diagram& b) {
  std::vector<PointId> out;
  std::set_union(a.points.begin(), a.points.end(), b.points.begin(),
                 b.points.end(), std::back_inserter(out));
  return Diagram{std::move(out)};
}

Diagram diagram_intersection(const Diagram& a, const Diagram& b) {
  std::vector<PointId> out;
  std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(),
                        b.points.end(), std::back_inserter(out));
  return Diagram{std::move(out)};
}

namespace {

void require_visible(const PointPosetWindow& P, const Diagram& x) {
  int top = -1;
  for (PointId p : x.points) top = std::max(top, P.rank(p));
  if (top + 1 > P.complete_below())
    throw WindowTooShallow("insertion points of this ideal may be clipped");
}

}  // namespace

std::vector<PointId> insertion_points(const PointPosetWindow& P,
                                      const Diagram& x) {
  if (!is_ideal(P, x)) throw FominError("diagram is not downward closed");
  require_visible(P, x);
  std::vector<PointId> out;
  for (PointId p = 0; p < P.size(); ++p) {
    if (x.contains(p)) continue;
    bool all_in = true;
    for (PointId a : P.down_covers(p))
      if (!x.contains(a)) {
        all_in = false;
        break;
      }
    if (all_in) out.push_back(p);
  }
  return out;
}

std::vector<PointId> deletion_points(const PointPosetWindow& P,
                                     const Diagram& x) {
  if (!is_ideal(P, x)) throw FominError("diagram is not downward closed");
  std::vector<PointId> out;
  for (PointId p : x.points) {
    bool maximal = true;
    for (PointId b : P.up_covers(p))
      if (x.contains(b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(p);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> IdealLattice::find(
    const Diagram& x) const {
  std::size_t s = x.size();
  if (s >= index_.size()) return std::nullopt;
  auto it = index_[s].find(x);
  if (it == index_[s].end()) return std::nullopt;
  return std::make_pair(s, it->second);
}

std::vector<std::vector<Int>> IdealLattice::chain_counts() const {
  std::vector<std::vector<Int>> f(levels_.size());
  if (levels_.empty()) return f;
  f[0].assign(1, 1);
  for (std::size_t s = 0; s + 1 < levels_.size(); ++s) {
    f[s + 1].assign(levels_[s + 1].size(), 0);
    for (std::size_t i = 0; i < levels_[s].size(); ++i)
      for (const Edge& e : up_[s][i]) f[s + 1][e.upper] += f[s][i];
  }
  return f;
}

Int IdealLattice::chain_count_f(const Diagram& x) const {
  auto pos = find(x);
  if (!pos) throw FominError("diagram not enumerated");
  return chain_counts()[pos->first][pos->second];
}

IdealLattice enumerate_ideals(const PointPosetWindow& P, int n_max) {
  if (n_max < 0) throw FominError("negative size bound");
  if (!P.empty() && n_max > P.complete_below())
    throw WindowTooShallow("size bound exceeds the downward-complete range");
  IdealLattice lat;
  lat.levels_.emplace_back(1, Diagram{});
  lat.index_.emplace_back();
  lat.index_[0][Diagram{}] = 0;
  lat.up_.push_back({{}});
  for (int s = 0; s < n_max; ++s) {
    std::vector<Diagram> next;
    std::map<Diagram, std::size_t> next_index;
    for (std::size_t i = 0; i < lat.levels_[s].size(); ++i) {
      const Diagram& x = lat.levels_[s][i];
      for (PointId p : insertion_points(P, x)) {
        Diagram y = x;
        y.points.insert(
            std::upper_bound(y.points.begin(), y.points.end(), p), p);
        auto [it, fresh] = next_index.try_emplace(y, next.size());
        if (fresh) next.push_back(y);
        lat.up_[s][i].push_back({it->second, p});
      }
    }
    if (next.empty()) break;
    lat.up_.emplace_back(next.size());
    lat.levels_.push_back(std::move(next));
    lat.index_.push_back(std::move(next_index));
  }
  return lat;
}

Rat coloring_count_c(const WeightScheme& w, const Diagram& x) {
  Rat c = 1;
  for (PointId p : x.points) c *= w.at(p);
  c.canonicalize();
  return c;
}

}  // namespace fomin
