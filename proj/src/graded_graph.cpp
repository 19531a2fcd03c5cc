#include "fomin/graded_graph.hpp"

namespace fomin {

GradedWeightedGraph::GradedWeightedGraph(
    int min_rank, std::vector<std::vector<std::string>> names,
    std::vector<std::vector<std::vector<UpEdge>>> up)
    : min_rank_(min_rank), names_(std::move(names)), up_(std::move(up)) {
  if (up_.size() != names_.size())
    throw FominError("up-edge table does not match the level table");
  down_.resize(names_.size());
  for (std::size_t l = 0; l < names_.size(); ++l) {
    if (up_[l].size() != names_[l].size())
      throw FominError("up-edge table does not match the level table");
    down_[l].resize(names_[l].size());
  }
  for (std::size_t l = 0; l + 1 < names_.size(); ++l)
    for (std::size_t i = 0; i < up_[l].size(); ++i)
      for (const UpEdge& e : up_[l][i]) {
        if (e.upper >= names_[l + 1].size())
          throw FominError("up edge out of range");
        down_[l + 1][e.upper].push_back({i, e.weight});
      }
  if (!up_.empty())
    for (const auto& edges : up_.back())
      if (!edges.empty()) throw FominError("top level has up edges");
}

std::optional<GElem> GradedWeightedGraph::zero_hat() const {
  if (min_rank_ == 0 && !names_.empty() && names_[0].size() == 1)
    return GElem{0, 0};
  return std::nullopt;
}

Rat GradedWeightedGraph::up_weight(GElem e) const {
  Rat s = 0;
  for (const UpEdge& u : up(e)) s += u.weight;
  return s;
}

Rat GradedWeightedGraph::down_weight(GElem e) const {
  Rat s = 0;
  for (const DownEdge& d : down(e)) s += d.weight;
  return s;
}

std::string diagram_name(const PointPosetWindow& P, const Diagram& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    if (i) s += ",";
    s += P.name(x.points[i]);
  }
  s += "}";
  return s;
}

GradedWeightedGraph graph_from_ideals(const PointPosetWindow& P,
                                      const WeightScheme& w, int n_max) {
  IdealLattice lat = enumerate_ideals(P, n_max);
  std::vector<std::vector<std::string>> names(lat.num_levels());
  std::vector<std::vector<std::vector<GradedWeightedGraph::UpEdge>>> up(
      lat.num_levels());
  for (std::size_t s = 0; s < lat.num_levels(); ++s) {
    names[s].reserve(lat.level(s).size());
    up[s].resize(lat.level(s).size());
    for (std::size_t i = 0; i < lat.level(s).size(); ++i) {
      names[s].push_back(diagram_name(P, lat.level(s)[i]));
      if (s + 1 < lat.num_levels())
        for (const IdealLattice::Edge& e : lat.up_edges(s, i))
          up[s][i].push_back({e.upper, w.at(e.added)});
    }
  }
  return GradedWeightedGraph(0, std::move(names), std::move(up));
}

}  // namespace fomin
