#include "fomin/json_io.hpp"

#include <ostream>
#include <sstream>

namespace fomin {

json poset_to_json(const PointPosetWindow& P) {
  json points = json::array();
  for (PointId p = 0; p < P.size(); ++p) {
    json ups = json::array();
    for (PointId q : P.up_covers(p)) ups.push_back(P.name(q));
    points.push_back(
        {{"id", P.name(p)}, {"rank", P.rank(p)}, {"up", std::move(ups)}});
  }
  return {{"max_rank", P.max_rank()},
          {"complete_below", P.complete_below()},
          {"points", std::move(points)}};
}

PointPosetWindow poset_from_json(const json& j) {
  PointPosetWindow::Builder b;
  b.max_rank(j.at("max_rank").get<int>());
  if (j.contains("complete_below"))
    b.complete_below(j.at("complete_below").get<int>());
  for (const json& pt : j.at("points"))
    b.point(pt.at("id").get<std::string>(), pt.at("rank").get<int>());
  for (const json& pt : j.at("points"))
    for (const json& up : pt.at("up"))
      b.cover(pt.at("id").get<std::string>(), up.get<std::string>());
  return b.build();
}

json weights_to_json(const PointPosetWindow& P, const WeightScheme& w) {
  json ws = json::object();
  for (PointId p = 0; p < P.size(); ++p) ws[P.name(p)] = rat_str(w.at(p));
  return {{"r", rat_str(w.r)}, {"w", std::move(ws)}};
}

WeightScheme weights_from_json(const PointPosetWindow& P, const json& j) {
  WeightScheme w;
  w.r = parse_rat(j.at("r").get<std::string>());
  w.w.assign(P.size(), 0);
  for (PointId p = 0; p < P.size(); ++p)
    w.w[p] = parse_rat(j.at("w").at(P.name(p)).get<std::string>());
  return w;
}

json report_to_json(const CheckReport& rep) {
  json fails = json::array();
  for (const FailureSite& f : rep.failures)
    fails.push_back(
        {{"site", f.site}, {"lhs", rat_str(f.lhs)}, {"rhs", rat_str(f.rhs)}});
  json j = {{"holds", rep.holds}, {"failures", std::move(fails)}};
  if (!rep.skipped.empty()) j["skipped"] = rep.skipped;
  return j;
}

json identity_to_json(const IdentityReport& rep) {
  return {{"n", rep.n},
          {"lhs", rat_str(rep.lhs)},
          {"rhs", rat_str(rep.rhs)},
          {"match", rep.match}};
}

namespace {

std::string cell_name(GridCoord c) {
  return "T(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace

json trace_to_json(const PropagationTrace& t) {
  json cells = json::object();
  for (auto& [c, w] : t.cells) cells[cell_name(c)] = rat_str(w);
  json j = {{"cells", std::move(cells)}};
  if (t.contradiction) j["contradiction"] = cell_name(*t.contradiction);
  json steps = json::array();
  for (const PropagationStep& s : t.steps) {
    const char* kind = s.kind == PropagationStep::allocated ? "allocated"
                       : s.kind == PropagationStep::not_allocated
                           ? "not-allocated"
                       : s.kind == PropagationStep::balanced ? "balanced"
                                                             : "contradiction";
    steps.push_back({{"cell", cell_name(s.cell)},
                     {"kind", kind},
                     {"value", rat_str(s.weight)}});
  }
  j["steps"] = std::move(steps);
  return j;
}

namespace {

std::string delta_str(const std::optional<Rat>& d, bool parametric,
                      bool minus) {
  if (parametric) return minus ? "-n" : "n";
  if (!d) return "inf";
  return rat_str(*d);
}

std::string limit_str(const std::optional<long>& l, bool parametric) {
  if (parametric) return "n";
  if (!l) return "inf";
  return std::to_string(*l);
}

}  // namespace

json case_table_to_json(const std::vector<CaseRow>& rows) {
  json out = json::array();
  for (const CaseRow& r : rows) {
    out.push_back({{"Delta-", delta_str(r.Delta_minus, r.parametric, true)},
                   {"x_L", r.parametric ? "inf" : limit_str(r.x_limit, false)},
                   {"Delta+", delta_str(r.Delta_plus, r.parametric, false)},
                   {"y_L", limit_str(r.y_limit, r.parametric)},
                   {"N", r.N},
                   {"verdict", r.verdict}});
  }
  return out;
}

std::string case_table_text(const std::vector<CaseRow>& rows) {
  std::ostringstream os;
  os << "Delta-\tx_L\tDelta+\ty_L\tN\tlattice\n";
  for (const CaseRow& r : rows) {
    if (r.parametric)
      os << "-n (n>=2)\tinf\tn\tn\t1\tY_n\n";
    else
      os << delta_str(r.Delta_minus, false, true) << "\t"
         << limit_str(r.x_limit, false) << "\t"
         << delta_str(r.Delta_plus, false, false) << "\t"
         << limit_str(r.y_limit, false) << "\t" << r.N << "\t" << r.verdict
         << "\n";
  }
  return os.str();
}

json classify_to_json(const ClassifyReport& rep) {
  json elims = json::array();
  for (const Elimination& e : rep.eliminations)
    elims.push_back({{"x_L", e.x_limit},
                     {"y_L", e.y_limit},
                     {"N", e.N},
                     {"trace", trace_to_json(e.trace)}});
  json survivors = json::array();
  for (const Survivor& s : rep.survivors) {
    json sj = {{"name", s.k > 0 ? "Y_" + std::to_string(s.k) : s.name},
               {"points", s.window.size()},
               {"local_check", s.local_check_passed},
               {"weights", weights_to_json(s.window, s.weights)}};
    survivors.push_back(std::move(sj));
  }
  return {{"case_table", case_table_to_json(rep.case_table)},
          {"eliminations", std::move(elims)},
          {"survivors", std::move(survivors)},
          {"path_case", rep.path_case}};
}

json rsk_to_json(const GradedWeightedGraph& G, const RskResult& res) {
  json p = json::array(), q = json::array(), c = json::array();
  for (GElem e : res.P.chain) p.push_back(G.name(e));
  for (GElem e : res.Q.chain) q.push_back(G.name(e));
  for (long k : res.P.edge_colors) c.push_back(k);
  return {{"P", std::move(p)},
          {"Q", std::move(q)},
          {"c", std::move(c)},
          {"shape", G.name(res.shape)}};
}

json lattice_to_json(const PointPosetWindow& P, const IdealLattice& lat) {
  json levels = json::array();
  for (std::size_t s = 0; s < lat.num_levels(); ++s) {
    json level = json::array();
    for (const Diagram& x : lat.level(s)) level.push_back(diagram_name(P, x));
    levels.push_back(std::move(level));
  }
  return {{"levels", std::move(levels)}};
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void poset_to_dot(std::ostream& os, const PointPosetWindow& P) {
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int r = 0; r <= P.max_rank(); ++r) {
    auto pts = P.points_of_rank(r);
    if (pts.empty()) continue;
    os << "  { rank=same;";
    for (PointId p : pts) os << " " << quote(P.name(p)) << ";";
    os << " }\n";
  }
  for (PointId p = 0; p < P.size(); ++p)
    for (PointId q : P.up_covers(p))
      os << "  " << quote(P.name(p)) << " -> " << quote(P.name(q)) << ";\n";
  os << "}\n";
}

void lattice_to_dot(std::ostream& os, const PointPosetWindow& P,
                    const IdealLattice& lat, const WeightScheme* w) {
  os << "digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t s = 0; s < lat.num_levels(); ++s) {
    os << "  { rank=same;";
    for (const Diagram& x : lat.level(s))
      os << " " << quote(diagram_name(P, x)) << ";";
    os << " }\n";
  }
  for (std::size_t s = 0; s + 1 < lat.num_levels(); ++s)
    for (std::size_t i = 0; i < lat.level(s).size(); ++i)
      for (const IdealLattice::Edge& e : lat.up_edges(s, i)) {
        os << "  " << quote(diagram_name(P, lat.level(s)[i])) << " -> "
           << quote(diagram_name(P, lat.level(s + 1)[e.upper]));
        if (w) os << " [label=" << quote(rat_str(w->at(e.added))) << "]";
        os << ";\n";
      }
  os << "}\n";
}

}  // namespace fomin
