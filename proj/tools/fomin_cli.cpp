#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fomin/json_io.hpp"

namespace {

using namespace fomin;

int report_exit(const CheckReport& rep, bool as_json, std::ostream& os) {
  if (as_json) {
    os << report_to_json(rep).dump(2) << "\n";
  } else if (rep.holds) {
    os << "holds\n";
  } else {
    os << "FAILS (" << rep.failures.size() << " site(s))\n";
    for (const FailureSite& f : rep.failures)
      os << "  " << f.site << ": " << rat_str(f.lhs) << " != "
         << rat_str(f.rhs) << "\n";
  }
  return rep.holds ? 0 : 1;
}

PointFamily resolve_point_family(const std::string& name, int max_rank) {
  FamilySpec spec = parse_family_spec(name, max_rank);
  if (spec.kind == FamilySpec::Kind::custom) {
    std::ifstream in(spec.path);
    if (!in) throw UnsupportedSpec("cannot open " + spec.path);
    json j = json::parse(in);
    PointFamily f;
    f.window = poset_from_json(j.at("poset"));
    f.weights = weights_from_json(f.window, j.at("weights"));
    return f;
  }
  return make_point_poset(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for weighted-differential lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  unsigned long seed = 0;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "seed for sampled randomness");
  app.add_option("--threads", threads, "worker threads for sweeps");

  std::string family = "quadrant";
  int max_rank = 6, max_size = -1, n = 4;

  auto* check = app.add_subcommand("check", "verify the differential identity");
  check->add_option("--family", family);
  check->add_option("--max-rank", max_rank);
  check->add_option("--max-size", max_size);
  std::string mode = "global";
  check->add_option("--mode", mode)
      ->check(CLI::IsMember({"global", "local-join", "local-meet", "graded"}));

  auto* solve_cmd = app.add_subcommand("solve", "solve for admissible weights");
  solve_cmd->add_option("--family", family);
  solve_cmd->add_option("--max-rank", max_rank);
  bool positivity = false;
  solve_cmd->add_flag("--positivity", positivity);

  auto* classify_cmd =
      app.add_subcommand("classify", "reproduce the case analysis");
  classify_cmd->add_option("--max-rank", max_rank);

  auto* rsk = app.add_subcommand("rsk", "growth-diagram correspondence");
  rsk->add_option("--family", family);
  rsk->add_option("--max-rank", max_rank);
  std::string perm_arg, colors_arg;
  rsk->add_option("--perm", perm_arg, "comma-separated permutation");
  rsk->add_option("--colors", colors_arg, "comma-separated colors");

  auto* identity = app.add_subcommand("identity", "n! r^n identity");
  identity->add_option("--family", family);
  identity->add_option("--n", n);
  identity->add_option("--max-rank", max_rank);

  auto* product_cmd = app.add_subcommand("product", "cartesian product");
  std::string left = "quadrant", right = "quadrant";
  product_cmd->add_option("--left", left);
  product_cmd->add_option("--right", right);
  product_cmd->add_option("--max-rank", max_rank);
  product_cmd->add_option("--check-size", max_size);

  auto* factor_cmd = app.add_subcommand("factor", "cartesian factorization");
  factor_cmd->add_option("--family", family);
  factor_cmd->add_option("--max-rank", max_rank);

  auto* truncate_cmd =
      app.add_subcommand("truncate", "zero-weight truncation");
  truncate_cmd->add_option("--family", family);
  truncate_cmd->add_option("--max-rank", max_rank);
  truncate_cmd->add_option("--max-size", max_size);
  std::string alpha = "1", beta = "0", gamma = "0";
  truncate_cmd->add_option("--alpha", alpha, "affine weights a+b.x+c.y");
  truncate_cmd->add_option("--beta", beta);
  truncate_cmd->add_option("--gamma", gamma);

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("--family", family);
  dot->add_option("--max-rank", max_rank);
  bool dot_lattice = false;
  dot->add_flag("--lattice", dot_lattice, "export the ideal lattice");
  dot->add_option("--max-size", max_size);
  std::string out_path;
  dot->add_option("--out", out_path);

  auto* families_cmd = app.add_subcommand("families", "emit family data");
  families_cmd->add_option("--family", family);
  families_cmd->add_option("--max-rank", max_rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      if (mode == "graded") {
        GraphFamily g =
            make_graded_graph(parse_family_spec(family, max_rank));
        return report_exit(check_graded_graph(g.graph, g.r), as_json,
                           std::cout);
      }
      PointFamily f = resolve_point_family(family, max_rank);
      if (mode == "global") {
        int nmax = max_size < 0 ? f.window.complete_below() : max_size;
        return report_exit(check_global(f.window, f.weights, nmax, threads),
                           as_json, std::cout);
      }
      OrphanMode om =
          mode == "local-join" ? OrphanMode::join : OrphanMode::meet;
      return report_exit(check_local(f.window, f.weights, om), as_json,
                         std::cout);
    }
    if (*solve_cmd) {
      PointFamily f = resolve_point_family(family, max_rank);
      AffineSolutionSpace space = solve(build_constraints(f.window));
      json j = {{"variables", space.variables},
                {"dimension", space.dimension()}};
      json basis = json::array();
      for (const auto& dir : space.basis) {
        json v = json::array();
        for (const Rat& x : dir) v.push_back(rat_str(x));
        basis.push_back(std::move(v));
      }
      j["basis"] = std::move(basis);
      if (positivity) {
        auto witness = positivity_witness(space, f.window);
        if (witness)
          j["positive_witness"] = weights_to_json(f.window, *witness);
        else
          j["positive_witness"] = nullptr;
      }
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dimension " << space.dimension() << "\n";
        if (positivity)
          std::cout << (j["positive_witness"].is_null()
                            ? "no positive weighting"
                            : "positive weighting exists")
                    << "\n";
      }
      return 0;
    }
    if (*classify_cmd) {
      ClassifyReport rep = classify(max_rank);
      if (as_json) {
        std::cout << classify_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << case_table_text(rep.case_table) << "\n";
        for (const Elimination& e : rep.eliminations)
          std::cout << "eliminated (x_L,y_L)=(" << e.x_limit << ","
                    << e.y_limit << "): contradiction at "
                    << trace_to_json(e.trace)["contradiction"]
                           .get<std::string>()
                    << "\n";
        for (const Survivor& s : rep.survivors)
          std::cout << "survivor "
                    << (s.k > 0 ? "Y_" + std::to_string(s.k) : s.name)
                    << (s.local_check_passed ? " (verified)" : " (FAILED)")
                    << "\n";
        std::cout << rep.path_case << "\n";
      }
      return 0;
    }
    if (*rsk) {
      GraphFamily g = make_graded_graph(parse_family_spec(family, max_rank));
      if (!g.graph.zero_hat() || !g.positive) {
        json j = {{"eligible", false},
                  {"reason", !g.graph.zero_hat()
                                 ? "no minimum element"
                                 : "weighting is not positive"}};
        std::cout << (as_json ? j.dump(2) : j.at("reason").get<std::string>())
                  << "\n";
        return 1;
      }
      ColoredPermutation sigma;
      std::stringstream ps(perm_arg);
      std::string tok;
      while (std::getline(ps, tok, ',')) sigma.perm.push_back(std::stol(tok));
      if (colors_arg.empty()) {
        sigma.colors.assign(sigma.perm.size(), 1);
      } else {
        std::stringstream cs(colors_arg);
        while (std::getline(cs, tok, ','))
          sigma.colors.push_back(std::stol(tok));
      }
      if (!is_integer(g.r)) throw InvalidColoring("r must be an integer");
      McLarnanMap M = canonical_mclarnan(g.graph, g.r.get_num().get_si());
      RskResult res = rsk_forward(g.graph, M, sigma);
      ColoredPermutation back = rsk_inverse(g.graph, M, res.P, res.Q);
      json j = rsk_to_json(g.graph, res);
      j["round_trip"] = back == sigma;
      std::cout << (as_json ? j.dump(2) : j.dump()) << "\n";
      return back == sigma ? 0 : 1;
    }
    if (*identity) {
      FamilySpec spec = parse_family_spec(family, std::max(max_rank, n));
      GraphFamily g = make_graded_graph(spec);
      if (!g.graph.zero_hat()) {
        json j = {{"eligible", false}, {"reason", "no minimum element"}};
        std::cout << (as_json ? j.dump(2) : j.at("reason").get<std::string>())
                  << "\n";
        return 1;
      }
      IdentityReport rep = verify_identity(g.graph, g.r, n);
      std::cout << identity_to_json(rep).dump(as_json ? 2 : -1) << "\n";
      return rep.match ? 0 : 1;
    }
    if (*product_cmd) {
      PointFamily f = product(resolve_point_family(left, max_rank),
                              resolve_point_family(right, max_rank));
      int nmax = max_size < 0 ? std::min(6, f.window.complete_below())
                              : max_size;
      CheckReport rep = check_global(f.window, f.weights, nmax, threads);
      json j = {{"r", rat_str(f.weights.r)},
                {"points", f.window.size()},
                {"check", report_to_json(rep)}};
      std::cout << j.dump(as_json ? 2 : -1) << "\n";
      return rep.holds ? 0 : 1;
    }
    if (*factor_cmd) {
      PointFamily f = resolve_point_family(family, max_rank);
      json parts = json::array();
      for (const PointFamily& g : factor(f))
        parts.push_back(
            {{"points", g.window.size()}, {"r", rat_str(g.weights.r)}});
      std::cout << json{{"factors", parts}}.dump(as_json ? 2 : -1) << "\n";
      return 0;
    }
    if (*truncate_cmd) {
      PointFamily f = resolve_point_family(family, max_rank);
      Rat a = parse_rat(alpha), b = parse_rat(beta), c = parse_rat(gamma);
      if (family == "quadrant") {
        for (PointId p = 0; p < f.window.size(); ++p) {
          std::string nm = f.window.name(p);
          auto comma = nm.find(',');
          long x = std::stol(nm.substr(1, comma - 1));
          long y = std::stol(nm.substr(comma + 1));
          f.weights.w[p] = a + b * x + c * y;
        }
        f.weights.r = a;
      }
      PointFamily t = truncate_points(f);
      int nmax = max_size < 0 ? std::min(6, f.window.complete_below())
                              : max_size;
      CheckReport rep = truncate_lattice_check(f, nmax);
      json j = {{"kept_points", t.window.size()},
                {"r", rat_str(t.weights.r)},
                {"weights", weights_to_json(t.window, t.weights)},
                {"check", report_to_json(rep)}};
      std::cout << j.dump(as_json ? 2 : -1) << "\n";
      return rep.holds ? 0 : 1;
    }
    if (*dot) {
      PointFamily f = resolve_point_family(family, max_rank);
      std::ostringstream os;
      if (dot_lattice) {
        int nmax = max_size < 0 ? std::min(5, f.window.complete_below())
                                : max_size;
        IdealLattice lat = enumerate_ideals(f.window, nmax);
        lattice_to_dot(os, f.window, lat, &f.weights);
      } else {
        poset_to_dot(os, f.window);
      }
      if (out_path.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream file(out_path);
        file << os.str();
      }
      return 0;
    }
    if (*families_cmd) {
      FamilySpec spec = parse_family_spec(family, max_rank);
      if (spec.kind == FamilySpec::Kind::z_chain ||
          spec.kind == FamilySpec::Kind::twos ||
          spec.kind == FamilySpec::Kind::yf1) {
        GraphFamily g = make_graded_graph(spec);
        json j = {{"kind", "graded-graph"},
                  {"r", rat_str(g.r)},
                  {"positive", g.positive},
                  {"levels", g.graph.num_levels()},
                  {"min_rank", g.graph.min_rank()}};
        std::cout << j.dump(as_json ? 2 : -1) << "\n";
      } else {
        PointFamily f = resolve_point_family(family, max_rank);
        json j = {{"kind", "point-poset"},
                  {"poset", poset_to_json(f.window)},
                  {"weights", weights_to_json(f.window, f.weights)}};
        std::cout << j.dump(as_json ? 2 : -1) << "\n";
      }
      return 0;
    }
  } catch (const FominError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
