#include "proxcurve/bounds.hpp"
#include "proxcurve/emit.hpp"
#include "proxcurve/geodesic_oracle.hpp"
#include "proxcurve/hull.hpp"
#include "proxcurve/scenario.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

using namespace proxcurve;
using json = nlohmann::json;

namespace {

struct Overrides {
  std::optional<double> tol;
  std::optional<int> max_depth;
  std::optional<std::string> out_dir;
};

Scenario load(const std::string& path, const Overrides& o) {
  Scenario sc = load_scenario(path);
  if (o.tol) sc.build.slicer.residual_tol = *o.tol;
  if (o.max_depth) sc.build.max_depth = *o.max_depth;
  if (o.out_dir) sc.output.dir = *o.out_dir;
  return sc;
}

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--tol", o.tol, "Slice residual tolerance relative to the chord");
  cmd->add_option("--max-depth", o.max_depth, "Maximum refinement depth")
      ->check(CLI::Range(0, kMaxDepthLimit));
  cmd->add_option("--out-dir", o.out_dir, "Directory for output files");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_moduli(double p, int dim, const std::vector<double>& taus, const std::vector<double>& eps,
               std::size_t budget, std::uint64_t seed) {
  const Space space = Space::lp(p, dim);
  const auto& model = space.modulus();
  bool ok = true;
  json out{{"p", p}, {"dim", dim}, {"model", model.kind_name()}, {"s", model.s()},
           {"c_sm", model.c_sm()}, {"budget", budget}, {"seed", seed}};
  json rows = json::array();
  for (double t : taus) {
    const double r = estimate_rho(space, t, budget, seed);
    const double lo = std::hypot(1.0, t) - 1.0;
    const bool in = r >= lo - 1e-12 && r <= t + 1e-12;
    ok = ok && in;
    rows.push_back({{"tau", t}, {"rho_hat", r}, {"rho_model", model.rho(t)}, {"day_nordlander_lo", lo},
                    {"day_nordlander_hi", t}, {"sandwich", in}});
  }
  out["rho"] = rows;
  rows = json::array();
  for (double e : eps) {
    const double z = estimate_zeta_plus(space, e, budget, seed);
    json row{{"eps", e}, {"zeta_hat", z}, {"zeta_model", model.zeta_plus(e)}};
    if (e > 0.0 && e <= 0.5) {
      const double lo = 1.0 + estimate_rho(space, e / (2.0 * (1.0 + e)), budget, seed);
      const double hi = 1.0 + estimate_rho(space, 2.0 * e, budget, seed);
      const bool in = z >= lo - 1e-12 && z <= hi + 1e-12;
      ok = ok && in;
      row["sandwich_lo"] = lo;
      row["sandwich_hi"] = hi;
      row["sandwich"] = in;
    }
    rows.push_back(row);
  }
  out["zeta_plus"] = rows;
  out["beta_L"] = beta_L(model);
  out["beta_I"] = beta_I(model, model.s());
  out["waist_limit"] = waist_limit(model);
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

std::optional<double> mu_of(const Scenario& sc) {
  const double d = sc.space.norm(sc.x1 - sc.x0);
  const auto f = check_feasibility(sc.space.modulus(), d, sc.set.reach());
  return f.mu;
}

int cmd_build(const Scenario& sc) {
  const auto curve = build_curve(sc.space, sc.set, sc.x0, sc.x1, sc.build);
  const auto files = emit(nullptr, curve, mu_of(sc), sc.output);
  for (const auto& w : curve.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "depth " << curve.depth << ", " << curve.vertices.size() << " vertices, length "
            << num(polyline_length(sc.space, curve)) << "\n"
            << files.vertices << "\n"
            << files.levels << "\n";
  return 0;
}

int cmd_verify(const Scenario& sc) {
  const auto res = run_scenario(sc);
  const auto files = emit(&res.report, res.curve, mu_of(sc), sc.output);
  for (const auto& c : res.report.checks) {
    std::printf("%-14s %-8s %s\n", c.name.c_str(), to_string(c.status).c_str(), c.details.c_str());
  }
  if (res.report.build_error) std::printf("build error: %s\n", res.report.build_error->c_str());
  std::printf("%s\n%s\n", res.report.all_passed() ? "PASSED" : "FAILED", files.report.c_str());
  return res.report.all_passed() ? 0 : 1;
}

int cmd_oracle(const Scenario& sc, int grid_n) {
  const auto r = geodesic_oracle_2d(sc.space, sc.set, sc.x0, sc.x1, grid_n);
  json out{{"scenario", sc.name}, {"grid_n", grid_n},      {"length", r.length},
           {"spacing", r.spacing}, {"allowance", r.allowance}, {"nodes_in_set", r.nodes_in_set},
           {"settled", r.settled}, {"chord", sc.space.norm(sc.x1 - sc.x0)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const Scenario& base, const std::vector<double>& ds, const std::string& out_path) {
  std::ostringstream o;
  o << "d,d_over_R,length,length_ratio,bound_ratio,inclusion_margin\n";
  const double reach = base.set.reach();
  for (double d : ds) {
    Scenario sc = base;
    sc.x1 = sc.set.point_at_distance(sc.space, sc.x0, d);
    sc.checks.clear();
    for (const auto& name : check_names()) sc.checks[name] = name == "length" || name == "inclusion";
    const auto res = run_scenario(sc);
    const auto& rep = res.report;
    o << num(d) << ',' << num(d / reach) << ',';
    if (rep.build_error) {
      o << ",,,\n";
      continue;
    }
    o << num(rep.length) << ',' << num(rep.length / d) << ',';
    if (rep.bounds.length_bound) o << num(rep.length / *rep.bounds.length_bound);
    o << ',';
    const auto* inc = rep.find("inclusion");
    if (inc && inc->margin) o << num(*inc->margin);
    o << '\n';
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << o.str();
  } else {
    const std::filesystem::path path(out_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << o.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves inside proximally smooth sets by midpoint slice-projection"};
  app.require_subcommand(1);

  double p = 2.0;
  int dim = 2;
  std::vector<double> taus{0.1, 0.5, 1.0};
  std::vector<double> eps{0.1, 0.25, 0.5};
  std::size_t budget = 4000;
  std::uint64_t seed = 0;
  auto* moduli = app.add_subcommand("moduli", "Estimate and validate rho and zeta+ for l_p^n");
  moduli->add_option("--p", p, "Exponent p in (1, inf)")->check(CLI::PositiveNumber);
  moduli->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber);
  moduli->add_option("--tau", taus, "tau values for rho")->delimiter(',');
  moduli->add_option("--eps", eps, "eps values for zeta+")->delimiter(',');
  moduli->add_option("--budget", budget, "Coarse samples per estimate");
  moduli->add_option("--seed", seed, "Seed for the sampling estimators");

  std::string config;
  Overrides ov;
  auto* build = app.add_subcommand("build", "Build the curve and write vertex and level files");
  build->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  add_overrides(build, ov);

  auto* verify = app.add_subcommand("verify", "Build, verify and write the report");
  verify->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  add_overrides(verify, ov);

  int grid_n = 1500;
  auto* oracle = app.add_subcommand("oracle", "Grid shortest-path baseline for 2-D scenarios");
  oracle->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  oracle->add_option("--grid-n", grid_n, "Grid points per axis")->check(CLI::Range(8, 20000));

  std::vector<double> ds{0.002, 0.005, 0.01, 0.02, 0.05, 0.1};
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Length and inclusion ratios over chord lengths (CSV)");
  sweep->add_option("config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--d", ds, "Chord lengths")->delimiter(',');
  sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");
  add_overrides(sweep, ov);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*moduli) return cmd_moduli(p, dim, taus, eps, budget, seed);
    if (*build) return cmd_build(load(config, ov));
    if (*verify) return cmd_verify(load(config, ov));
    if (*oracle) return cmd_oracle(load(config, ov), grid_n);
    if (*sweep) return cmd_sweep(load(config, ov), ds, sweep_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
