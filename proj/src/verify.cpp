#include "proxcurve/hull.hpp"
#include "proxcurve/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace proxcurve {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool VerificationReport::all_passed() const {
  if (build_error) return false;
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

namespace {

constexpr double kDecayRelSlack = 1e-12;

CheckRecord skipped(const std::string& name, std::string why) {
  return {name, CheckStatus::skipped, std::nullopt, std::move(why)};
}

CheckRecord judged(const std::string& name, double margin, std::string details) {
  return {name, margin >= 0.0 ? CheckStatus::pass : CheckStatus::fail, margin, std::move(details)};
}

// Splits v = g + w with g on the line x0 x1 and w quasi-orthogonal to x1 - x0.
struct LineSplit {
  double g1;  // ||v - g||
  double g2;  // ||x0 - g||
};

LineSplit split_along_chord(const Space& space, const Vector& functional, double d,
                            const Vector& x0, const Vector& x1, const Vector& v) {
  const double s = functional.dot(v - x0) / d;
  const Vector g = x0 + s * (x1 - x0);
  return {space.norm(v - g), space.norm(x0 - g)};
}

std::string fmt(const char* label, double v) {
  std::ostringstream o;
  o.precision(10);
  o << label << v;
  return o.str();
}

}  // namespace

VerificationReport verify_curve(const Scenario& sc, const DyadicCurve& curve) {
  const Space& space = sc.space;
  const ModulusModel& model = space.modulus();
  const double reach = sc.set.reach();
  const double d = space.norm(sc.x1 - sc.x0);
  const double slack = sc.slack;

  VerificationReport rep;
  rep.scenario = sc.name;
  rep.bounds = BoundsContext::make(model, d, reach);
  if (d > 0.0) rep.feasibility = check_feasibility(model, d, reach);
  rep.depth = curve.depth;
  rep.length = polyline_length(space, curve);
  rep.chord = d;
  rep.deltas = curve.deltas;
  rep.vertex_count = curve.vertices.size();
  rep.segment_residual = curve.deltas.empty() ? 0.0 : curve.deltas.back();
  rep.warnings = curve.warnings;

  const auto& v = curve.vertices;
  const double ratio = d / reach;
  const bool degenerate = d == 0.0;
  const bool below_beta_L = !degenerate && ratio < rep.bounds.beta_L;
  const bool below_beta_I = !degenerate && ratio < rep.bounds.beta_I;

  for (const auto& name : check_names()) {
    if (!sc.enabled(name)) continue;
    CheckRecord rec;
    if (name == "membership") {
      double worst = 0.0;
      for (const auto& x : v) worst = std::max(worst, sc.set.distance(space, x));
      rec = judged(name, sc.build.slicer.membership_tol - worst, fmt("max vertex distance ", worst));
    } else if (degenerate) {
      rec = judged(name, 0.0, "coincident endpoints; trivially satisfied");
    } else if (name == "delta_decay") {
      if (!below_beta_L || !rep.bounds.mu) {
        rec = skipped(name, "d/R >= beta_L");
      } else {
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < curve.deltas.size(); ++i) {
          const double bound = delta_decay_bound(*rep.bounds.mu, d, static_cast<int>(i));
          margin = std::min(margin, bound * (1.0 + kDecayRelSlack) - curve.deltas[i]);
        }
        rec = judged(name, margin, "Delta_i <= (mu/2)^i Delta_0 over all levels");
      }
    } else if (name == "length") {
      if (!rep.bounds.length_bound) {
        rec = skipped(name, "d/R >= beta_L");
      } else {
        rec = judged(name, *rep.bounds.length_bound + slack - rep.length,
                     fmt("length_bound ", *rep.bounds.length_bound));
      }
    } else if (name == "inclusion") {
      if (!below_beta_I || !rep.bounds.inclusion_radius) {
        rec = skipped(name, "d/R >= beta_I");
      } else {
        const Vector mid = 0.5 * (sc.x0 + sc.x1);
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& x : v) {
          worst = std::max(worst, hull_margin(space, sc.x0, sc.x1, mid, *rep.bounds.inclusion_radius, x));
        }
        rec = judged(name, slack - worst, fmt("inclusion radius ", *rep.bounds.inclusion_radius));
      }
    } else if (name == "cylinder" || name == "g2_floor") {
      if (!below_beta_I || !rep.bounds.cylinder_bound) {
        rec = skipped(name, "d/R >= beta_I");
      } else {
        const Vector functional = space.dual_functional(sc.x1 - sc.x0);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < v.size(); ++j) {
          const auto split = split_along_chord(space, functional, d, sc.x0, sc.x1, v[j]);
          if (name == "cylinder") {
            margin = std::min(margin, *rep.bounds.cylinder_bound + slack - split.g1);
          } else if (2 * j >= v.size() - 1) {  // t = j / 2^k in [1/2, 1]
            margin = std::min(margin, split.g2 - g2_floor(d) + slack);
          }
        }
        rec = judged(name, margin,
                     name == "cylinder" ? fmt("cylinder bound ", *rep.bounds.cylinder_bound)
                                        : fmt("g2 floor ", g2_floor(d)));
      }
    } else if (name == "waist") {
      double margin = std::numeric_limits<double>::infinity();
      std::size_t applicable = 0;
      std::size_t total = 0;
      for (int level = 1; level <= curve.depth; ++level) {
        const std::size_t step = std::size_t{1} << (curve.depth - level);
        for (std::size_t j = step; j + step < v.size(); j += 2 * step) {
          ++total;
          const Vector& a = v[j - step];
          const Vector& b = v[j + step];
          const double chord = space.norm(b - a);
          if (chord == 0.0 || !(chord / reach < rep.bounds.waist_limit)) continue;
          ++applicable;
          const double dev = space.norm(v[j] - 0.5 * (a + b));
          margin = std::min(margin, r_prime(model, chord, reach) + slack - dev);
        }
      }
      if (applicable == 0) {
        rec = skipped(name, "no node within the waist range");
      } else {
        std::ostringstream o;
        o << applicable << " of " << total << " nodes checked";
        rec = judged(name, margin, o.str());
      }
    } else if (name == "midpoint_dist") {
      if (!(ratio < 2.0)) {
        rec = skipped(name, "d/R >= 2");
      } else {
        double margin = std::numeric_limits<double>::infinity();
        const int n = std::max(1, sc.midpoint_samples);
        for (int k = 1; k <= n; ++k) {
          const double lambda = static_cast<double>(k) / (n + 1);
          const Vector x = (1.0 - lambda) * sc.x0 + lambda * sc.x1;
          const double bound = midpoint_dist_bound(model, d, reach, lambda);
          margin = std::min(margin, bound + slack - sc.set.distance(space, x));
        }
        rec = judged(name, margin, "dist(x_lambda, A) <= 8 R lambda (1 - lambda) rho(d/R)");
      }
    }
    rec.name = name;
    rep.checks.push_back(std::move(rec));
  }
  return rep;
}

ScenarioResult run_scenario(const Scenario& sc) {
  ScenarioResult out;
  std::optional<std::string> error;
  try {
    out.curve = build_curve(sc.space, sc.set, sc.x0, sc.x1, sc.build);
  } catch (const BuildError& e) {
    out.curve = e.partial();
    error = e.what();
  } catch (const GateError& e) {
    out.curve.vertices = {sc.x0, sc.x1};
    out.curve.deltas = {sc.space.norm(sc.x1 - sc.x0)};
    error = e.what();
  }
  out.report = verify_curve(sc, out.curve);
  out.report.build_error = error;
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  using json = nlohmann::json;
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"margin", opt(c.margin)},
                      {"details", c.details}});
  }
  const auto& b = r.bounds;
  json bounds = {{"modulus", b.model.kind_name()},
                 {"s", b.s},
                 {"c_sm", b.c_sm},
                 {"d", b.d},
                 {"R", b.reach},
                 {"r_prime", opt(b.r_prime)},
                 {"mu", opt(b.mu)},
                 {"beta_L", b.beta_L},
                 {"beta_I", b.beta_I},
                 {"waist_limit", b.waist_limit},
                 {"length_bound", opt(b.length_bound)},
                 {"inclusion_radius", opt(b.inclusion_radius)},
                 {"cylinder_bound", opt(b.cylinder_bound)},
                 {"g2_floor", g2_floor(b.d)}};
  const auto& f = r.feasibility;
  json feas = {{"d_over_R", f.d_over_R},     {"assumption1", f.assumption1},
               {"assumption2", f.assumption2}, {"assumption3", f.assumption3},
               {"beta_L", f.beta_L},           {"beta_I", f.beta_I},
               {"mu", opt(f.mu)}};
  json curve = {{"depth", r.depth},
                {"length", r.length},
                {"chord", r.chord},
                {"deltas", r.deltas},
                {"vertex_count", r.vertex_count},
                {"segment_residual", r.segment_residual}};
  if (b.length_bound) curve["truncation_gap"] = *b.length_bound - r.length;
  return {{"scenario", r.scenario},
          {"passed", r.all_passed()},
          {"checks", checks},
          {"bounds", bounds},
          {"feasibility", feas},
          {"curve", curve},
          {"warnings", r.warnings},
          {"build_error", r.build_error ? json(*r.build_error) : json(nullptr)}};
}

}  // namespace proxcurve
