#pragma once

// Scenario configuration, the verification run over a built curve, and the
// report it produces.

#include "proxcurve/bounds.hpp"
#include "proxcurve/builder.hpp"
#include "proxcurve/sets.hpp"
#include "proxcurve/space.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace proxcurve {

/// Names of the checks, in report order.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "membership", "delta_decay", "length", "inclusion",
      "cylinder",   "g2_floor",    "waist",  "midpoint_dist"};
  return names;
}

struct OutputPaths {
  std::string dir = ".";
  std::string vertices = "vertices.csv";
  std::string levels = "levels.jsonl";
  std::string report = "report.json";
};

struct Scenario {
  std::string name;
  Space space;
  ProximalSet set;
  Vector x0;
  Vector x1;
  BuildParams build;
  std::map<std::string, bool> checks;  // absent entries are enabled
  double slack = 1e-8;
  int midpoint_samples = 15;
  OutputPaths output;

  bool enabled(const std::string& check) const;
};

Space parse_space(const nlohmann::json& j);
ModulusModel parse_modulus(const nlohmann::json& j, double p);
ProximalSet parse_set(const nlohmann::json& j, int dim);
/// Throws std::invalid_argument with a path-qualified message on schema errors.
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status{CheckStatus::skipped};
  std::optional<double> margin;  // bound minus observed; negative on failure
  std::string details;
};

struct VerificationReport {
  std::string scenario;
  std::vector<CheckRecord> checks;
  BoundsContext bounds;
  FeasibilityReport feasibility;
  int depth{0};
  double length{0.0};
  double chord{0.0};
  std::vector<double> deltas;
  std::size_t vertex_count{0};
  double segment_residual{0.0};  // Delta at the final depth
  std::vector<std::string> warnings;
  std::optional<std::string> build_error;

  const CheckRecord* find(const std::string& name) const;
  bool all_passed() const;  // no check failed and no build error
};

struct ScenarioResult {
  DyadicCurve curve;
  VerificationReport report;
};

/// Runs the enabled checks over an already built curve.
VerificationReport verify_curve(const Scenario& scenario, const DyadicCurve& curve);

/// Builds the curve and verifies it; a build failure is recorded in the
/// report and the checks run over the partial curve.
ScenarioResult run_scenario(const Scenario& scenario);

/// Canonical JSON (sorted keys, no timestamps).
nlohmann::json to_json(const VerificationReport& report);

}  // namespace proxcurve
