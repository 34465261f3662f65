#pragma once

// File formats:
//   vertices CSV   level,j,denom,x0,...,x{n-1}   (level = level introduced)
//   levels JSONL   {"i":..,"delta":..,"decay_bound":..}   one line per level
//   report JSON    canonical form of VerificationReport (sorted keys)
// Doubles are written with 17 significant digits.

#include "proxcurve/builder.hpp"
#include "proxcurve/scenario.hpp"

#include <optional>
#include <string>

namespace proxcurve {

std::string vertices_csv(const DyadicCurve& curve);
/// decay_bound is null when mu is undefined.
std::string levels_jsonl(const DyadicCurve& curve, std::optional<double> mu_val);
std::string report_json(const VerificationReport& report);

struct EmittedFiles {
  std::string vertices;
  std::string levels;
  std::string report;
};

/// Writes the three files under paths.dir (created if missing). An empty
/// report pointer skips the report file.
EmittedFiles emit(const VerificationReport* report, const DyadicCurve& curve,
                  std::optional<double> mu_val, const OutputPaths& paths);

}  // namespace proxcurve
