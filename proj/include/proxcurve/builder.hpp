#pragma once

// Dyadic midpoint slice-projection refinement between two points of a
// proximally smooth set.

#include "proxcurve/sets.hpp"
#include "proxcurve/slicer.hpp"
#include "proxcurve/space.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace proxcurve {

inline constexpr int kMaxDepthLimit = 20;

struct FeasibilityReport {
  double d_over_R{0.0};
  bool assumption1{false};  // d/R < omega^{-1}(1/8)
  bool assumption2{false};  // mu < 2
  bool assumption3{false};  // mu^s / 2^{s-1} < 1
  double beta_L{0.0};
  double beta_I{0.0};
  std::optional<double> mu;  // undefined outside assumption 1
};

FeasibilityReport check_feasibility(const ModulusModel& model, double d, double reach);

struct BuildParams {
  int max_depth = 14;
  double delta_stop_rel = 1e-9;  // stop once Delta_i <= delta_stop_rel * Delta_0
  bool enforce_gates = true;     // refuse d/R >= beta_L
  SlicerParams slicer;
};

/// Vertex table f(j / 2^depth), j = 0..2^depth, plus per-level maxima.
struct DyadicCurve {
  int depth{0};
  std::vector<Vector> vertices;
  std::vector<double> deltas;  // deltas[i]: longest segment at level i
  std::vector<std::string> warnings;

  std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// Level at which vertex j first appears (0 for the endpoints).
  int level_of(std::size_t j) const;
};

/// Build failure; `partial()` holds the last completed level.
class BuildError : public std::runtime_error {
 public:
  BuildError(const std::string& what, DyadicCurve partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const DyadicCurve& partial() const { return partial_; }

 private:
  DyadicCurve partial_;
};

/// Level i inserts, between consecutive level-(i-1) vertices a and b, the
/// slice-projection of (a + b)/2. Throws GateError when gates are enforced
/// and d/R >= beta_L, std::invalid_argument for endpoints outside the set,
/// BuildError when a slice-projection fails.
DyadicCurve build_curve(const Space& space, const ProximalSet& set, const Vector& x0,
                        const Vector& x1, const BuildParams& params = {});

double polyline_length(const Space& space, const DyadicCurve& curve);

/// Even-index vertices of a curve, i.e. the curve one level coarser.
DyadicCurve coarsen(const DyadicCurve& curve);

}  // namespace proxcurve
