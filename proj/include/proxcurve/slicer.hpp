#pragma once

// Slice-projection: a point of P_A([x0, x1]) on the hyperplane through a
// point of the segment that is quasi-orthogonal to x1 - x0.

#include "proxcurve/sets.hpp"
#include "proxcurve/space.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace proxcurve {

struct SlicerParams {
  double residual_tol = 1e-10;  // relative to ||x1 - x0||
  int max_iter = 200;
  double membership_tol = 1e-9;
};

struct SlicePoint {
  double lambda{0.0};   // segment parameter whose projection was taken
  Vector point;         // P_A(x_lambda)
  double residual{0.0}; // signed hyperplane defect
  double dist_to_mid{0.0};
  int iterations{0};
  bool discontinuity{false};  // residual jumped across a collapsed bracket
};

/// Thrown when the residual tolerance is not met; carries the best point.
class SliceError : public std::runtime_error {
 public:
  SliceError(const std::string& what, SlicePoint best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SlicePoint& best() const { return best_; }

 private:
  SlicePoint best_;
};

/// <J(x1 - x0), a - (x0 + x1)/2>: negative at x0, positive at x1.
double mid_residual(const Space& space, const Vector& x0, const Vector& x1, const Vector& a);

/// Bisection on lambda for the sign change of
/// h(lambda) = <J(x1 - x0), P_A(x_lambda) - anchor>, anchor = x0 + target (x1 - x0).
/// target = 1/2 gives the slice-projection of the midpoint. The first root
/// found from the bracket [0, 1] is returned.
SlicePoint slice_project(const Space& space, const ProximalSet& set, const Vector& x0,
                         const Vector& x1, const SlicerParams& params = {},
                         double target = 0.5);

struct WaistCheck {
  bool applicable{false};  // ||x0 - x1|| / R < omega^{-1}(1/8)
  double bound{0.0};       // R'(||x0 - x1||, R)
  double deviation{0.0};   // ||slice - (x0 + x1)/2||
  double margin{0.0};      // bound - deviation
};

/// Compares the slice point's distance to the chord midpoint with R'(d, R).
WaistCheck waist_check(const Space& space, const ModulusModel& model, const SlicePoint& slice,
                       const Vector& x0, const Vector& x1, double reach);

}  // namespace proxcurve
