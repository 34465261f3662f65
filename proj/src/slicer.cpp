#include "proxcurve/slicer.hpp"

#include "proxcurve/bounds.hpp"

#include <cmath>
#include <limits>

namespace proxcurve {

double mid_residual(const Space& space, const Vector& x0, const Vector& x1, const Vector& a) {
  const Vector chord = x1 - x0;
  if (space.norm(chord) == 0.0) throw std::invalid_argument("coincident endpoints");
  return space.quasi_orth_defect(chord, a - 0.5 * (x0 + x1));
}

SlicePoint slice_project(const Space& space, const ProximalSet& set, const Vector& x0,
                         const Vector& x1, const SlicerParams& params, double target) {
  space.check_dim(x0);
  space.check_dim(x1);
  const Vector chord = x1 - x0;
  const double d = space.norm(chord);
  if (d == 0.0) throw std::invalid_argument("coincident endpoints");
  if (!set.contains(space, x0, params.membership_tol) ||
      !set.contains(space, x1, params.membership_tol)) {
    throw std::invalid_argument("slice_project: endpoints not in set");
  }
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("slice target must lie in (0, 1)");

  const Vector functional = space.dual_functional(chord);
  const Vector anchor = x0 + target * chord;
  const Vector mid = 0.5 * (x0 + x1);
  auto make_point = [&](double lambda, Vector a, double residual, int iters) {
    SlicePoint sp;
    sp.lambda = lambda;
    sp.dist_to_mid = space.norm(a - mid);
    sp.point = std::move(a);
    sp.residual = residual;
    sp.iterations = iters;
    return sp;
  };

  const double tol = params.residual_tol * d;
  double lo = 0.0;
  double hi = 1.0;
  double h_lo = -target * d;
  double h_hi = (1.0 - target) * d;
  SlicePoint best = make_point(0.0, x0, h_lo, 0);

  int it = 0;
  for (; it < params.max_iter; ++it) {
    const double lambda = 0.5 * (lo + hi);
    Vector a = set.project(space, x0 + lambda * chord);
    const double h = functional.dot(a - anchor);
    if (std::abs(h) < std::abs(best.residual)) best = make_point(lambda, a, h, it + 1);
    if (std::abs(h) <= tol) return make_point(lambda, std::move(a), h, it + 1);
    if (h < 0.0) {
      lo = lambda;
      h_lo = h;
    } else {
      hi = lambda;
      h_hi = h;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
  best.iterations = it;
  if (h_hi - h_lo > 0.5 * d) {
    // projection oracle is multi-valued near the collapsed bracket
    best.discontinuity = true;
    return best;
  }
  throw SliceError("slice_project: residual tolerance not reached", best);
}

WaistCheck waist_check(const Space& space, const ModulusModel& model, const SlicePoint& slice,
                       const Vector& x0, const Vector& x1, double reach) {
  WaistCheck w;
  const double d = space.norm(x1 - x0);
  w.deviation = space.norm(slice.point - 0.5 * (x0 + x1));
  if (d == 0.0 || !(d / reach < waist_limit(model))) return w;
  w.applicable = true;
  w.bound = r_prime(model, d, reach);
  w.margin = w.bound - w.deviation;
  return w;
}

}  // namespace proxcurve
