#include "proxcurve/builder.hpp"

#include "proxcurve/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace proxcurve {

FeasibilityReport check_feasibility(const ModulusModel& model, double d, double reach) {
  if (!(d > 0.0) || !(reach > 0.0)) throw std::invalid_argument("check_feasibility: d and R must be positive");
  FeasibilityReport f;
  f.d_over_R = d / reach;
  f.beta_L = beta_L(model);
  f.beta_I = beta_I(model, model.s());
  f.assumption1 = f.d_over_R < waist_limit(model);
  if (f.assumption1) {
    f.mu = mu(model, d, reach);
    f.assumption2 = *f.mu < 2.0;
    f.assumption3 = std::pow(*f.mu, model.s()) / std::pow(2.0, model.s() - 1.0) < 1.0;
  }
  return f;
}

int DyadicCurve::level_of(std::size_t j) const {
  if (j == 0 || j + 1 >= vertices.size()) return 0;
  return depth - std::countr_zero(j);
}

double polyline_length(const Space& space, const DyadicCurve& curve) {
  double total = 0.0;
  for (std::size_t j = 1; j < curve.vertices.size(); ++j) {
    total += space.norm(curve.vertices[j] - curve.vertices[j - 1]);
  }
  return total;
}

DyadicCurve coarsen(const DyadicCurve& curve) {
  if (curve.depth == 0) throw std::invalid_argument("coarsen: depth-0 curve");
  DyadicCurve out;
  out.depth = curve.depth - 1;
  for (std::size_t j = 0; j < curve.vertices.size(); j += 2) out.vertices.push_back(curve.vertices[j]);
  const auto keep = std::min(curve.deltas.size(), static_cast<std::size_t>(out.depth + 1));
  out.deltas.assign(curve.deltas.begin(), curve.deltas.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

namespace {

double max_segment(const Space& space, const std::vector<Vector>& v) {
  double m = 0.0;
  for (std::size_t j = 1; j < v.size(); ++j) m = std::max(m, space.norm(v[j] - v[j - 1]));
  return m;
}

}  // namespace

DyadicCurve build_curve(const Space& space, const ProximalSet& set, const Vector& x0,
                        const Vector& x1, const BuildParams& params) {
  if (params.max_depth < 0 || params.max_depth > kMaxDepthLimit) {
    throw std::invalid_argument("max_depth must lie in [0, 20]");
  }
  space.check_dim(x0);
  space.check_dim(x1);
  const double tol = params.slicer.membership_tol;
  if (!set.contains(space, x0, tol) || !set.contains(space, x1, tol)) {
    throw std::invalid_argument("build_curve: endpoints not in set");
  }

  DyadicCurve curve;
  curve.vertices = {x0, x1};
  const double d = space.norm(x1 - x0);
  curve.deltas = {d};
  if (d == 0.0) return curve;

  const double reach = set.reach();
  const double ratio = d / reach;
  if (!(ratio < 2.0)) throw GateError("build_curve: slice-projection requires d/R < 2");
  const double bl = beta_L(space.modulus());
  if (!(ratio < bl)) {
    if (params.enforce_gates) throw GateError("build_curve: d/R >= beta_L with gates enforced");
    std::ostringstream msg;
    msg << "d/R = " << ratio << " >= beta_L = " << bl << "; length guarantees do not apply";
    curve.warnings.push_back(msg.str());
  }
  const double wl = waist_limit(space.modulus());
  const double delta_stop = params.delta_stop_rel * d;

  for (int level = 1; level <= params.max_depth; ++level) {
    if (curve.deltas.back() <= delta_stop) break;
    const auto& prev = curve.vertices;
    std::vector<Vector> next;
    next.reserve(2 * prev.size() - 1);
    next.push_back(prev.front());
    for (std::size_t j = 1; j < prev.size(); ++j) {
      const Vector& a = prev[j - 1];
      const Vector& b = prev[j];
      if (space.norm(b - a) == 0.0) {
        next.push_back(a);
        next.push_back(b);
        continue;
      }
      try {
        SlicePoint sp = slice_project(space, set, a, b, params.slicer);
        if (sp.discontinuity) {
          std::ostringstream msg;
          msg << "level " << level << " node " << (2 * j - 1)
              << ": residual discontinuity, best bracket point used";
          curve.warnings.push_back(msg.str());
        }
        if (!(space.norm(b - a) / reach < wl) && level > 1) {
          std::ostringstream msg;
          msg << "level " << level << " node " << (2 * j - 1) << ": segment outside waist range";
          curve.warnings.push_back(msg.str());
        }
        next.push_back(std::move(sp.point));
      } catch (const SliceError& e) {
        std::ostringstream msg;
        msg << "slice-projection failed at level " << level << " node " << (2 * j - 1) << ": "
            << e.what();
        throw BuildError(msg.str(), curve);
      }
      next.push_back(b);
    }
    curve.vertices = std::move(next);
    curve.depth = level;
    curve.deltas.push_back(max_segment(space, curve.vertices));
  }
  return curve;
}

}  // namespace proxcurve
