#include "proxcurve/hull.hpp"

#include "proxcurve/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxcurve {

namespace {
constexpr double kWeightTol = 1e-10;
}

double hull_margin(const Space& space, const Vector& x0, const Vector& x1, const Vector& mid,
                   double r, const Vector& z) {
  if (!(r >= 0.0)) throw std::invalid_argument("hull radius must be non-negative");
  const Vector a = x0 - mid;
  const Vector b = x1 - mid;
  const Vector zc = z - mid;
  // z - alpha x0 - beta x1 - gamma mid = zc - alpha a - beta b
  auto objective = [&](double alpha, double beta) {
    const double gamma = 1.0 - alpha - beta;
    return space.norm(zc - alpha * a - beta * b) - gamma * r;
  };
  auto inner = [&](double alpha) {
    const double top = std::max(0.0, 1.0 - alpha);
    return numeric::golden_minimize([&](double beta) { return objective(alpha, beta); }, 0.0,
                                    top, kWeightTol)
        .value;
  };
  double best = numeric::golden_minimize(inner, 0.0, 1.0, kWeightTol).value;
  // vertices of the weight simplex, where golden search only approaches
  best = std::min({best, objective(1.0, 0.0), objective(0.0, 1.0), objective(0.0, 0.0)});
  return best;
}

bool hull_membership(const Space& space, const Vector& x0, const Vector& x1, const Vector& mid,
                     double r, const Vector& z, double tol) {
  return hull_margin(space, x0, x1, mid, r, z) <= tol;
}

}  // namespace proxcurve
