#pragma once

// Scalar root finding and 1-D minimization shared by the moduli, set oracles
// and bound evaluators.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace proxcurve::numeric {

inline constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

/// Solves f(x) = target for a nondecreasing f on [lo, hi] by bisection.
/// Stops when the bracket is below rel_tol * max(|x|, tiny) or after
/// max_iter halvings. Requires f(lo) <= target <= f(hi).
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi,
                         double rel_tol = 1e-10, int max_iter = 200) {
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double scale = std::max(std::abs(hi), std::numeric_limits<double>::min());
    if (hi - lo <= rel_tol * scale) break;
  }
  return 0.5 * (lo + hi);
}

/// Finds hi >= start with f(hi) >= target by repeated doubling.
/// Throws std::domain_error if target is not reached before `limit`.
template <class F>
double expand_upper_bracket(F&& f, double target, double start = 1.0,
                            double limit = 1e12) {
  double hi = start;
  while (f(hi) < target) {
    hi *= 2.0;
    if (hi > limit) {
      throw std::domain_error("value outside attainable range of monotone map");
    }
  }
  return hi;
}

struct MinResult {
  double x;
  double value;
};

/// Golden-section minimization of a unimodal f on [a, b].
template <class F>
MinResult golden_minimize(F&& f, double a, double b, double x_tol = 1e-12,
                          int max_iter = 200) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? MinResult{c, fc} : MinResult{d, fd};
}

/// Golden-section maximization; convenience wrapper.
template <class F>
MinResult golden_maximize(F&& f, double a, double b, double x_tol = 1e-12,
                          int max_iter = 200) {
  auto r = golden_minimize([&](double x) { return -f(x); }, a, b, x_tol, max_iter);
  return {r.x, -r.value};
}

}  // namespace proxcurve::numeric
