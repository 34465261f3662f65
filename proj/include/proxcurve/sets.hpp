#pragma once

// Proximally smooth test sets with distance and metric-projection oracles.

#include "proxcurve/space.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace proxcurve {

/// A closed set with a declared proximal-smoothness constant R.
///
/// The constant is a configuration assertion; validate_support_ball checks it
/// empirically. Oracles are pure and safe to call concurrently.
class ProximalSet {
 public:
  enum class Kind { ball_complement, sphere, parametric_curve_2d };
  using CurveMap = std::function<Vector(double)>;

  /// Complement of the open ball B(center, radius).
  static ProximalSet ball_complement(Vector center, double radius, double reach);
  /// Sphere {x : ||x - center|| = radius}.
  static ProximalSet sphere(Vector center, double radius, double reach);
  /// Image of `curve` over [t_min, t_max] in a 2-D space.
  static ProximalSet parametric_curve(CurveMap curve, double t_min, double t_max, double reach,
                                      std::string name = "curve");
  /// Parabola arc t -> (t, alpha t^2), t in [t_min, t_max]. When reach <= 0
  /// the Euclidean default 1 / (2 alpha) is used.
  static ProximalSet parabola(double alpha, double t_min = -1.0, double t_max = 1.0,
                              double reach = 0.0);

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  /// Declared constant R.
  double reach() const { return reach_; }
  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  double alpha() const { return alpha_; }
  const std::string& curve_name() const { return curve_name_; }
  Vector curve_point(double t) const { return curve_(t); }

  double distance(const Space& space, const Vector& x) const;
  /// Metric projection. Throws std::invalid_argument at the center of a
  /// ball complement or sphere, where every boundary point is nearest.
  Vector project(const Space& space, const Vector& x) const;
  bool contains(const Space& space, const Vector& x, double tol) const;

  /// Parameter of the nearest curve point (parametric curves only).
  double project_parameter(const Space& space, const Vector& x) const;

  /// Random point of the set boundary.
  Vector sample_boundary(const Space& space, std::mt19937_64& rng) const;

  /// A boundary point at norm-distance d from x0, moving along the boundary
  /// in the positive direction (angle in the (0, 1) coordinate plane, or
  /// curve parameter). x0 must lie on the boundary.
  Vector point_at_distance(const Space& space, const Vector& x0, double d) const;

 private:
  ProximalSet() = default;

  Kind kind_{Kind::ball_complement};
  Vector center_;
  double radius_{0.0};
  double reach_{0.0};
  CurveMap curve_;
  double t_min_{0.0};
  double t_max_{0.0};
  double alpha_{0.0};
  std::string curve_name_;
};

struct SupportBallFailure {
  std::size_t index;
  double margin;
};

struct SupportBallReport {
  std::size_t checked{0};
  std::vector<std::size_t> skipped;  // samples outside the open R-neighborhood
  std::vector<SupportBallFailure> failures;
  double worst_margin{0.0};
  bool pass() const { return failures.empty(); }
};

/// For each u with 0 < dist(u) < R and x = P(u), checks
/// dist(x + R (u - x) / ||u - x||) >= R - tol.
SupportBallReport validate_support_ball(const Space& space, const ProximalSet& set,
                                        const std::vector<Vector>& samples, double tol);

/// Random points of the open R-neighborhood of the set.
std::vector<Vector> sample_neighborhood(const Space& space, const ProximalSet& set,
                                        std::size_t count, std::uint64_t seed);

}  // namespace proxcurve
