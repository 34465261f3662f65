#include "proxcurve/sets.hpp"

#include "proxcurve/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace proxcurve {

namespace {

constexpr int kProjectionStarts = 64;
constexpr double kParamTol = 1e-12;

}  // namespace

ProximalSet ProximalSet::ball_complement(Vector center, double radius, double reach) {
  if (!(radius > 0.0) || !(reach > 0.0)) throw std::invalid_argument("radius and R must be positive");
  ProximalSet s;
  s.kind_ = Kind::ball_complement;
  s.center_ = std::move(center);
  s.radius_ = radius;
  s.reach_ = reach;
  return s;
}

ProximalSet ProximalSet::sphere(Vector center, double radius, double reach) {
  ProximalSet s = ball_complement(std::move(center), radius, reach);
  s.kind_ = Kind::sphere;
  return s;
}

ProximalSet ProximalSet::parametric_curve(CurveMap curve, double t_min, double t_max,
                                          double reach, std::string name) {
  if (!(t_max > t_min)) throw std::invalid_argument("curve parameter interval is empty");
  if (!(reach > 0.0)) throw std::invalid_argument("R must be positive");
  ProximalSet s;
  s.kind_ = Kind::parametric_curve_2d;
  s.curve_ = std::move(curve);
  s.t_min_ = t_min;
  s.t_max_ = t_max;
  s.reach_ = reach;
  s.curve_name_ = std::move(name);
  s.center_ = Vector::Zero(2);
  return s;
}

ProximalSet ProximalSet::parabola(double alpha, double t_min, double t_max, double reach) {
  if (!(alpha > 0.0)) throw std::invalid_argument("parabola curvature alpha must be positive");
  if (reach <= 0.0) reach = 1.0 / (2.0 * alpha);
  auto map = [alpha](double t) {
    Vector v(2);
    v << t, alpha * t * t;
    return v;
  };
  ProximalSet s = parametric_curve(map, t_min, t_max, reach, "parabola");
  s.alpha_ = alpha;
  return s;
}

std::string ProximalSet::kind_name() const {
  switch (kind_) {
    case Kind::ball_complement: return "ball_complement";
    case Kind::sphere: return "sphere";
    case Kind::parametric_curve_2d: return "parametric_curve_2d";
  }
  return "unknown";
}

double ProximalSet::project_parameter(const Space& space, const Vector& x) const {
  if (kind_ != Kind::parametric_curve_2d) {
    throw std::logic_error("project_parameter is defined for parametric curves only");
  }
  auto dist = [&](double t) { return space.norm(x - curve_(t)); };
  const double h = (t_max_ - t_min_) / (kProjectionStarts - 1);
  double best_t = t_min_;
  double best_d = dist(t_min_);
  auto consider = [&](double t, double d) {
    // ties go to the smallest parameter
    if (d < best_d || (d == best_d && t < best_t)) {
      best_d = d;
      best_t = t;
    }
  };
  std::vector<double> coarse(kProjectionStarts);
  for (int k = 0; k < kProjectionStarts; ++k) coarse[k] = dist(t_min_ + k * h);
  consider(t_max_, coarse.back());
  for (int k = 0; k < kProjectionStarts; ++k) {
    const bool left_ok = k == 0 || coarse[k] <= coarse[k - 1];
    const bool right_ok = k + 1 == kProjectionStarts || coarse[k] <= coarse[k + 1];
    if (!left_ok || !right_ok) continue;
    const double t = t_min_ + k * h;
    const double lo = std::max(t_min_, t - h);
    const double hi = std::min(t_max_, t + h);
    const auto r = numeric::golden_minimize(dist, lo, hi, kParamTol);
    consider(r.x, r.value);
  }
  if (best_d == 0.0) return best_t;

  // Polish on the sign of d/dt ||x - c(t)|| = <J(c(t) - x), c'(t)>.
  const double fd_step = 1e-5 * (t_max_ - t_min_);
  auto slope = [&](double t) {
    const Vector tangent = (curve_(t + fd_step) - curve_(t - fd_step)) / (2.0 * fd_step);
    const Vector off = curve_(t) - x;
    if (space.norm(off) == 0.0) return 0.0;
    return space.dual_functional(off).dot(tangent);
  };
  const double width = 1e-6 * (t_max_ - t_min_);
  const double lo = std::max(t_min_, best_t - width);
  const double hi = std::min(t_max_, best_t + width);
  if (!(slope(lo) < 0.0 && slope(hi) > 0.0)) return best_t;
  return numeric::bisect_increasing(slope, 0.0, lo, hi, 1e-16, 200);
}

double ProximalSet::distance(const Space& space, const Vector& x) const {
  space.check_dim(x);
  switch (kind_) {
    case Kind::ball_complement:
      return std::max(0.0, radius_ - space.norm(x - center_));
    case Kind::sphere:
      return std::abs(space.norm(x - center_) - radius_);
    case Kind::parametric_curve_2d:
      return space.norm(x - curve_(project_parameter(space, x)));
  }
  return 0.0;
}

Vector ProximalSet::project(const Space& space, const Vector& x) const {
  space.check_dim(x);
  if (kind_ == Kind::parametric_curve_2d) return curve_(project_parameter(space, x));

  const Vector offset = x - center_;
  const double r = space.norm(offset);
  if (kind_ == Kind::ball_complement && r >= radius_) return x;
  if (r == 0.0) throw std::invalid_argument("projection of the center is not unique");
  return center_ + (radius_ / r) * offset;
}

bool ProximalSet::contains(const Space& space, const Vector& x, double tol) const {
  return distance(space, x) <= tol;
}

Vector ProximalSet::sample_boundary(const Space& space, std::mt19937_64& rng) const {
  if (kind_ == Kind::parametric_curve_2d) {
    std::uniform_real_distribution<double> t(t_min_, t_max_);
    return curve_(t(rng));
  }
  std::normal_distribution<double> g(0.0, 1.0);
  Vector u(space.dim());
  do {
    for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = g(rng);
  } while (u.norm() < 1e-12);
  return center_ + (radius_ / space.norm(u)) * u;
}

Vector ProximalSet::point_at_distance(const Space& space, const Vector& x0, double d) const {
  if (!(d >= 0.0)) throw std::invalid_argument("chord length must be non-negative");
  if (d == 0.0) return x0;

  std::function<Vector(double)> walk;
  double max_step;
  if (kind_ == Kind::parametric_curve_2d) {
    const double t0 = project_parameter(space, x0);
    max_step = t_max_ - t0;
    walk = [this, t0](double dt) { return curve_(t0 + dt); };
  } else {
    const Vector rel = x0 - center_;
    const double a0 = std::atan2(rel[1], rel[0]);
    const Vector base = rel;
    max_step = std::numbers::pi;
    walk = [this, &space, a0, base](double da) {
      Vector u = base;
      u[0] = std::cos(a0 + da);
      u[1] = std::sin(a0 + da);
      // keep the coordinates outside the rotation plane, rescale to the sphere
      return Vector(center_ + (radius_ / space.norm(u)) * u);
    };
    if (std::abs(space.norm(rel) - radius_) > 1e-9 * radius_) {
      throw std::invalid_argument("point_at_distance: start point is not on the sphere");
    }
    if (rel.size() > 2 && rel.tail(rel.size() - 2).squaredNorm() > 0.0) {
      throw std::invalid_argument("point_at_distance: start point must lie in the (0,1) plane");
    }
  }
  auto chord = [&](double s) { return space.norm(walk(s) - x0); };
  if (chord(max_step) < d) throw std::invalid_argument("point_at_distance: chord too long");
  const double step = numeric::bisect_increasing(chord, d, 0.0, max_step, 1e-15, 400);
  return walk(step);
}

SupportBallReport validate_support_ball(const Space& space, const ProximalSet& set,
                                        const std::vector<Vector>& samples, double tol) {
  SupportBallReport report;
  const double reach = set.reach();
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Vector& u = samples[i];
    const double du = set.distance(space, u);
    if (!(du > 0.0 && du < reach)) {
      report.skipped.push_back(i);
      continue;
    }
    const Vector x = set.project(space, u);
    const Vector dir = u - x;
    const Vector probe = x + (reach / space.norm(dir)) * dir;
    const double margin = set.distance(space, probe) - reach;
    ++report.checked;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -tol) report.failures.push_back({i, margin});
  }
  if (report.checked == 0) report.worst_margin = 0.0;
  return report;
}

std::vector<Vector> sample_neighborhood(const Space& space, const ProximalSet& set,
                                        std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  std::vector<Vector> out;
  out.reserve(count);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 100 * count + 100) {
    ++attempts;
    const Vector b = set.sample_boundary(space, rng);
    Vector dir(space.dim());
    for (Eigen::Index i = 0; i < dir.size(); ++i) dir[i] = g(rng);
    const double n = space.norm(dir);
    if (n < 1e-12) continue;
    const Vector u = b + (frac(rng) * set.reach() / n) * dir;
    const double du = set.distance(space, u);
    if (du > 0.0 && du < set.reach()) out.push_back(u);
  }
  return out;
}

}  // namespace proxcurve
