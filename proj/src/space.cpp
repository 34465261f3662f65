#include "proxcurve/space.hpp"

#include "proxcurve/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace proxcurve {

ModulusModel ModulusModel::hilbert() { return ModulusModel(Kind::exact_hilbert, 2.0, 0.5); }

ModulusModel ModulusModel::power(double s, double c_sm) {
  if (!(s > 1.0 && s <= 2.0)) throw std::invalid_argument("power type s must lie in (1, 2]");
  if (!(c_sm > 0.0)) throw std::invalid_argument("C_sm must be positive");
  return ModulusModel(Kind::power_profile, s, c_sm);
}

ModulusModel ModulusModel::table(std::vector<double> taus, std::vector<double> rhos, double s,
                                 double c_sm) {
  if (taus.empty() || taus.size() != rhos.size()) {
    throw std::invalid_argument("numeric table needs matching non-empty tau/rho arrays");
  }
  double prev_tau = 0.0;
  double prev_rho = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > prev_tau) || !(rhos[i] > prev_rho) || !std::isfinite(rhos[i])) {
      throw std::invalid_argument("numeric table must be strictly increasing from (0, 0)");
    }
    const double slack = 1e-9 * (1.0 + taus[i]);
    if (rhos[i] < std::hypot(1.0, taus[i]) - 1.0 - slack || rhos[i] > taus[i] + slack) {
      throw std::invalid_argument("numeric table violates sqrt(1 + t^2) - 1 <= rho(t) <= t");
    }
    if (i > 0) {
      const double before = (rhos[i - 1] - (i > 1 ? rhos[i - 2] : 0.0)) /
                            (taus[i - 1] - (i > 1 ? taus[i - 2] : 0.0));
      const double after = (rhos[i] - rhos[i - 1]) / (taus[i] - taus[i - 1]);
      if (after < before * (1.0 - 1e-9)) throw std::invalid_argument("numeric table is not convex");
    }
    prev_tau = taus[i];
    prev_rho = rhos[i];
  }
  ModulusModel m(Kind::numeric_table, s, c_sm);
  m.taus_ = std::move(taus);
  m.rhos_ = std::move(rhos);
  return m;
}

ModulusModel ModulusModel::lp_default(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in (1, inf)");
  if (p == 2.0) return hilbert();
  if (p < 2.0) return power(p, 1.0 / p);
  return power(2.0, (p - 1.0) / 2.0);
}

std::string ModulusModel::kind_name() const {
  switch (kind_) {
    case Kind::exact_hilbert: return "exact_hilbert";
    case Kind::power_profile: return "power";
    case Kind::numeric_table: return "numeric_table";
  }
  return "unknown";
}

double ModulusModel::max_tau() const {
  return kind_ == Kind::numeric_table ? taus_.back() : std::numeric_limits<double>::infinity();
}

double ModulusModel::rho(double tau) const {
  if (!(tau >= 0.0)) throw std::domain_error("rho: tau must be non-negative");
  switch (kind_) {
    case Kind::exact_hilbert:
      // sqrt(1 + t^2) - 1 without cancellation
      return tau * tau / (std::sqrt(1.0 + tau * tau) + 1.0);
    case Kind::power_profile:
      return c_sm_ * std::pow(tau, s_);
    case Kind::numeric_table: {
      if (tau > taus_.back()) throw std::domain_error("rho: tau outside numeric table range");
      auto it = std::lower_bound(taus_.begin(), taus_.end(), tau);
      const auto i = static_cast<std::size_t>(it - taus_.begin());
      if (i == 0) return rhos_[0] * std::pow(tau / taus_[0], s_);
      const double t0 = taus_[i - 1];
      const double r0 = rhos_[i - 1];
      const double w = (tau - t0) / (taus_[i] - t0);
      return r0 + w * (rhos_[i] - r0);
    }
  }
  return 0.0;
}

double ModulusModel::omega(double tau) const {
  if (!(tau >= 0.0)) throw std::domain_error("omega: tau must be non-negative");
  if (tau == 0.0) return 0.0;
  if (kind_ == Kind::exact_hilbert) return tau / (std::sqrt(1.0 + tau * tau) + 1.0);
  return rho(tau) / tau;
}

double ModulusModel::omega_inv(double y) const {
  if (!(y >= 0.0)) throw std::domain_error("omega_inv: argument must be non-negative");
  if (y == 0.0) return 0.0;
  auto f = [this](double t) { return omega(t); };
  double hi;
  if (kind_ == Kind::numeric_table) {
    hi = taus_.back();
    if (omega(hi) < y) throw std::domain_error("omega_inv: value outside numeric table range");
  } else {
    hi = numeric::expand_upper_bracket(f, y);
  }
  return numeric::bisect_increasing(f, y, 0.0, hi);
}

double ModulusModel::zeta_plus(double eps) const {
  if (!(eps >= 0.0)) throw std::domain_error("zeta_plus: eps must be non-negative");
  if (kind_ == Kind::exact_hilbert) return std::hypot(1.0, eps);
  if (eps > 0.5) return 1.0 + eps;
  return 1.0 + std::min(rho(2.0 * eps), eps);
}

double ModulusModel::zeta_plus_inv(double v) const {
  if (!(v >= 1.0)) throw std::domain_error("zeta_plus_inv: argument must be >= 1");
  if (v == 1.0) return 0.0;
  if (kind_ == Kind::exact_hilbert) return std::sqrt((v - 1.0) * (v + 1.0));
  auto f = [this](double e) { return zeta_plus(e); };
  const double hi = numeric::expand_upper_bracket(f, v);
  return numeric::bisect_increasing(f, v, 0.0, hi);
}

Space::Space(double p, int dim, ModulusModel modulus)
    : p_(p), dim_(dim), modulus_(std::move(modulus)) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("l_p space requires 1 < p < inf (not uniformly smooth otherwise)");
  }
  if (dim < 2) throw std::invalid_argument("space dimension must be at least 2");
}

Space Space::lp(double p, int dim) { return Space(p, dim, ModulusModel::lp_default(p)); }

void Space::check_dim(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
}

namespace {

double lp_norm(const Vector& x, double p) {
  if (p == 2.0) return x.norm();
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0 || !std::isfinite(m)) return m;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

}  // namespace

double Space::norm(const Vector& x) const {
  check_dim(x);
  return lp_norm(x, p_);
}

double Space::dual_norm(const Vector& f) const {
  check_dim(f);
  return lp_norm(f, q());
}

Vector Space::dual_functional(const Vector& x) const {
  const double n = norm(x);
  if (n == 0.0) throw std::invalid_argument("dual functional of the zero vector is undefined");
  Vector j(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]) / n;
    j[i] = std::copysign(p_ == 2.0 ? a : std::pow(a, p_ - 1.0), x[i]);
    if (x[i] == 0.0) j[i] = 0.0;
  }
  return j;
}

double Space::quasi_orth_defect(const Vector& x, const Vector& y) const {
  check_dim(y);
  return dual_functional(x).dot(y);
}

}  // namespace proxcurve
