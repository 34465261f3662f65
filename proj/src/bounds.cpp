#include "proxcurve/bounds.hpp"

#include "proxcurve/numeric.hpp"

#include <cmath>

namespace proxcurve {

namespace {

double contraction_gap(double s, double mu_val) {
  return 1.0 - std::pow(mu_val, s) / std::pow(2.0, s - 1.0);
}

}  // namespace

double r_prime(const ModulusModel& model, double tau, double reach) {
  if (!(tau >= 0.0) || !(reach > 0.0)) throw std::domain_error("r_prime: invalid arguments");
  const double w8 = 8.0 * model.omega(tau / reach);
  if (w8 >= 1.0) throw std::domain_error("r_prime: outside R' domain (8 omega(tau/R) >= 1)");
  return tau * w8 / (1.0 - w8);
}

double mu(const ModulusModel& model, double d, double reach) {
  if (d == 0.0) return 1.0;
  return model.zeta_plus(2.0 * r_prime(model, d, reach) / d);
}

double beta_L(const ModulusModel& model) {
  const double z = model.zeta_plus_inv(2.0);
  return model.omega_inv(z / (8.0 * (2.0 + z)));
}

double waist_limit(const ModulusModel& model) { return model.omega_inv(0.125); }

double beta_I(const ModulusModel& model, double s) {
  if (!(s > 1.0 && s <= 2.0)) throw std::domain_error("beta_I: s must lie in (1, 2]");
  const double two_pow = std::pow(2.0, s - 1.0);
  auto ratio = [&](double beta) { return std::pow(mu(model, beta, 1.0), s) / two_pow; };
  const double hi = waist_limit(model) * (1.0 - 1e-9);
  if (ratio(hi) < 1.0) return hi;
  return numeric::bisect_increasing(ratio, 1.0, 0.0, hi, 1e-12, 400);
}

double midpoint_dist_bound(const ModulusModel& model, double d, double reach, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in [0, 1]");
  if (!(d >= 0.0) || !(reach > 0.0) || !(d / reach < 2.0)) {
    throw std::domain_error("midpoint_dist_bound: requires 0 <= d/R < 2");
  }
  return 8.0 * reach * lambda * (1.0 - lambda) * model.rho(d / reach);
}

double waist_bound(const ModulusModel& model, double d, double reach, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in [0, 1]");
  return 4.0 * lambda * (1.0 - lambda) * r_prime(model, d, reach);
}

double length_bound(const ModulusModel& model, double s, double c_sm, double d, double reach) {
  if (!(d / reach < beta_L(model))) throw GateError("length_bound: requires d/R < beta_L");
  const double m = mu(model, d, reach);
  const double e = s * (s - 1.0);
  const double exponent = std::pow(16.0 / 5.0, s) * std::pow(c_sm, s + 1.0) /
                          (1.0 - std::pow(m / 2.0, e)) * std::pow(d / (2.0 * reach), e);
  return d * std::exp(exponent);
}

double inclusion_radius(const ModulusModel& model, double s, double c_sm, double d,
                        double reach) {
  if (!(d / reach < beta_I(model, s))) throw GateError("inclusion_radius: requires d/R < beta_I");
  const double q = contraction_gap(s, mu(model, d, reach));
  return (1.0 / q) * (400.0 * c_sm / q) * d * std::pow(d / reach, s - 1.0);
}

double delta_decay_bound(double mu_val, double delta0, int i) {
  return std::pow(mu_val / 2.0, i) * delta0;
}

double cylinder_bound(double s, double c_sm, double mu_val, double delta0, double reach) {
  return 48.0 * c_sm / contraction_gap(s, mu_val) * std::pow(delta0 / reach, s - 1.0) * delta0;
}

double g2_floor(double delta0) { return delta0 / 4.0; }

double claim_sum_bound(double s, double c_sm, double mu_val, double delta0, double reach, int k) {
  return 24.0 * c_sm / contraction_gap(s, mu_val) * std::pow(delta0 / reach, s - 1.0) *
         std::ldexp(delta0, -k);
}

double claim_sum_partial(const ModulusModel& model, double mu_val, double delta0, double reach,
                         int k) {
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double delta_j = delta_decay_bound(mu_val, delta0, j);
    sum += std::ldexp(r_prime(model, delta_j, reach), -(k - j));
  }
  return sum;
}

double claim_bounder_rhs(const ModulusModel& model, double s, double c_sm, double mu_val,
                         double delta0, double reach) {
  if (!(delta0 / reach < beta_L(model))) {
    throw GateError("claim_bounder_rhs: requires delta0/R < beta_L");
  }
  const double e = s * (s - 1.0);
  return std::exp(std::pow(16.0 / 5.0, s) * std::pow(c_sm, s + 1.0) /
                  (1.0 - std::pow(mu_val / 2.0, e)) * std::pow(delta0 / reach, e));
}

double claim_bounder_series(const ModulusModel& model, double mu_val, double delta0,
                            double reach) {
  double sum = 0.0;
  double tau = delta0;
  for (int i = 0; i < 10000 && tau > 0.0; ++i) {
    const double term = model.zeta_plus(2.0 * r_prime(model, tau, reach) / tau) - 1.0;
    sum += term;
    if (term < 1e-16) break;
    tau *= mu_val / 2.0;
  }
  return std::exp(sum);
}

BoundsContext BoundsContext::make(const ModulusModel& model, double d, double reach) {
  BoundsContext c{.model = model, .s = model.s(), .c_sm = model.c_sm(), .d = d, .reach = reach};
  c.beta_L = proxcurve::beta_L(model);
  c.beta_I = proxcurve::beta_I(model, c.s);
  c.waist_limit = proxcurve::waist_limit(model);
  const double ratio = d / reach;
  if (d > 0.0 && ratio < c.waist_limit) {
    c.r_prime = proxcurve::r_prime(model, d, reach);
    c.mu = proxcurve::mu(model, d, reach);
  }
  if (d > 0.0 && ratio < c.beta_L) c.length_bound = proxcurve::length_bound(model, c.s, c.c_sm, d, reach);
  if (d > 0.0 && ratio < c.beta_I) {
    c.inclusion_radius = proxcurve::inclusion_radius(model, c.s, c.c_sm, d, reach);
    c.cylinder_bound = proxcurve::cylinder_bound(c.s, c.c_sm, *c.mu, d, reach);
  }
  return c;
}

}  // namespace proxcurve
