#pragma once

// Closed-form quantities and inequalities controlling the constructed curve:
// the distortion R', the contraction factor mu, the thresholds beta_L and
// beta_I, the length bound, the inclusion radius and the auxiliary sums.
//
// `model` feeds rho / omega / zeta+; (s, c_sm) are the power-type constants
// appearing explicitly in the length and inclusion constants.

#include "proxcurve/space.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace proxcurve {

/// A requested bound is outside the regime where it is proven.
class GateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// R'(tau, R) = tau * 8 omega(tau/R) / (1 - 8 omega(tau/R)).
/// Throws std::domain_error when 8 omega(tau/R) >= 1.
double r_prime(const ModulusModel& model, double tau, double reach);

/// mu = zeta+(2 R'(d, R) / d); 1 at d = 0.
double mu(const ModulusModel& model, double d, double reach);

/// omega^{-1}(z / (8 (2 + z))) with z = (zeta+)^{-1}(2).
double beta_L(const ModulusModel& model);

/// omega^{-1}(1/8): range of the waist estimate.
double waist_limit(const ModulusModel& model);

/// Supremum of beta with mu(beta R, R)^s / 2^{s-1} < 1, by bisection.
double beta_I(const ModulusModel& model, double s);

/// 8 R lambda (1 - lambda) rho(d / R).
double midpoint_dist_bound(const ModulusModel& model, double d, double reach, double lambda);

/// 4 lambda (1 - lambda) R'(d, R).
double waist_bound(const ModulusModel& model, double d, double reach, double lambda);

/// d exp[(16/5)^s C^{s+1} / (1 - (mu/2)^{s(s-1)}) (d / 2R)^{s(s-1)}].
/// Throws GateError unless d / R < beta_L.
double length_bound(const ModulusModel& model, double s, double c_sm, double d, double reach);

/// 1/q * 400 C / q * d (d/R)^{s-1}, q = 1 - mu^s / 2^{s-1}.
/// Throws GateError unless d / R < beta_I.
double inclusion_radius(const ModulusModel& model, double s, double c_sm, double d, double reach);

/// (mu/2)^i delta0.
double delta_decay_bound(double mu_val, double delta0, int i);

/// 48 C / q (delta0/R)^{s-1} delta0.
double cylinder_bound(double s, double c_sm, double mu_val, double delta0, double reach);

/// delta0 / 4, the floor of g2 on t in [1/2, 1].
double g2_floor(double delta0);

/// 24 C / q (delta0/R)^{s-1} delta0 / 2^k.
double claim_sum_bound(double s, double c_sm, double mu_val, double delta0, double reach, int k);

/// sum_{j=0}^{k} R'((mu/2)^j delta0, R) / 2^{k-j}, summed directly.
double claim_sum_partial(const ModulusModel& model, double mu_val, double delta0, double reach,
                         int k);

/// exp[(16/5)^s C^{s+1} / (1 - (mu/2)^{s(s-1)}) (delta0/R)^{s(s-1)}].
/// Throws GateError unless delta0 / R < beta_L.
double claim_bounder_rhs(const ModulusModel& model, double s, double c_sm, double mu_val,
                         double delta0, double reach);

/// exp[sum_i psi((mu/2)^i delta0)], psi(tau) = zeta+(2 R'(tau, R)/tau) - 1,
/// truncated once terms drop below 1e-16.
double claim_bounder_series(const ModulusModel& model, double mu_val, double delta0,
                            double reach);

/// Snapshot of the derived constants for a pair of endpoints.
struct BoundsContext {
  ModulusModel model = ModulusModel::hilbert();
  double s{2.0};
  double c_sm{0.5};
  double d{0.0};
  double reach{1.0};
  std::optional<double> r_prime;
  std::optional<double> mu;
  double beta_L{0.0};
  double beta_I{0.0};
  double waist_limit{0.0};
  std::optional<double> length_bound;
  std::optional<double> inclusion_radius;
  std::optional<double> cylinder_bound;

  static BoundsContext make(const ModulusModel& model, double d, double reach);
};

}  // namespace proxcurve
