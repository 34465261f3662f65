#pragma once

// Normed-space engine for l_p^n, 1 < p < infinity: norms, the duality
// mapping, quasi-orthogonality and the smoothness moduli rho, omega, zeta+.

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace proxcurve {

using Vector = Eigen::VectorXd;

/// Model of the modulus of smoothness rho_X used by every bound.
///
/// exact_hilbert: rho(t) = sqrt(1 + t^2) - 1, zeta+(e) = sqrt(1 + e^2).
/// power_profile: rho(t) = C_sm * t^s (an upper bound on the true modulus).
/// numeric_table: piecewise-linear interpolation of sampled values, with
///                rho(t1) (t / t1)^s below the first node t1.
///
/// For the non-Hilbert kinds zeta+ is replaced by its upper envelope
/// 1 + min(rho(2e), e) for e <= 1/2 and 1 + e beyond, so every quantity
/// derived from the model over-estimates the true one.
class ModulusModel {
 public:
  enum class Kind { exact_hilbert, power_profile, numeric_table };

  static ModulusModel hilbert();
  static ModulusModel power(double s, double c_sm);
  /// `taus` strictly increasing and positive; (0, 0) is implied.
  /// `s`, `c_sm` are the power-type constants used by the bound formulas.
  static ModulusModel table(std::vector<double> taus, std::vector<double> rhos,
                            double s, double c_sm);
  /// Standard power-type profile for l_p: s = min(p, 2),
  /// C_sm = 1/p for p <= 2 and (p - 1)/2 for p >= 2.
  static ModulusModel lp_default(double p);

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  /// Power type s in (1, 2].
  double s() const { return s_; }
  /// Constant C_sm with rho(t) <= C_sm t^s.
  double c_sm() const { return c_sm_; }
  const std::vector<double>& table_taus() const { return taus_; }
  const std::vector<double>& table_rhos() const { return rhos_; }

  double rho(double tau) const;
  /// rho(tau) / tau, extended by continuity to omega(0) = 0.
  double omega(double tau) const;
  double omega_inv(double y) const;
  double zeta_plus(double eps) const;
  double zeta_plus_inv(double v) const;
  /// Largest argument for which rho is defined (infinity except for tables).
  double max_tau() const;

 private:
  ModulusModel(Kind kind, double s, double c_sm) : kind_(kind), s_(s), c_sm_(c_sm) {}

  Kind kind_;
  double s_;
  double c_sm_;
  std::vector<double> taus_;
  std::vector<double> rhos_;
};

/// l_p^n together with the modulus model that drives bounds.
class Space {
 public:
  Space(double p, int dim, ModulusModel modulus);
  /// l_p^n with ModulusModel::hilbert() for p = 2 and lp_default otherwise.
  static Space lp(double p, int dim);

  double p() const { return p_; }
  /// Conjugate exponent q, 1/p + 1/q = 1.
  double q() const { return p_ / (p_ - 1.0); }
  int dim() const { return dim_; }
  const ModulusModel& modulus() const { return modulus_; }

  double norm(const Vector& x) const;
  double dual_norm(const Vector& f) const;
  /// The unique unit functional attaining its norm on x != 0,
  /// in dual coordinates: sign(x_i) |x_i|^{p-1} / ||x||^{p-1}.
  Vector dual_functional(const Vector& x) const;
  /// <J(x), y>; zero iff y is quasi-orthogonal to x.
  double quasi_orth_defect(const Vector& x, const Vector& y) const;

  void check_dim(const Vector& x) const;

 private:
  double p_;
  int dim_;
  ModulusModel modulus_;
};

/// Lower estimate of sup{(||x+y|| + ||x-y||)/2 - 1 : ||x|| = 1, ||y|| = tau}
/// sampled over 2-D coordinate sections with golden-section refinement.
/// `budget` is the number of coarse samples; throws on budget == 0.
double estimate_rho(const Space& space, double tau, std::size_t budget,
                    std::uint64_t seed = 0);

/// Lower estimate of sup{||x + eps y|| : ||x|| = ||y|| = 1, y quasi-orth x}.
double estimate_zeta_plus(const Space& space, double eps, std::size_t budget,
                          std::uint64_t seed = 0);

/// Samples estimate_rho on `taus` and wraps them as a numeric_table model.
ModulusModel estimate_table(const Space& space, const std::vector<double>& taus,
                            std::size_t budget, std::uint64_t seed = 0);

}  // namespace proxcurve
