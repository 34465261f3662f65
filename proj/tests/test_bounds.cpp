#include "proxcurve/bounds.hpp"

#include "doctest.h"

#include <cmath>

using namespace proxcurve;

namespace {

const ModulusModel kHilbert = ModulusModel::hilbert();

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("distortion R'") {
  CHECK(r_prime(kHilbert, 0.1, 1.0) == doctest::Approx(0.06639072677).epsilon(1e-9));
  CHECK(r_prime(kHilbert, 0.01, 1.0) == doctest::Approx(4.166558165e-4).epsilon(1e-9));
  CHECK(r_prime(kHilbert, 0.0, 1.0) == 0.0);
  CHECK(r_prime(kHilbert, 1e-6, 1.0) / 1e-6 < 1e-5);
  CHECK_THROWS_AS(r_prime(kHilbert, 0.3, 1.0), std::domain_error);
  // Scale invariance: R'(tau, R) = R R'(tau/R, 1).
  CHECK(r_prime(kHilbert, 0.02, 2.0) == doctest::Approx(2.0 * r_prime(kHilbert, 0.01, 1.0)));
}

TEST_CASE("contraction factor mu") {
  CHECK(mu(kHilbert, 0.01, 1.0) == doctest::Approx(1.0034660347).epsilon(1e-10));
  CHECK(mu(kHilbert, 0.1, 1.0) == doctest::Approx(1.6622549265).epsilon(1e-10));
  CHECK(mu(kHilbert, 0.0, 1.0) == 1.0);
  CHECK(mu(kHilbert, 1e-6, 1.0) < 1.001);
  double prev = 1.0;
  for (int k = 1; k <= 25; ++k) {
    const double m = mu(kHilbert, 0.01 * k, 1.0);
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("thresholds") {
  CHECK(beta_L(kHilbert) == doctest::Approx(0.1164172028).epsilon(1e-9));
  CHECK(waist_limit(kHilbert) == doctest::Approx(16.0 / 63.0).epsilon(1e-9));
  CHECK(beta_I(kHilbert, 2.0) == doctest::Approx(48.0 / 575.0).epsilon(1e-10));
  CHECK_THROWS_AS(beta_I(kHilbert, 1.0), std::domain_error);
  // s -> 1 leaves no room for mu < 1.
  CHECK(beta_I(ModulusModel::power(1.05, 0.9), 1.05) < beta_I(ModulusModel::power(1.5, 0.9), 1.5));
}

TEST_CASE("beta_L of the power profile under the zeta+ envelope") {
  // The envelope gives (zeta+)^{-1}(2) = 1, hence omega = 1/24, beta_L = 1/12.
  const auto m = ModulusModel::power(2.0, 0.5);
  CHECK(beta_L(m) == doctest::Approx(1.0 / 12.0).epsilon(1e-9));
  CHECK(beta_L(m) <= beta_L(kHilbert));
}

TEST_CASE("property: beta_L <= omega^{-1}(1/8) for every shipped model") {
  const std::vector<ModulusModel> models{
      kHilbert,
      ModulusModel::power(2.0, 0.5),
      ModulusModel::power(1.5, 2.0 / 3.0),
      ModulusModel::lp_default(1.2),
      ModulusModel::lp_default(1.5),
      ModulusModel::lp_default(3.0),
      ModulusModel::lp_default(4.0),
      ModulusModel::table({0.05, 0.1, 0.2, 0.5, 1.0, 2.0}, {0.0013, 0.005, 0.02, 0.1181, 0.4143, 1.24},
                          2.0, 0.5)};
  for (const auto& m : models) {
    INFO(m.kind_name() << " s=" << m.s() << " C=" << m.c_sm());
    CHECK(beta_L(m) <= waist_limit(m));
    CHECK(beta_L(m) > 0.0);
  }
}

TEST_CASE("midpoint and waist bounds") {
  CHECK(midpoint_dist_bound(kHilbert, 0.01, 1.0, 0.5) == doctest::Approx(9.99975e-5).epsilon(1e-6));
  CHECK(midpoint_dist_bound(kHilbert, 0.01, 1.0, 0.0) == 0.0);
  CHECK(midpoint_dist_bound(kHilbert, 0.01, 1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(midpoint_dist_bound(kHilbert, 2.5, 1.0, 0.5), std::domain_error);
  CHECK(waist_bound(kHilbert, 0.01, 1.0, 0.5) == doctest::Approx(r_prime(kHilbert, 0.01, 1.0)));
  CHECK(waist_bound(kHilbert, 0.01, 1.0, 1.0) == 0.0);
  CHECK(waist_bound(kHilbert, 0.01, 1.0, 0.5) == doctest::Approx(4.16657e-4).epsilon(1e-5));
}

TEST_CASE("length bound") {
  CHECK(length_bound(kHilbert, 2.0, 0.5, 0.01, 1.0) ==
        doctest::Approx(0.01000042766570549).epsilon(1e-13));
  CHECK(length_bound(kHilbert, 2.0, 0.5, 0.1, 1.0) == doctest::Approx(0.10104021098).epsilon(1e-10));
  CHECK(length_bound(kHilbert, 2.0, 0.5, 1e-6, 1.0) / 1e-6 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(length_bound(kHilbert, 2.0, 0.5, 0.12, 1.0), GateError);
  // The arc always stays below the bound.
  for (double d : {0.002, 0.005, 0.01, 0.02, 0.05, 0.1}) {
    CHECK(2.0 * std::asin(d / 2.0) < length_bound(kHilbert, 2.0, 0.5, d, 1.0));
  }
}

TEST_CASE("inclusion radius") {
  CHECK(inclusion_radius(kHilbert, 2.0, 0.5, 0.01, 1.0) == doctest::Approx(0.0811227342).epsilon(1e-9));
  CHECK_THROWS_AS(inclusion_radius(kHilbert, 2.0, 0.5, 0.09, 1.0), GateError);
  // Doubling d multiplies r by 2^s, up to the drift of mu.
  const double q5 = 1.0 - std::pow(mu(kHilbert, 0.005, 1.0), 2.0) / 2.0;
  const double q10 = 1.0 - std::pow(mu(kHilbert, 0.01, 1.0), 2.0) / 2.0;
  const double ratio = inclusion_radius(kHilbert, 2.0, 0.5, 0.01, 1.0) /
                       inclusion_radius(kHilbert, 2.0, 0.5, 0.005, 1.0);
  CHECK(ratio == doctest::Approx(4.0 * (q5 / q10) * (q5 / q10)).epsilon(1e-12));
  CHECK(ratio == doctest::Approx(4.0).epsilon(2e-2));
  const double near = inclusion_radius(kHilbert, 2.0, 0.5, 0.0834, 1.0);
  CHECK(near > 100.0 * inclusion_radius(kHilbert, 2.0, 0.5, 0.05, 1.0));
}

TEST_CASE("decay, cylinder and g2 floor") {
  const double m = mu(kHilbert, 0.01, 1.0);
  CHECK(delta_decay_bound(m, 0.01, 0) == 0.01);
  CHECK(delta_decay_bound(m, 0.01, 5) / 0.01 == doctest::Approx(0.0317953351).epsilon(1e-9));
  CHECK(delta_decay_bound(2.0, 0.01, 7) == 0.01);
  CHECK(cylinder_bound(2.0, 0.5, m, 0.01, 1.0) == doctest::Approx(4.833564673e-3).epsilon(1e-9));
  CHECK(cylinder_bound(2.0, 0.5, mu(kHilbert, 1e-6, 1.0), 1e-6, 1.0) / 1e-6 < 1e-4);
  CHECK(g2_floor(0.01) == 0.0025);
}

TEST_CASE("claim sum bound") {
  const double m = mu(kHilbert, 0.01, 1.0);
  CHECK(claim_sum_bound(2.0, 0.5, m, 0.01, 1.0, 0) == doctest::Approx(2.416782337e-3).epsilon(1e-9));
  CHECK(claim_sum_partial(kHilbert, m, 0.01, 1.0, 0) == doctest::Approx(4.166558165e-4).epsilon(1e-9));
  for (int k = 0; k <= 30; ++k) {
    const double b = claim_sum_bound(2.0, 0.5, m, 0.01, 1.0, k);
    CHECK(b >= claim_sum_partial(kHilbert, m, 0.01, 1.0, k));
    CHECK(claim_sum_bound(2.0, 0.5, m, 0.01, 1.0, k + 1) == doctest::Approx(b / 2.0));
  }
  // Twice the partial sums stay below the cylinder bound.
  for (int k = 0; k <= 30; ++k) {
    CHECK(2.0 * claim_sum_partial(kHilbert, m, 0.01, 1.0, k) <= cylinder_bound(2.0, 0.5, m, 0.01, 1.0));
  }
}

TEST_CASE("claim bounder sides") {
  const double m = mu(kHilbert, 0.01, 1.0);
  CHECK(claim_bounder_rhs(kHilbert, 2.0, 0.5, m, 0.01, 1.0) == doctest::Approx(1.00017108).epsilon(1e-8));
  CHECK(claim_bounder_series(kHilbert, m, 0.01, 1.0) == doctest::Approx(1.00459079).epsilon(1e-8));
  CHECK(claim_bounder_rhs(kHilbert, 2.0, 0.5, mu(kHilbert, 1e-8, 1.0), 1e-8, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(claim_bounder_series(kHilbert, 1.0, 0.0, 1.0) == 1.0);
  CHECK_THROWS_AS(claim_bounder_rhs(kHilbert, 2.0, 0.5, m, 0.2, 1.0), GateError);
}

TEST_CASE("bounds context") {
  const auto c = BoundsContext::make(kHilbert, 0.01, 1.0);
  REQUIRE(c.mu);
  REQUIRE(c.length_bound);
  REQUIRE(c.inclusion_radius);
  CHECK(*c.length_bound == doctest::Approx(0.01000042766570549).epsilon(1e-13));
  const auto far = BoundsContext::make(kHilbert, 0.1, 1.0);
  CHECK(far.length_bound);
  CHECK_FALSE(far.inclusion_radius);
  CHECK_FALSE(far.cylinder_bound);
  const auto out = BoundsContext::make(kHilbert, 0.3, 1.0);
  CHECK_FALSE(out.mu);
  CHECK_FALSE(out.length_bound);
}

}  // TEST_SUITE
