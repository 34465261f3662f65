#include "proxcurve/space.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace proxcurve;

namespace {

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector random_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = g(rng);
  return v;
}

}  // namespace

TEST_SUITE("space") {

TEST_CASE("norm examples") {
  CHECK(Space::lp(2, 2).norm(v2(3, 4)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(Space::lp(4, 2).norm(v2(1, 1)) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
  for (double p : {1.5, 2.0, 4.0}) CHECK(Space::lp(p, 3).norm(Vector::Zero(3)) == 0.0);
}

TEST_CASE("norm does not overflow or underflow") {
  const Space sp = Space::lp(4, 2);
  CHECK(sp.norm(v2(1e300, 1e300)) == doctest::Approx(std::pow(2.0, 0.25) * 1e300));
  CHECK(sp.norm(v2(1e-300, 1e-300)) == doctest::Approx(std::pow(2.0, 0.25) * 1e-300));
}

TEST_CASE("dual functional examples") {
  const Vector j = Space::lp(2, 2).dual_functional(v2(3, 4));
  CHECK(j[0] == doctest::Approx(0.6));
  CHECK(j[1] == doctest::Approx(0.8));
  const Space l4 = Space::lp(4, 2);
  const Vector j4 = l4.dual_functional(v2(1, 1));
  CHECK(j4[0] == doctest::Approx(std::pow(2.0, -0.75)));
  CHECK(j4[1] == doctest::Approx(std::pow(2.0, -0.75)));
  CHECK(j4.dot(v2(1, 1)) == doctest::Approx(l4.norm(v2(1, 1))));
  CHECK_THROWS_AS(l4.dual_functional(Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("quasi-orthogonality examples") {
  CHECK(Space::lp(2, 2).quasi_orth_defect(v2(1, 0), v2(0, 1)) == doctest::Approx(0.0));
  CHECK(Space::lp(4, 2).quasi_orth_defect(v2(1, 1), v2(1, -1)) == doctest::Approx(0.0));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(Space::lp(2, 3).norm(v2(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Space::lp(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Space::lp(2, 0), std::invalid_argument);
}

TEST_CASE("property: duality mapping has unit dual norm and norming pairing") {
  std::mt19937_64 rng(7);
  for (double p : {1.2, 1.5, 2.0, 3.0, 4.0, 7.0}) {
    for (int dim : {2, 3, 5}) {
      const Space sp = Space::lp(p, dim);
      for (int k = 0; k < 50; ++k) {
        const Vector x = random_vector(rng, dim);
        const Vector j = sp.dual_functional(x);
        CHECK(sp.dual_norm(j) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(j.dot(x) == doctest::Approx(sp.norm(x)).epsilon(1e-12));
        CHECK(sp.quasi_orth_defect(x, x) == doctest::Approx(sp.norm(x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property: defect is linear in y and y - <J x, y>/||x|| x is quasi-orthogonal") {
  std::mt19937_64 rng(11);
  for (double p : {1.5, 2.0, 4.0}) {
    const Space sp = Space::lp(p, 3);
    for (int k = 0; k < 50; ++k) {
      const Vector x = random_vector(rng, 3);
      const Vector y = random_vector(rng, 3);
      const Vector z = random_vector(rng, 3);
      const double a = 0.7;
      const double b = -1.3;
      CHECK(sp.quasi_orth_defect(x, a * y + b * z) ==
            doctest::Approx(a * sp.quasi_orth_defect(x, y) + b * sp.quasi_orth_defect(x, z)));
      const Vector w = y - sp.quasi_orth_defect(x, y) / sp.norm(x) * x;
      CHECK(std::abs(sp.quasi_orth_defect(x, w)) < 1e-12 * (1.0 + y.norm()));
    }
  }
}

TEST_CASE("property: quasi-orthogonal y gives Birkhoff-James orthogonality") {
  std::mt19937_64 rng(13);
  for (double p : {1.5, 3.0, 4.0}) {
    const Space sp = Space::lp(p, 3);
    for (int k = 0; k < 30; ++k) {
      const Vector x = random_vector(rng, 3);
      Vector y = random_vector(rng, 3);
      y -= sp.quasi_orth_defect(x, y) / sp.norm(x) * x;
      for (double t : {-2.0, -0.3, -1e-3, 1e-3, 0.5, 3.0}) {
        CHECK(sp.norm(x + t * y) >= sp.norm(x) * (1.0 - 1e-13));
      }
    }
  }
}

TEST_CASE("hilbert modulus examples") {
  const auto h = ModulusModel::hilbert();
  CHECK(h.rho(1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(h.rho(0.0) == 0.0);
  CHECK(h.omega(0.1) == doctest::Approx(0.04987562112).epsilon(1e-10));
  CHECK(h.omega_inv(1.0 / 8.0) == doctest::Approx(16.0 / 63.0).epsilon(1e-9));
  CHECK(h.zeta_plus(0.0) == 1.0);
  CHECK(h.zeta_plus_inv(2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(h.rho(1e-9) == doctest::Approx(5e-19).epsilon(1e-6));
  CHECK(h.kind_name() == "exact_hilbert");
}

TEST_CASE("power profile examples") {
  const auto m = ModulusModel::power(2.0, 0.5);
  CHECK(m.rho(0.1) == doctest::Approx(0.005));
  CHECK(m.rho(0.0) == 0.0);
  CHECK(m.kind_name() == "power");
  CHECK_THROWS_AS(ModulusModel::power(2.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ModulusModel::power(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("lp default constants") {
  const auto a = ModulusModel::lp_default(1.5);
  CHECK(a.s() == doctest::Approx(1.5));
  CHECK(a.c_sm() == doctest::Approx(1.0 / 1.5));
  const auto b = ModulusModel::lp_default(4.0);
  CHECK(b.s() == doctest::Approx(2.0));
  CHECK(b.c_sm() == doctest::Approx(1.5));
  CHECK(ModulusModel::lp_default(2.0).kind() == ModulusModel::Kind::exact_hilbert);
}

TEST_CASE("inverses reject values outside the range") {
  const auto h = ModulusModel::hilbert();
  CHECK_THROWS_AS(h.zeta_plus_inv(0.5), std::domain_error);
  CHECK_THROWS_AS(h.omega_inv(1.0), std::domain_error);
  CHECK_THROWS_AS(h.omega_inv(-0.1), std::domain_error);
}

TEST_CASE("property: omega round trip for every model kind") {
  const std::vector<ModulusModel> models{
      ModulusModel::hilbert(), ModulusModel::power(2.0, 0.5), ModulusModel::power(1.5, 2.0 / 3.0),
      ModulusModel::lp_default(4.0),
      ModulusModel::table({0.05, 0.1, 0.2, 0.5, 1.0}, {0.002, 0.006, 0.02, 0.12, 0.42}, 2.0, 1.0)};
  for (const auto& m : models) {
    CHECK(m.omega_inv(m.omega(0.05)) == doctest::Approx(0.05).epsilon(1e-9));
    for (double t : {0.01, 0.1, 0.3}) {
      CHECK(m.omega_inv(m.omega(t)) == doctest::Approx(t).epsilon(1e-9));
      CHECK(m.zeta_plus_inv(m.zeta_plus(t)) == doctest::Approx(t).epsilon(1e-9));
    }
  }
}

TEST_CASE("numeric table model") {
  const auto t = ModulusModel::table({0.1, 0.2}, {0.01, 0.03}, 2.0, 1.0);
  CHECK(t.rho(0.05) == doctest::Approx(0.0025));
  CHECK(t.rho(0.15) == doctest::Approx(0.02));
  CHECK(t.max_tau() == doctest::Approx(0.2));
  CHECK_THROWS_AS(t.rho(0.3), std::domain_error);
  CHECK_THROWS_AS(ModulusModel::table({0.2, 0.1}, {0.01, 0.03}, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModulusModel::table({0.1, 0.2}, {0.03, 0.01}, 2.0, 1.0), std::invalid_argument);
  // Day-Nordlander bracket and convexity are enforced.
  CHECK_THROWS_AS(ModulusModel::table({0.5}, {0.1}, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModulusModel::table({0.1}, {0.2}, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModulusModel::table({0.1, 0.2, 0.3}, {0.01, 0.04, 0.05}, 2.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("property: non-hilbert zeta+ lies in its sandwich") {
  for (const auto& m : {ModulusModel::lp_default(4.0), ModulusModel::lp_default(1.5)}) {
    for (int k = 1; k <= 50; ++k) {
      const double e = 0.5 * k / 50.0;
      const double z = m.zeta_plus(e);
      CHECK(z >= 1.0 + m.rho(e / (2.0 * (1.0 + e))) - 1e-15);
      CHECK(z <= 1.0 + m.rho(2.0 * e) + 1e-15);
    }
  }
}

TEST_CASE("rho estimate") {
  const Space l2 = Space::lp(2, 2);
  CHECK(estimate_rho(l2, 1.0, 10000) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-4));
  CHECK(estimate_rho(l2, 0.0, 100) == 0.0);
  const double r4 = estimate_rho(Space::lp(4, 2), 0.5, 4000);
  CHECK(r4 >= std::sqrt(1.25) - 1.0);
  CHECK(r4 <= 0.5);
  CHECK_THROWS_AS(estimate_rho(l2, 0.5, 0), std::invalid_argument);
}

TEST_CASE("rho estimate is deterministic for a seed") {
  const Space l4 = Space::lp(4, 3);
  CHECK(estimate_rho(l4, 0.3, 500, 5) == estimate_rho(l4, 0.3, 500, 5));
}

TEST_CASE("zeta+ estimate") {
  const Space l2 = Space::lp(2, 2);
  CHECK(estimate_zeta_plus(l2, 0.3, 2000) == doctest::Approx(std::hypot(1.0, 0.3)).epsilon(1e-8));
  const Space l4 = Space::lp(4, 2);
  const double z = estimate_zeta_plus(l4, 0.2, 4000);
  const double lo = 1.0 + estimate_rho(l4, 0.2 / 2.4, 4000);
  const double hi = 1.0 + estimate_rho(l4, 0.4, 4000);
  CHECK(z >= lo - 1e-9);
  CHECK(z <= hi + 1e-9);
}

TEST_CASE("estimated table is a usable model") {
  const auto t = estimate_table(Space::lp(2, 2), {0.1, 0.2, 0.4, 0.8}, 2000);
  CHECK(t.kind() == ModulusModel::Kind::numeric_table);
  CHECK(t.rho(0.4) == doctest::Approx(std::sqrt(1.16) - 1.0).epsilon(1e-4));
}

}  // TEST_SUITE
