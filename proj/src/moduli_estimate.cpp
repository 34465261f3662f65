#include "proxcurve/numeric.hpp"
#include "proxcurve/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace proxcurve {

namespace {

using Section = std::pair<int, int>;

// Coordinate pairs spanning the 2-D sections that are sampled. For l_p every
// such section is isometric to l_p^2; the sampling still goes through the
// full-dimensional norm so other norms can reuse it.
std::vector<Section> pick_sections(int dim, std::uint64_t seed) {
  if (dim == 2) return {{0, 1}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  const int count = std::min(8, dim * (dim - 1) / 2);
  std::vector<Section> out;
  while (static_cast<int>(out.size()) < count) {
    int i = pick(rng);
    int j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (std::find(out.begin(), out.end(), Section{i, j}) == out.end()) out.emplace_back(i, j);
  }
  return out;
}

Vector unit_in_section(const Space& space, Section sec, double angle) {
  Vector u = Vector::Zero(space.dim());
  u[sec.first] = std::cos(angle);
  u[sec.second] = std::sin(angle);
  return u / space.norm(u);
}

struct Candidate {
  double value;
  double a;
  double b;
};

void keep_best(std::vector<Candidate>& best, Candidate c, std::size_t k) {
  best.push_back(c);
  std::sort(best.begin(), best.end(), [](const Candidate& l, const Candidate& r) {
    return l.value > r.value;
  });
  if (best.size() > k) best.pop_back();
}

}  // namespace

double estimate_rho(const Space& space, double tau, std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw std::invalid_argument("estimate_rho: zero sampling budget");
  if (!(tau >= 0.0)) throw std::domain_error("estimate_rho: tau must be non-negative");
  if (tau == 0.0) return 0.0;

  const auto sections = pick_sections(space.dim(), seed);
  const auto per_section = std::max<std::size_t>(16, budget / sections.size());
  const int m = std::max(4, static_cast<int>(std::sqrt(static_cast<double>(per_section))));
  const double pi = std::numbers::pi;
  const double step = pi / m;

  double best_value = 0.0;
  for (const auto& sec : sections) {
    auto objective = [&](double theta, double phi) {
      const Vector x = unit_in_section(space, sec, theta);
      const Vector y = tau * unit_in_section(space, sec, phi);
      return 0.5 * (space.norm(x + y) + space.norm(x - y)) - 1.0;
    };
    std::vector<Candidate> best;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double theta = i * step;
        const double phi = j * step;
        keep_best(best, {objective(theta, phi), theta, phi}, 4);
      }
    }
    for (auto c : best) {
      // alternating golden-section ascent in each angle
      for (int sweep = 0; sweep < 30; ++sweep) {
        const double before = c.value;
        auto rt = numeric::golden_maximize([&](double t) { return objective(t, c.b); },
                                           c.a - step, c.a + step, 1e-13);
        if (rt.value > c.value) c = {rt.value, rt.x, c.b};
        auto rp = numeric::golden_maximize([&](double t) { return objective(c.a, t); },
                                           c.b - step, c.b + step, 1e-13);
        if (rp.value > c.value) c = {rp.value, c.a, rp.x};
        if (c.value - before < 1e-16) break;
      }
      best_value = std::max(best_value, c.value);
    }
  }
  return best_value;
}

double estimate_zeta_plus(const Space& space, double eps, std::size_t budget,
                          std::uint64_t seed) {
  if (budget == 0) throw std::invalid_argument("estimate_zeta_plus: zero sampling budget");
  if (!(eps >= 0.0)) throw std::domain_error("estimate_zeta_plus: eps must be non-negative");
  if (eps == 0.0) return 1.0;

  const auto sections = pick_sections(space.dim(), seed);
  const auto m = std::max<std::size_t>(16, budget / sections.size());
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

  double best_value = 1.0;
  for (const auto& sec : sections) {
    auto objective = [&](double theta) {
      const Vector x = unit_in_section(space, sec, theta);
      const Vector j = space.dual_functional(x);
      Vector y = Vector::Zero(space.dim());
      y[sec.first] = -j[sec.second];
      y[sec.second] = j[sec.first];
      y /= space.norm(y);
      return std::max(space.norm(x + eps * y), space.norm(x - eps * y));
    };
    std::vector<Candidate> best;
    for (std::size_t i = 0; i < m; ++i) {
      const double theta = static_cast<double>(i) * step;
      keep_best(best, {objective(theta), theta, 0.0}, 4);
    }
    for (const auto& c : best) {
      auto r = numeric::golden_maximize(objective, c.a - step, c.a + step, 1e-13);
      best_value = std::max({best_value, c.value, r.value});
    }
  }
  return best_value;
}

ModulusModel estimate_table(const Space& space, const std::vector<double>& taus,
                            std::size_t budget, std::uint64_t seed) {
  std::vector<double> rhos;
  rhos.reserve(taus.size());
  for (double t : taus) rhos.push_back(estimate_rho(space, t, budget, seed));
  const auto& m = space.modulus();
  return ModulusModel::table(taus, std::move(rhos), m.s(), m.c_sm());
}

}  // namespace proxcurve
