#include "proxcurve/geodesic_oracle.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace proxcurve {

namespace {

constexpr std::array<std::array<int, 2>, 16> kStencil{{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1},
    {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
    {1, 2}, {1, -2}, {-1, 2}, {-1, -2},
    {2, 1}, {2, -1}, {-2, 1}, {-2, -1},
}};

constexpr double kStencilError = 0.028;

class Grid {
 public:
  Grid(double lo_x, double lo_y, double h, long nx, long ny)
      : lo_x_(lo_x), lo_y_(lo_y), h_(h), nx_(nx), ny_(ny) {}

  long nx() const { return nx_; }
  long ny() const { return ny_; }
  long size() const { return nx_ * ny_; }
  long index(long i, long j) const { return j * nx_ + i; }
  bool inside(long i, long j) const { return i >= 0 && j >= 0 && i < nx_ && j < ny_; }
  Vector point(long idx) const {
    Vector v(2);
    v << lo_x_ + static_cast<double>(idx % nx_) * h_, lo_y_ + static_cast<double>(idx / nx_) * h_;
    return v;
  }
  std::pair<long, long> cell(const Vector& x) const {
    return {static_cast<long>(std::floor((x[0] - lo_x_) / h_)),
            static_cast<long>(std::floor((x[1] - lo_y_) / h_))};
  }

 private:
  double lo_x_, lo_y_, h_;
  long nx_, ny_;
};

}  // namespace

OracleResult geodesic_oracle_2d(const Space& space, const ProximalSet& set, const Vector& x0,
                                const Vector& x1, int grid_n) {
  if (space.dim() != 2) throw std::invalid_argument("geodesic_oracle_2d: 2-D spaces only");
  if (grid_n < 8) throw std::invalid_argument("geodesic_oracle_2d: grid_n too small");
  space.check_dim(x0);
  space.check_dim(x1);
  OracleResult out;
  if ((x1 - x0).cwiseAbs().maxCoeff() == 0.0) return out;

  const double pad = 2.0 * set.reach();
  const Vector lo = x0.cwiseMin(x1).array() - pad;
  const Vector hi = x0.cwiseMax(x1).array() + pad;
  const double extent = (hi - lo).maxCoeff();
  const double h = extent / (grid_n - 1);
  const auto nx = static_cast<long>(std::ceil((hi[0] - lo[0]) / h)) + 1;
  const auto ny = static_cast<long>(std::ceil((hi[1] - lo[1]) / h)) + 1;
  Grid grid(lo[0], lo[1], h, nx, ny);
  out.spacing = h;

  // membership is evaluated lazily: -1 unknown, 0 out, 1 in
  std::vector<std::int8_t> member(static_cast<std::size_t>(grid.size()), -1);
  auto in_set = [&](long idx) {
    auto& m = member[static_cast<std::size_t>(idx)];
    if (m < 0) {
      m = set.contains(space, grid.point(idx), h) ? 1 : 0;
      if (m == 1) ++out.nodes_in_set;
    }
    return m == 1;
  };

  std::array<double, kStencil.size()> weight{};
  for (std::size_t k = 0; k < kStencil.size(); ++k) {
    Vector step(2);
    step << kStencil[k][0] * h, kStencil[k][1] * h;
    weight[k] = space.norm(step);
  }

  // attach an off-grid point to the in-set nodes of its stencil block
  auto block = [&](const Vector& x, const std::function<void(long, double)>& visit) {
    const auto [ci, cj] = grid.cell(x);
    for (long j = cj - 2; j <= cj + 3; ++j) {
      for (long i = ci - 2; i <= ci + 3; ++i) {
        if (!grid.inside(i, j)) continue;
        const long idx = grid.index(i, j);
        if (in_set(idx)) visit(idx, space.norm(grid.point(idx) - x));
      }
    }
  };

  double best = std::numeric_limits<double>::infinity();
  {
    const auto [ai, aj] = grid.cell(x0);
    const auto [bi, bj] = grid.cell(x1);
    if (std::abs(ai - bi) <= 5 && std::abs(aj - bj) <= 5 &&
        set.contains(space, 0.5 * (x0 + x1), h)) {
      best = space.norm(x1 - x0);
    }
  }

  std::vector<std::pair<long, double>> targets;
  block(x1, [&](long idx, double w) { targets.emplace_back(idx, w); });

  std::vector<double> dist(static_cast<std::size_t>(grid.size()),
                           std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, long>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  block(x0, [&](long idx, double w) {
    if (w < dist[static_cast<std::size_t>(idx)]) {
      dist[static_cast<std::size_t>(idx)] = w;
      queue.emplace(w, idx);
    }
  });

  while (!queue.empty()) {
    const auto [du, u] = queue.top();
    queue.pop();
    if (du > dist[static_cast<std::size_t>(u)]) continue;
    if (du >= best) break;
    ++out.settled;
    for (const auto& [t, w] : targets) {
      if (t == u) best = std::min(best, du + w);
    }
    const long ui = u % grid.nx();
    const long uj = u / grid.nx();
    for (std::size_t k = 0; k < kStencil.size(); ++k) {
      const long vi = ui + kStencil[k][0];
      const long vj = uj + kStencil[k][1];
      if (!grid.inside(vi, vj)) continue;
      const long v = grid.index(vi, vj);
      if (!in_set(v)) continue;
      const double alt = du + weight[k];
      if (alt < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = alt;
        queue.emplace(alt, v);
      }
    }
  }
  if (!std::isfinite(best)) throw std::runtime_error("geodesic_oracle_2d: endpoints disconnected on the grid");
  out.length = best;
  out.allowance = kStencilError * best + 2.0 * h;
  return out;
}

}  // namespace proxcurve
