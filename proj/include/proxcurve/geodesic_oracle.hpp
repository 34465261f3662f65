#pragma once

// Independent shortest-path baseline on a 2-D grid restricted to the set.

#include "proxcurve/sets.hpp"
#include "proxcurve/space.hpp"

#include <cstddef>

namespace proxcurve {

struct OracleResult {
  double length{0.0};
  double spacing{0.0};    // grid step h
  double allowance{0.0};  // documented grid error: 0.028 * length + 2 h
  std::size_t nodes_in_set{0};
  std::size_t settled{0};
};

/// Dijkstra over grid nodes within distance h of the set, on the box spanned
/// by the endpoints padded by 2R. Edges follow the 16-neighbor stencil and are
/// weighted by the space norm; the exact endpoints are attached to the in-set
/// nodes of their stencil neighborhood. The 16-neighbor stencil overestimates
/// Euclidean lengths by at most 2.8%; the h-tube and edge chords can shorten
/// paths by O(h), hence the allowance. Throws std::runtime_error when the
/// endpoints are disconnected on the grid.
OracleResult geodesic_oracle_2d(const Space& space, const ProximalSet& set, const Vector& x0,
                                const Vector& x1, int grid_n = 1500);

}  // namespace proxcurve
