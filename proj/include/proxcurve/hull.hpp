#pragma once

#include "proxcurve/space.hpp"

namespace proxcurve {

/// min over alpha, beta >= 0, alpha + beta <= 1 of
///   ||z - alpha x0 - beta x1 - gamma mid|| - gamma r,   gamma = 1 - alpha - beta.
/// Non-positive iff z lies in conv{x0, B_r(mid), x1}. The objective is convex
/// in (alpha, beta); nested golden-section search to 1e-10 in each variable.
double hull_margin(const Space& space, const Vector& x0, const Vector& x1, const Vector& mid,
                   double r, const Vector& z);

bool hull_membership(const Space& space, const Vector& x0, const Vector& x1, const Vector& mid,
                     double r, const Vector& z, double tol);

}  // namespace proxcurve
