#pragma once

#include <vector>

#include "ccenum/interval.hpp"

namespace ccenum {

/// A-priori bounds on where solutions can live.  Size bounds are rounded
/// up and distance floors rounded down, so no true solution is ever cut
/// off by them.

/// Per-axis bounds (Bx, By) on |x_i|, |y_i| for the anisotropic k-body
/// problem with total weight M.  If a <= 0 all solutions lie on the
/// y-axis and Bx = 0 (and symmetrically for b).  Throws InvalidArgument
/// when both coefficients are non-positive (no solutions exist).
std::pair<double, double> aniso_size_bound(int k, double M, double a,
                                           double b);

/// Lower bound on r_ij for the anisotropic problem, where R bounds
/// max_i |p_i|.
double aniso_min_dist(double mu_i, double mu_j, double a, double b, double R);

/// Bound on max_i |q_i| for a central configuration of n bodies with
/// total mass M (normalized multiplier).
double nbody_size_bound(int n, double M);

/// Lower bound on r_ij for the n-body problem.
double nbody_min_dist(double m_i, double m_j, double M, double R);

}  // namespace ccenum
