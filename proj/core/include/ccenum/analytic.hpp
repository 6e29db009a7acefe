#pragma once

#include <optional>
#include <vector>

#include "ccenum/interval.hpp"
#include "ccenum/nbody.hpp"

namespace ccenum {

/// Closed-form and one-dimensional-rigorous solution families of the
/// anisotropic problem with equal weights, used as independent oracles
/// for the enumeration.  All roots are enclosed by rigorous bisection
/// after the bracket is verified monotone with interval derivatives.

/// Eigen-decomposition of the Hessian of the restricted potential at
/// the triangular equilibrium for primaries of mass m1, m2 = 1 - m1:
///   lambda2 = (3/2)(1 - sqrt(1 - 3 m1 m2))   (returned as a)
///   lambda1 = (3/2)(1 + sqrt(1 - 3 m1 m2))   (returned as b)
/// rotation is the angle diagonalizing the Hessian with a on the x
/// axis; 0 for equal masses.
struct L4Params {
  Interval a, b;
  double rotation;
};
L4Params l4_hessian_params(double m1, double m2);

/// Isosceles triangle solution for k=3 equal weights mu: side s,
/// base r = 2y, vertices (x, 0), (-x/2, +-y).  Empty when b/a <= 5/12
/// (the triangle degenerates into the y-axis collinear solution).
struct TriangleSolution {
  Interval s, r, x, y;
  IntervalVector vertices() const;  // aniso layout, dim 6
};
std::optional<TriangleSolution> isosceles_triangle(double mu, double a,
                                                   double b);

/// Rhombus solution for k=4 equal weights: vertices (+-x, 0), (0, +-y),
/// diagonal ratio kratio = y/x, side length r.
struct RhombusSolution {
  Interval kratio, r, x, y;
  IntervalVector vertices() const;  // aniso layout, dim 8
};
RhombusSolution rhombus(double mu, double a, double b);

/// Rectangle solution for k=4 equal weights: vertices (+-x, +-y),
/// half-diagonal r, diagonal angle phi with x = r cos phi, y = r sin phi.
struct RectangleSolution {
  Interval phi, r, x, y;
  IntervalVector vertices() const;  // aniso layout, dim 8
};
RectangleSolution rectangle(double mu, double a, double b);

/// One collinear (Moulton) solution per ordering of the k bodies on a
/// coordinate axis, certified by Krawczyk on the k-dimensional axis
/// subsystem with coefficient coeff (a for the x axis, b for y).
enum class Axis { X, Y };
struct MoultonSolution {
  std::vector<int> ordering;      // body indices in increasing position
  IntervalVector axis_positions;  // per body (not per slot), dim k
  Axis axis;
  IntervalVector configuration() const;  // aniso layout, dim 2k
};
std::vector<MoultonSolution> moulton_axis(int k, const MassVector& mu,
                                          Axis axis, double coeff);

}  // namespace ccenum
