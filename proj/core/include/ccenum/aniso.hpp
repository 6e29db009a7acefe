#pragma once

#include <vector>

#include "ccenum/system.hpp"

namespace ccenum {

/// Planar k-body problem with an anisotropic quadratic background
/// potential: body i at (x_i, y_i) with weight mu_i satisfies
///
///   a mu_i x_i = sum_{j != i} mu_i mu_j (x_i - x_j) / r_ij^3
///   b mu_i y_i = sum_{j != i} mu_i mu_j (y_i - y_j) / r_ij^3
///
/// Weights must be positive and sum to 1; the axis coefficients must
/// differ (a == b leaves a rotational degeneracy the search cannot
/// isolate) and must not both be non-positive.
class AnisoProblem final : public System {
 public:
  AnisoProblem(std::vector<double> mu, double a, double b);

  int k() const { return k_; }
  double a() const { return a_; }
  double b() const { return b_; }
  const std::vector<double>& mu() const { return mu_; }

  int dim() const override { return 2 * k_; }
  int body_count() const override { return k_; }
  std::pair<int, int> body_vars(int b) const override {
    return {2 * b, 2 * b + 1};
  }
  void positions(const IntervalVector& x, std::vector<Interval>& px,
                 std::vector<Interval>& py) const override;
  bool eval(const IntervalVector& x, IntervalVector& f,
            std::pair<int, int>* collision = nullptr) const override;
  bool jacobian(const IntervalVector& x, IntervalMatrix& jac,
                std::pair<int, int>* collision = nullptr) const override;
  Prescreen prescreen(const IntervalVector& x,
                      std::pair<int, int>* collision) const override;
  double pair_dist_floor(int i, int j) const override {
    return floor_[i * k_ + j];
  }

  /// Residuals of the three weighted-inertia identities every solution
  /// satisfies:
  ///   a sum mu_i x_i^2           = sum_{i<j} mu_i mu_j (x_i-x_j)^2 / r_ij^3
  ///   b sum mu_i y_i^2           = sum_{i<j} mu_i mu_j (y_i-y_j)^2 / r_ij^3
  ///   a sum mu x^2 + b sum mu y^2 = sum_{i<j} mu_i mu_j / r_ij
  /// Returned as lhs - rhs enclosures; all three contain 0 at solutions.
  void inertia_residuals(const IntervalVector& x, Interval& rx, Interval& ry,
                         Interval& rsum) const;

  /// Potential-like scalar whose critical points are the solutions:
  ///   W = sum_i mu_i (a x_i^2 + b y_i^2)/2 + sum_{i<j} mu_i mu_j / r_ij
  /// Point evaluation, used to cross-check the gradient structure.
  double potential(const std::vector<double>& x) const;

  /// (k-1)x(k-1) matrix A of the difference form of the system: at any
  /// solution, A dx = a dx and A dy = b dy where dx_i = x_i - x_{i+1}
  /// (and likewise dy).  Entries depend only on the mutual distances.
  IntervalMatrix collinear_matrix(const IntervalVector& x) const;

  /// Per-axis a-priori bounds on |x_i| / |y_i| used for the initial box.
  double bound_x() const { return bx_; }
  double bound_y() const { return by_; }

 private:
  int k_;
  std::vector<double> mu_;
  double a_, b_;
  double bx_, by_;
  std::vector<Interval> iv_mua_, iv_mub_, iv_mu_;  // exact-constant enclosures
  std::vector<Interval> iv_mumu_;                  // k*k pairwise products
  std::vector<double> floor_, floor2_;             // k*k distance floors
};

}  // namespace ccenum
