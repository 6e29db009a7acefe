#pragma once

#include <vector>

#include "ccenum/system.hpp"

namespace ccenum {

/// Positive masses m_1..m_n with cached total.
class MassVector {
 public:
  explicit MassVector(std::vector<double> masses);

  int size() const { return static_cast<int>(m_.size()); }
  double operator[](int i) const { return m_[i]; }
  const std::vector<double>& masses() const { return m_; }
  double total() const { return total_; }

 private:
  std::vector<double> m_;
  double total_;
};

/// Center-of-mass-reduced planar n-body central-configuration system
/// (normalized multiplier).  Variables are q_1..q_{n-1} with the y
/// coordinate of the gauge body pinned to 0; q_n is reconstructed from
///   q_n = -(1/m_n) sum_{i<n} m_i q_i.
/// Residual rows are R~_i = m_i q_i - f_i with
///   f_i = sum_{j != i} m_i m_j (q_i - q_j) / r_ij^3,
/// omitting the gauge body's y row.  Dimension 2(n-1)-1.
class ReducedNBodyProblem final : public System {
 public:
  /// gauge is the 0-based index (in 0..n-2) of the body whose y
  /// coordinate is pinned to 0.
  ReducedNBodyProblem(MassVector masses, int gauge);

  int n() const { return n_; }
  int gauge() const { return gauge_; }
  const MassVector& masses() const { return m_; }
  /// A-priori bound on max_i |q_i|.
  double size_bound() const { return rbound_; }

  int dim() const override { return 2 * (n_ - 1) - 1; }
  int body_count() const override { return n_; }
  /// Body n-1 (reconstructed) and the gauge y report index -1.
  std::pair<int, int> body_vars(int b) const override {
    if (b == n_ - 1) return {-1, -1};
    return {vx_[b], vy_[b]};
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
    return floor_[i * n_ + j];
  }
  bool accept_certificate(const IntervalVector& box) const override {
    return check_gauge_validity(box);
  }

  /// Enclosure of the reconstructed last body.
  std::pair<Interval, Interval> com_fill(const IntervalVector& x) const;

  /// True iff the x enclosures of the gauge body and the reconstructed
  /// body are disjoint; required before a certified zero of the reduced
  /// system may be reported as a central configuration.
  bool check_gauge_validity(const IntervalVector& x) const;

 private:
  int n_;
  MassVector m_;
  int gauge_;
  double rbound_;
  std::vector<int> vx_, vy_;      // variable index per body (bodies 0..n-2)
  std::vector<Interval> iv_m_;    // mass enclosures (exact doubles)
  Interval iv_inv_mn_;            // 1/m_n
  std::vector<Interval> iv_mm_;   // n*n pairwise mass products
  std::vector<double> floor_, floor2_;
};

}  // namespace ccenum
