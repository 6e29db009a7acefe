#pragma once

#include <array>
#include <vector>

#include "ccenum/analytic.hpp"
#include "ccenum/search.hpp"

namespace ccenum {

/// Vanishing-mass scaling between the full-problem light cluster and
/// the anisotropic limit problem.

/// Cluster of light bodies in normalized coordinates: theta is the
/// total light mass, mu_tilde[j] = mu_j / theta, and
/// p_tilde[j] = (p_j - c) / theta^{1/3} with c the cluster center of
/// mass.  Plain doubles: this is a comparison diagnostic.
struct NormalizedCluster {
  double theta = 0.0;
  std::vector<double> mu_tilde;
  std::vector<double> p_tilde;  // x0,y0,x1,y1,...
  std::array<double, 2> c{0.0, 0.0};
};

/// positions is x0,y0,...; mu the light masses (all positive).
NormalizedCluster normalize_cluster(const std::vector<double>& positions,
                                    const std::vector<double>& mu);

/// Eigen-data of the Hessian of the restricted potential
///   V_res(p) = |p - c|^2 / 2 + sum m_i / |p - q_i|
/// at x_star, with c the heavy center of mass.  Returns enclosures of
/// the eigenvalues a <= b and the rotation aligning a with the x axis.
/// Throws when x_star coincides with a heavy body.
L4Params induced_ab(const std::vector<double>& heavy_positions,
                    const std::vector<double>& heavy_masses, double xs,
                    double ys);

/// Enclosure of the restricted-problem gradient
///   (p - c) - sum m_i (p - q_i) / |p - q_i|^3
/// at x_star; encloses (0,0) exactly at a relative equilibrium.
std::array<Interval, 2> relequi_residual(
    const std::vector<double>& heavy_positions,
    const std::vector<double>& heavy_masses, double xs, double ys);

struct PairingReport {
  struct Pair {
    int full_index;              // certificate index in the full-problem run
    int limit_index;             // certificate index in the limit-problem run
    double discrepancy;          // max per-body midpoint distance
    std::vector<double> normalized;  // full-problem cluster after scaling
  };
  std::vector<Pair> pairs;
  std::vector<int> unmatched_full, unmatched_limit;
  double max_discrepancy = 0.0;
};

/// Normalizes the light cluster of every full-problem certificate
/// (bodies 0..k_light-1 of prob) and matches against the limit-problem
/// certificates by minimum-cost assignment.  The per-pair cost is the
/// max per-body distance minimized over light-body relabelings (labels
/// are arbitrary under equal masses).  Pairs costing more than
/// threshold are reported unmatched.
PairingReport pair_solutions(const EnumerationReport& full,
                             const ReducedNBodyProblem& prob, int k_light,
                             const EnumerationReport& limit, double threshold);

/// Max-norm residual of the exact full-system equations
///   m_i q_i - sum_{j != i} m_i m_j (q_i - q_j) / r_ij^3
/// at the predicted configuration: heavy bodies at q_hat with masses m,
/// light bodies at x_star + theta^{1/3} p_hat[j] with masses
/// theta * mu_tilde[j].  A consistency diagnostic, not a proof.
double continuation_residual(const std::vector<double>& q_hat,
                             const std::vector<double>& heavy_masses,
                             double xs, double ys,
                             const std::vector<double>& p_hat,
                             const std::vector<double>& mu_tilde,
                             double theta);

}  // namespace ccenum
