#include "ccenum/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ccenum {

NormalizedCluster normalize_cluster(const std::vector<double>& positions,
                                    const std::vector<double>& mu) {
  const int k = static_cast<int>(mu.size());
  if (k < 1 || positions.size() != static_cast<size_t>(2 * k))
    throw InvalidArgument("normalize_cluster: size mismatch");
  NormalizedCluster out;
  for (double m : mu) {
    if (!(m > 0.0))
      throw InvalidArgument("normalize_cluster: masses must be positive");
    out.theta += m;
  }
  for (int j = 0; j < k; ++j) {
    out.c[0] += mu[j] * positions[2 * j];
    out.c[1] += mu[j] * positions[2 * j + 1];
  }
  out.c[0] /= out.theta;
  out.c[1] /= out.theta;
  double scale = std::cbrt(out.theta);
  out.mu_tilde.resize(k);
  out.p_tilde.resize(2 * k);
  for (int j = 0; j < k; ++j) {
    out.mu_tilde[j] = mu[j] / out.theta;
    out.p_tilde[2 * j] = (positions[2 * j] - out.c[0]) / scale;
    out.p_tilde[2 * j + 1] = (positions[2 * j + 1] - out.c[1]) / scale;
  }
  return out;
}

namespace {

// d = x_star - q_i as intervals, with collision guard
struct HeavyTerms {
  std::vector<Interval> dx, dy, r2;
  Interval cx, cy;  // heavy center of mass
};

HeavyTerms heavy_terms(const std::vector<double>& q,
                       const std::vector<double>& m, double xs, double ys) {
  const int n = static_cast<int>(m.size());
  if (n < 1 || q.size() != static_cast<size_t>(2 * n))
    throw InvalidArgument("restricted problem: size mismatch");
  HeavyTerms t;
  Interval mx(0.0), my(0.0), mt(0.0);
  for (int i = 0; i < n; ++i) {
    if (!(m[i] > 0.0))
      throw InvalidArgument("restricted problem: masses must be positive");
    Interval dx = Interval(xs) - Interval(q[2 * i]);
    Interval dy = Interval(ys) - Interval(q[2 * i + 1]);
    Interval r2 = sqr(dx) + sqr(dy);
    if (!(r2.lo() > 0.0))
      throw DomainError("restricted problem: x_star collides with a body");
    t.dx.push_back(dx);
    t.dy.push_back(dy);
    t.r2.push_back(r2);
    mx += Interval(m[i]) * Interval(q[2 * i]);
    my += Interval(m[i]) * Interval(q[2 * i + 1]);
    mt += Interval(m[i]);
  }
  t.cx = mx / mt;
  t.cy = my / mt;
  return t;
}

}  // namespace

L4Params induced_ab(const std::vector<double>& heavy_positions,
                    const std::vector<double>& heavy_masses, double xs,
                    double ys) {
  HeavyTerms t = heavy_terms(heavy_positions, heavy_masses, xs, ys);
  // H = I + sum m_i (3 d d^T / r^5 - I / r^3)
  Interval hxx(1.0), hyy(1.0), hxy(0.0);
  for (size_t i = 0; i < t.dx.size(); ++i) {
    Interval mi(heavy_masses[i]);
    Interval ir3 = inv_pow_3_2(t.r2[i]);
    Interval u3 = Interval(3.0) * inv_pow_5_2(t.r2[i]);
    hxx += mi * (u3 * sqr(t.dx[i]) - ir3);
    hyy += mi * (u3 * sqr(t.dy[i]) - ir3);
    hxy += mi * u3 * (t.dx[i] * t.dy[i]);
  }
  Interval half(0.5);
  Interval mean = half * (hxx + hyy);
  Interval disc = sqrt(sqr(half * (hxx - hyy)) + sqr(hxy));
  L4Params out;
  out.a = mean - disc;
  out.b = mean + disc;
  double rot =
      0.5 * std::atan2(2.0 * hxy.mid(), hxx.mid() - hyy.mid()) + M_PI / 2.0;
  while (rot > M_PI / 2.0) rot -= M_PI;
  while (rot <= -M_PI / 2.0) rot += M_PI;
  out.rotation = rot;
  return out;
}

std::array<Interval, 2> relequi_residual(
    const std::vector<double>& heavy_positions,
    const std::vector<double>& heavy_masses, double xs, double ys) {
  HeavyTerms t = heavy_terms(heavy_positions, heavy_masses, xs, ys);
  Interval gx = Interval(xs) - t.cx;
  Interval gy = Interval(ys) - t.cy;
  for (size_t i = 0; i < t.dx.size(); ++i) {
    Interval w = Interval(heavy_masses[i]) * inv_pow_3_2(t.r2[i]);
    gx -= w * t.dx[i];
    gy -= w * t.dy[i];
  }
  return {gx, gy};
}

namespace {

// midpoint positions of the light bodies of one full-problem
// certificate (bodies 0..k-1 in prob's layout)
std::vector<double> light_midpoints(const SolutionCertificate& cert,
                                    const ReducedNBodyProblem& prob,
                                    int k_light) {
  std::vector<Interval> px, py;
  prob.positions(cert.box, px, py);
  std::vector<double> out(2 * k_light);
  for (int j = 0; j < k_light; ++j) {
    out[2 * j] = px[j].mid();
    out[2 * j + 1] = py[j].mid();
  }
  return out;
}

// max per-body distance minimized over relabelings of the k bodies
double relabel_cost(const std::vector<double>& a, const std::vector<double>& b,
                    int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int j = 0; j < k; ++j) {
      double dx = a[2 * j] - b[2 * perm[j]];
      double dy = a[2 * j + 1] - b[2 * perm[j] + 1];
      worst = std::max(worst, std::hypot(dx, dy));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Hungarian algorithm (augmenting paths with potentials), square cost
// matrix n*n in row-major order; returns column assigned to each row.
std::vector<int> assignment(const std::vector<double>& cost, int n) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

PairingReport pair_solutions(const EnumerationReport& full,
                             const ReducedNBodyProblem& prob, int k_light,
                             const EnumerationReport& limit,
                             double threshold) {
  if (k_light < 1 || k_light > prob.n() - 1)
    throw InvalidArgument("pair_solutions: bad light body count");
  const int nf = static_cast<int>(full.certificates.size());
  const int nl = static_cast<int>(limit.certificates.size());
  PairingReport rep;

  std::vector<std::vector<double>> norm(nf);
  for (int i = 0; i < nf; ++i) {
    std::vector<double> pos =
        light_midpoints(full.certificates[i], prob, k_light);
    std::vector<double> mu(prob.masses().masses().begin(),
                           prob.masses().masses().begin() + k_light);
    norm[i] = normalize_cluster(pos, mu).p_tilde;
  }
  std::vector<std::vector<double>> lim(nl);
  for (int j = 0; j < nl; ++j) {
    const IntervalVector& box = limit.certificates[j].box;
    lim[j].resize(box.size());
    for (size_t t = 0; t < box.size(); ++t) lim[j][t] = box[t].mid();
  }

  // square matrix padded with a sentinel larger than any real cost
  const int n = std::max(nf, nl);
  if (n == 0) return rep;
  double worst = 0.0;
  std::vector<double> cost(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nl; ++j) {
      double c = relabel_cost(norm[i], lim[j], k_light);
      cost[static_cast<size_t>(i) * n + j] = c;
      worst = std::max(worst, c);
    }
  double pad = 2.0 * worst + 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i >= nf || j >= nl) cost[static_cast<size_t>(i) * n + j] = pad;

  std::vector<int> match = assignment(cost, n);
  std::vector<char> limit_used(nl, 0);
  for (int i = 0; i < nf; ++i) {
    int j = match[i];
    double c = cost[static_cast<size_t>(i) * n + j];
    if (j < nl && c <= threshold) {
      rep.pairs.push_back({i, j, c, norm[i]});
      rep.max_discrepancy = std::max(rep.max_discrepancy, c);
      limit_used[j] = 1;
    } else {
      rep.unmatched_full.push_back(i);
    }
  }
  for (int j = 0; j < nl; ++j)
    if (!limit_used[j]) rep.unmatched_limit.push_back(j);
  return rep;
}

double continuation_residual(const std::vector<double>& q_hat,
                             const std::vector<double>& heavy_masses,
                             double xs, double ys,
                             const std::vector<double>& p_hat,
                             const std::vector<double>& mu_tilde,
                             double theta) {
  if (!(theta > 0.0))
    throw InvalidArgument("continuation_residual: theta must be positive");
  const int nh = static_cast<int>(heavy_masses.size());
  const int k = static_cast<int>(mu_tilde.size());
  if (q_hat.size() != static_cast<size_t>(2 * nh) ||
      p_hat.size() != static_cast<size_t>(2 * k))
    throw InvalidArgument("continuation_residual: size mismatch");

  const int n = k + nh;  // lights first, then heavies
  Interval scale = cbrt(Interval(theta));
  std::vector<Interval> m(n), px(n), py(n);
  for (int j = 0; j < k; ++j) {
    m[j] = Interval(theta) * Interval(mu_tilde[j]);
    px[j] = Interval(xs) + scale * Interval(p_hat[2 * j]);
    py[j] = Interval(ys) + scale * Interval(p_hat[2 * j + 1]);
  }
  for (int i = 0; i < nh; ++i) {
    m[k + i] = Interval(heavy_masses[i]);
    px[k + i] = Interval(q_hat[2 * i]);
    py[k + i] = Interval(q_hat[2 * i + 1]);
  }

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Interval fx = m[i] * px[i];
    Interval fy = m[i] * py[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Interval dx = px[i] - px[j];
      Interval dy = py[i] - py[j];
      Interval w = (m[i] * m[j]) * inv_pow_3_2(sqr(dx) + sqr(dy));
      fx -= w * dx;
      fy -= w * dy;
    }
    worst = std::max({worst, fx.mag(), fy.mag()});
  }
  return worst;
}

}  // namespace ccenum
