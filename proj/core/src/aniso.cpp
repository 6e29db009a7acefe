#include "ccenum/aniso.hpp"

#include <cmath>
#include <cstddef>

#include "ccenum/bounds.hpp"

namespace ccenum {

AnisoProblem::AnisoProblem(std::vector<double> mu, double a, double b)
    : k_(static_cast<int>(mu.size())), mu_(std::move(mu)), a_(a), b_(b) {
  if (k_ < 2) throw InvalidArgument("AnisoProblem: need at least two bodies");
  if (!std::isfinite(a_) || !std::isfinite(b_))
    throw InvalidArgument("AnisoProblem: non-finite coefficient");
  if (a_ == b_)
    throw InvalidArgument(
        "AnisoProblem: a == b leaves a rotational degeneracy; isotropic "
        "configurations are not supported");
  if (a_ <= 0 && b_ <= 0)
    throw InvalidArgument("AnisoProblem: no solutions when a <= 0 and b <= 0");
  double sum = 0.0;
  for (double m : mu_) {
    if (!(m > 0)) throw InvalidArgument("AnisoProblem: weights must be > 0");
    sum += m;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw InvalidArgument("AnisoProblem: weights must sum to 1");

  auto bxy = aniso_size_bound(k_, 1.0, a_, b_);
  bx_ = bxy.first;
  by_ = bxy.second;
  double R = std::sqrt((sqr(Interval(bx_)) + sqr(Interval(by_))).hi());
  R = detail::next_up(R);

  iv_mu_.reserve(k_);
  iv_mua_.reserve(k_);
  iv_mub_.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    iv_mu_.emplace_back(mu_[i]);
    iv_mua_.push_back(iv_mu_[i] * Interval(a_));
    iv_mub_.push_back(iv_mu_[i] * Interval(b_));
  }
  iv_mumu_.assign(static_cast<size_t>(k_) * k_, Interval());
  floor_.assign(static_cast<size_t>(k_) * k_, 0.0);
  floor2_.assign(static_cast<size_t>(k_) * k_, 0.0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      if (i == j) continue;
      iv_mumu_[i * k_ + j] = iv_mu_[i] * iv_mu_[j];
      double fl = aniso_min_dist(mu_[i], mu_[j], a_, b_, R);
      floor_[i * k_ + j] = fl;
      floor2_[i * k_ + j] = detail::next_down(fl * fl);
    }
}

void AnisoProblem::positions(const IntervalVector& x, std::vector<Interval>& px,
                             std::vector<Interval>& py) const {
  px.resize(k_);
  py.resize(k_);
  for (int i = 0; i < k_; ++i) {
    px[i] = x[2 * i];
    py[i] = x[2 * i + 1];
  }
}

bool AnisoProblem::eval(const IntervalVector& x, IntervalVector& f,
                        std::pair<int, int>* collision) const {
  f.resize(2 * k_);
  for (int i = 0; i < k_; ++i) {
    f[2 * i] = iv_mua_[i] * x[2 * i];
    f[2 * i + 1] = iv_mub_[i] * x[2 * i + 1];
  }
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) {
        if (collision) *collision = {i, j};
        return false;
      }
      Interval t = inv_pow_3_2(s);
      Interval gx = iv_mumu_[i * k_ + j] * (dx * t);
      Interval gy = iv_mumu_[i * k_ + j] * (dy * t);
      f[2 * i] -= gx;
      f[2 * i + 1] -= gy;
      f[2 * j] += gx;
      f[2 * j + 1] += gy;
    }
  return true;
}

bool AnisoProblem::jacobian(const IntervalVector& x, IntervalMatrix& jac,
                            std::pair<int, int>* collision) const {
  const int n = 2 * k_;
  jac.resize(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) jac(r, c) = Interval();
  for (int i = 0; i < k_; ++i) {
    jac(2 * i, 2 * i) = iv_mua_[i];
    jac(2 * i + 1, 2 * i + 1) = iv_mub_[i];
  }
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) {
        if (collision) *collision = {i, j};
        return false;
      }
      Interval t = inv_pow_3_2(s);
      Interval u3 = Interval(3.0) * inv_pow_5_2(s);
      // d/dq_i [(q_i-q_j)/r^3] = t*I - 3 d d^T / r^5
      Interval dxx = t - u3 * sqr(dx);
      Interval dyy = t - u3 * sqr(dy);
      Interval dxy = -(u3 * (dx * dy));
      Interval c = iv_mumu_[i * k_ + j];
      Interval cxx = c * dxx, cyy = c * dyy, cxy = c * dxy;
      jac(2 * i, 2 * i) -= cxx;
      jac(2 * i, 2 * i + 1) -= cxy;
      jac(2 * i + 1, 2 * i) -= cxy;
      jac(2 * i + 1, 2 * i + 1) -= cyy;
      jac(2 * j, 2 * j) -= cxx;
      jac(2 * j, 2 * j + 1) -= cxy;
      jac(2 * j + 1, 2 * j) -= cxy;
      jac(2 * j + 1, 2 * j + 1) -= cyy;
      jac(2 * i, 2 * j) += cxx;
      jac(2 * i, 2 * j + 1) += cxy;
      jac(2 * i + 1, 2 * j) += cxy;
      jac(2 * i + 1, 2 * j + 1) += cyy;
      jac(2 * j, 2 * i) += cxx;
      jac(2 * j, 2 * i + 1) += cxy;
      jac(2 * j + 1, 2 * i) += cxy;
      jac(2 * j + 1, 2 * i + 1) += cyy;
    }
  return true;
}

Prescreen AnisoProblem::prescreen(const IntervalVector& x,
                                  std::pair<int, int>* collision) const {
  // center of mass: summing the equations gives a*sum(mu x) = 0 (and b, y)
  if (a_ != 0.0) {
    Interval sx;
    for (int i = 0; i < k_; ++i) sx += iv_mu_[i] * x[2 * i];
    if (!sx.contains_zero()) return Prescreen::NoZero;
  }
  if (b_ != 0.0) {
    Interval sy;
    for (int i = 0; i < k_; ++i) sy += iv_mu_[i] * x[2 * i + 1];
    if (!sy.contains_zero()) return Prescreen::NoZero;
  }

  // pair geometry; singular pairs are handled by the summed-row test
  std::vector<Interval> ss(static_cast<size_t>(k_) * k_);
  std::vector<char> singular(static_cast<size_t>(k_) * k_, 0);
  std::pair<int, int> first_collision{-1, -1};
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval s = sqr(dx) + sqr(dy);
      if (s.hi() < floor2_[i * k_ + j]) return Prescreen::NoZero;
      ss[i * k_ + j] = ss[j * k_ + i] = s;
      if (s.lo() <= 0.0) {
        singular[i * k_ + j] = singular[j * k_ + i] = 1;
        if (first_collision.first < 0) first_collision = {i, j};
      }
    }

  if (first_collision.first >= 0) {
    // Rows of bodies untouched by any singular pair are regular and can
    // exclude zero on their own.
    for (int l = 0; l < k_; ++l) {
      bool regular = true;
      for (int m = 0; m < k_ && regular; ++m)
        if (m != l && singular[l * k_ + m]) regular = false;
      if (!regular) continue;
      Interval fx = iv_mua_[l] * x[2 * l];
      Interval fy = iv_mub_[l] * x[2 * l + 1];
      for (int m = 0; m < k_; ++m) {
        if (m == l) continue;
        Interval t = inv_pow_3_2(ss[l * k_ + m]);
        fx -= iv_mumu_[l * k_ + m] * ((x[2 * l] - x[2 * m]) * t);
        fy -= iv_mumu_[l * k_ + m] * ((x[2 * l + 1] - x[2 * m + 1]) * t);
      }
      if (!fx.contains_zero() || !fy.contains_zero()) return Prescreen::NoZero;
    }

    // The singular pair interaction cancels in f_i + f_j; if the summed
    // rows exclude 0 via the regular terms, the box holds no zero.
    for (int i = 0; i < k_; ++i)
      for (int j = i + 1; j < k_; ++j) {
        if (!singular[i * k_ + j]) continue;
        Interval ux = iv_mua_[i] * x[2 * i] + iv_mua_[j] * x[2 * j];
        Interval uy = iv_mub_[i] * x[2 * i + 1] + iv_mub_[j] * x[2 * j + 1];
        bool usable = true;
        for (int l = 0; l < k_ && usable; ++l) {
          if (l == i || l == j) continue;
          if (singular[i * k_ + l] || singular[j * k_ + l]) {
            usable = false;
            break;
          }
          Interval ti = inv_pow_3_2(ss[i * k_ + l]);
          Interval tj = inv_pow_3_2(ss[j * k_ + l]);
          ux -= iv_mumu_[i * k_ + l] * ((x[2 * i] - x[2 * l]) * ti) +
                iv_mumu_[j * k_ + l] * ((x[2 * j] - x[2 * l]) * tj);
          uy -= iv_mumu_[i * k_ + l] * ((x[2 * i + 1] - x[2 * l + 1]) * ti) +
                iv_mumu_[j * k_ + l] * ((x[2 * j + 1] - x[2 * l + 1]) * tj);
        }
        if (usable && (!ux.contains_zero() || !uy.contains_zero()))
          return Prescreen::NoZero;
      }
    if (collision) *collision = first_collision;
    return Prescreen::Collision;
  }

  IntervalVector f(2 * k_);
  for (int i = 0; i < k_; ++i) {
    f[2 * i] = iv_mua_[i] * x[2 * i];
    f[2 * i + 1] = iv_mub_[i] * x[2 * i + 1];
  }
  Interval rhs_u;  // sum mu_i mu_j / r_ij
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval s = ss[i * k_ + j];
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval t = inv_pow_3_2(s);
      Interval gx = iv_mumu_[i * k_ + j] * (dx * t);
      Interval gy = iv_mumu_[i * k_ + j] * (dy * t);
      f[2 * i] -= gx;
      f[2 * i + 1] -= gy;
      f[2 * j] += gx;
      f[2 * j + 1] += gy;
      rhs_u += iv_mumu_[i * k_ + j] * inv_sqrt(s);
    }
  for (const Interval& c : f)
    if (!c.contains_zero()) return Prescreen::NoZero;

  // identity: a*sum(mu x^2) + b*sum(mu y^2) = sum mu_i mu_j / r_ij
  Interval lhs;
  for (int i = 0; i < k_; ++i)
    lhs += iv_mua_[i] * sqr(x[2 * i]) + iv_mub_[i] * sqr(x[2 * i + 1]);
  if (lhs.disjoint(rhs_u)) return Prescreen::NoZero;

  return Prescreen::Unknown;
}

void AnisoProblem::inertia_residuals(const IntervalVector& x, Interval& rx,
                                     Interval& ry, Interval& rsum) const {
  Interval ix, iy, ux, uy, u;
  for (int i = 0; i < k_; ++i) {
    ix += iv_mu_[i] * sqr(x[2 * i]);
    iy += iv_mu_[i] * sqr(x[2 * i + 1]);
  }
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) throw PossibleCollision();
      Interval t = inv_pow_3_2(s);
      Interval c = iv_mumu_[i * k_ + j];
      ux += c * (sqr(dx) * t);
      uy += c * (sqr(dy) * t);
      u += c * inv_sqrt(s);
    }
  rx = Interval(a_) * ix - ux;
  ry = Interval(b_) * iy - uy;
  rsum = (Interval(a_) * ix + Interval(b_) * iy) - u;
}

double AnisoProblem::potential(const std::vector<double>& x) const {
  double w = 0.0;
  for (int i = 0; i < k_; ++i)
    w += 0.5 * mu_[i] *
         (a_ * x[2 * i] * x[2 * i] + b_ * x[2 * i + 1] * x[2 * i + 1]);
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      double dx = x[2 * i] - x[2 * j];
      double dy = x[2 * i + 1] - x[2 * j + 1];
      w += mu_[i] * mu_[j] / std::sqrt(dx * dx + dy * dy);
    }
  return w;
}

IntervalMatrix AnisoProblem::collinear_matrix(const IntervalVector& x) const {
  // inverse cubes of all mutual distances
  std::vector<Interval> ir3(static_cast<size_t>(k_) * k_);
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) {
      Interval dx = x[2 * i] - x[2 * j];
      Interval dy = x[2 * i + 1] - x[2 * j + 1];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) throw PossibleCollision();
      Interval t = inv_pow_3_2(s);
      ir3[i * k_ + j] = t;
      ir3[j * k_ + i] = t;
    }
  // Difference form of the system: row i relates gaps g_j = p_j - p_{j+1}
  // (1-based bodies).  Entry (i,j), bodies 1..k, gaps 1..k-1:
  //   [j >= i]  sum_{t=j+1..k} mu_t / r_{i,t}^3
  // - [j <= i-1] sum_{t=1..j}  mu_t / r_{i,t}^3
  // + [j <= i]  sum_{t=1..j}  mu_t / r_{i+1,t}^3
  // - [j >= i+1] sum_{t=j+1..k} mu_t / r_{i+1,t}^3
  IntervalMatrix a;
  a.resize(k_ - 1, k_ - 1);
  for (int i = 1; i <= k_ - 1; ++i)
    for (int j = 1; j <= k_ - 1; ++j) {
      Interval e;
      if (j >= i)
        for (int t = j + 1; t <= k_; ++t)
          e += iv_mu_[t - 1] * ir3[(i - 1) * k_ + (t - 1)];
      if (j <= i - 1)
        for (int t = 1; t <= j; ++t)
          e -= iv_mu_[t - 1] * ir3[(i - 1) * k_ + (t - 1)];
      if (j <= i)
        for (int t = 1; t <= j; ++t)
          e += iv_mu_[t - 1] * ir3[i * k_ + (t - 1)];
      if (j >= i + 1)
        for (int t = j + 1; t <= k_; ++t)
          e -= iv_mu_[t - 1] * ir3[i * k_ + (t - 1)];
      a(i - 1, j - 1) = e;
    }
  return a;
}

}  // namespace ccenum
