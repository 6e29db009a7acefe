#include "ccenum/nbody.hpp"

#include <cmath>
#include <cstddef>

#include "ccenum/bounds.hpp"

namespace ccenum {

MassVector::MassVector(std::vector<double> masses) : m_(std::move(masses)) {
  if (m_.empty()) throw InvalidArgument("MassVector: empty");
  total_ = 0.0;
  for (double m : m_) {
    if (!(m > 0) || !std::isfinite(m))
      throw InvalidArgument("MassVector: masses must be positive and finite");
    total_ += m;
  }
}

ReducedNBodyProblem::ReducedNBodyProblem(MassVector masses, int gauge)
    : n_(masses.size()), m_(std::move(masses)), gauge_(gauge) {
  if (n_ < 2) throw InvalidArgument("ReducedNBodyProblem: need n >= 2");
  if (gauge_ < 0 || gauge_ >= n_ - 1)
    throw InvalidArgument("ReducedNBodyProblem: gauge index out of range");
  rbound_ = nbody_size_bound(n_, m_.total());

  vx_.assign(n_ - 1, -1);
  vy_.assign(n_ - 1, -1);
  int idx = 0;
  for (int i = 0; i < n_ - 1; ++i) {
    vx_[i] = idx++;
    if (i != gauge_) vy_[i] = idx++;
  }

  iv_m_.reserve(n_);
  for (int i = 0; i < n_; ++i) iv_m_.emplace_back(m_[i]);
  iv_inv_mn_ = Interval(1.0) / iv_m_[n_ - 1];
  iv_mm_.assign(static_cast<size_t>(n_) * n_, Interval());
  floor_.assign(static_cast<size_t>(n_) * n_, 0.0);
  floor2_.assign(static_cast<size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      // the diagonal m_i^2 feeds the l == i chain-rule term in jacobian()
      iv_mm_[i * n_ + j] = iv_m_[i] * iv_m_[j];
      if (i == j) continue;
      double fl = nbody_min_dist(m_[i], m_[j], m_.total(), rbound_);
      floor_[i * n_ + j] = fl;
      floor2_[i * n_ + j] = detail::next_down(fl * fl);
    }
}

std::pair<Interval, Interval> ReducedNBodyProblem::com_fill(
    const IntervalVector& x) const {
  Interval sx, sy;
  for (int i = 0; i < n_ - 1; ++i) {
    sx += iv_m_[i] * x[vx_[i]];
    if (i != gauge_) sy += iv_m_[i] * x[vy_[i]];
  }
  return {-(sx * iv_inv_mn_), -(sy * iv_inv_mn_)};
}

void ReducedNBodyProblem::positions(const IntervalVector& x,
                                    std::vector<Interval>& px,
                                    std::vector<Interval>& py) const {
  px.resize(n_);
  py.resize(n_);
  for (int i = 0; i < n_ - 1; ++i) {
    px[i] = x[vx_[i]];
    py[i] = i == gauge_ ? Interval() : x[vy_[i]];
  }
  auto qn = com_fill(x);
  px[n_ - 1] = qn.first;
  py[n_ - 1] = qn.second;
}

bool ReducedNBodyProblem::eval(const IntervalVector& x, IntervalVector& f,
                               std::pair<int, int>* collision) const {
  std::vector<Interval> px, py;
  positions(x, px, py);
  f.assign(dim(), Interval());
  for (int i = 0; i < n_ - 1; ++i) {
    f[vx_[i]] = iv_m_[i] * px[i];
    if (vy_[i] >= 0) f[vy_[i]] = iv_m_[i] * py[i];
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Interval dx = px[i] - px[j];
      Interval dy = py[i] - py[j];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) {
        if (collision) *collision = {i, j};
        return false;
      }
      Interval t = inv_pow_3_2(s);
      Interval gx = iv_mm_[i * n_ + j] * (dx * t);
      Interval gy = iv_mm_[i * n_ + j] * (dy * t);
      if (i < n_ - 1) {
        f[vx_[i]] -= gx;
        if (vy_[i] >= 0) f[vy_[i]] -= gy;
      }
      if (j < n_ - 1) {
        f[vx_[j]] += gx;
        if (vy_[j] >= 0) f[vy_[j]] += gy;
      }
    }
  return true;
}

bool ReducedNBodyProblem::jacobian(const IntervalVector& x, IntervalMatrix& jac,
                                   std::pair<int, int>* collision) const {
  std::vector<Interval> px, py;
  positions(x, px, py);
  // per-pair blocks D_ij = t I - 3 d d^T / r^5 (symmetric in i,j)
  std::vector<Interval> dxx(static_cast<size_t>(n_) * n_),
      dyy(static_cast<size_t>(n_) * n_), dxy(static_cast<size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Interval dx = px[i] - px[j];
      Interval dy = py[i] - py[j];
      Interval s = sqr(dx) + sqr(dy);
      if (s.lo() <= 0.0) {
        if (collision) *collision = {i, j};
        return false;
      }
      Interval t = inv_pow_3_2(s);
      Interval u3 = Interval(3.0) * inv_pow_5_2(s);
      Interval exx = t - u3 * sqr(dx);
      Interval eyy = t - u3 * sqr(dy);
      Interval exy = -(u3 * (dx * dy));
      dxx[i * n_ + j] = dxx[j * n_ + i] = exx;
      dyy[i * n_ + j] = dyy[j * n_ + i] = eyy;
      dxy[i * n_ + j] = dxy[j * n_ + i] = exy;
    }

  const int d = dim();
  jac.resize(d, d);
  const int last = n_ - 1;
  for (int i = 0; i < n_ - 1; ++i) {
    for (int l = 0; l < n_ - 1; ++l) {
      // 2x2 block dR~_i/dq_l, including the chain rule through q_n
      Interval bxx, bxy, byx, byy;
      if (l == i) {
        bxx = iv_m_[i];
        byy = iv_m_[i];
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          const Interval& c = iv_mm_[i * n_ + j];
          bxx -= c * dxx[i * n_ + j];
          byy -= c * dyy[i * n_ + j];
          bxy -= c * dxy[i * n_ + j];
        }
        byx = bxy;
      } else {
        const Interval& c = iv_mm_[i * n_ + l];
        bxx = c * dxx[i * n_ + l];
        byy = c * dyy[i * n_ + l];
        bxy = c * dxy[i * n_ + l];
        byx = bxy;
      }
      {
        const Interval cn = iv_mm_[i * n_ + l];
        bxx -= cn * dxx[i * n_ + last];
        byy -= cn * dyy[i * n_ + last];
        Interval cxy = cn * dxy[i * n_ + last];
        bxy -= cxy;
        byx -= cxy;
      }
      jac(vx_[i], vx_[l]) = bxx;
      if (vy_[l] >= 0) jac(vx_[i], vy_[l]) = bxy;
      if (vy_[i] >= 0) {
        jac(vy_[i], vx_[l]) = byx;
        if (vy_[l] >= 0) jac(vy_[i], vy_[l]) = byy;
      }
    }
  }
  return true;
}

Prescreen ReducedNBodyProblem::prescreen(const IntervalVector& x,
                                         std::pair<int, int>* collision) const {
  std::vector<Interval> px, py;
  positions(x, px, py);
  // reconstructed body must respect the global size bound
  if (px[n_ - 1].lo() > rbound_ || px[n_ - 1].hi() < -rbound_ ||
      py[n_ - 1].lo() > rbound_ || py[n_ - 1].hi() < -rbound_)
    return Prescreen::NoZero;

  // pair geometry; singular pairs go to the summed-row test
  std::vector<Interval> ss(static_cast<size_t>(n_) * n_);
  std::vector<char> singular(static_cast<size_t>(n_) * n_, 0);
  std::pair<int, int> first_collision{-1, -1};
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Interval dx = px[i] - px[j];
      Interval dy = py[i] - py[j];
      Interval s = sqr(dx) + sqr(dy);
      if (s.hi() < floor2_[i * n_ + j]) return Prescreen::NoZero;
      ss[i * n_ + j] = ss[j * n_ + i] = s;
      if (s.lo() <= 0.0) {
        singular[i * n_ + j] = singular[j * n_ + i] = 1;
        if (first_collision.first < 0) first_collision = {i, j};
      }
    }

  if (first_collision.first >= 0) {
    // Any zero of the reduced system zeroes every full-system row (the
    // reconstructed and gauge rows follow from the identities).  Rows of
    // bodies untouched by any singular pair are regular and can exclude
    // zero on their own.
    for (int l = 0; l < n_; ++l) {
      bool regular = true;
      for (int m = 0; m < n_ && regular; ++m)
        if (m != l && singular[l * n_ + m]) regular = false;
      if (!regular) continue;
      Interval fx = iv_m_[l] * px[l];
      Interval fy = iv_m_[l] * py[l];
      for (int m = 0; m < n_; ++m) {
        if (m == l) continue;
        Interval t = inv_pow_3_2(ss[l * n_ + m]);
        fx -= iv_mm_[l * n_ + m] * ((px[l] - px[m]) * t);
        fy -= iv_mm_[l * n_ + m] * ((py[l] - py[m]) * t);
      }
      if (!fx.contains_zero() || !fy.contains_zero()) return Prescreen::NoZero;
    }

    // The singular pair term cancels in R_i + R_j.
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (!singular[i * n_ + j]) continue;
        Interval ux = iv_m_[i] * px[i] + iv_m_[j] * px[j];
        Interval uy = iv_m_[i] * py[i] + iv_m_[j] * py[j];
        bool usable = true;
        for (int l = 0; l < n_ && usable; ++l) {
          if (l == i || l == j) continue;
          if (singular[i * n_ + l] || singular[j * n_ + l]) {
            usable = false;
            break;
          }
          Interval ti = inv_pow_3_2(ss[i * n_ + l]);
          Interval tj = inv_pow_3_2(ss[j * n_ + l]);
          ux -= iv_mm_[i * n_ + l] * ((px[i] - px[l]) * ti) +
                iv_mm_[j * n_ + l] * ((px[j] - px[l]) * tj);
          uy -= iv_mm_[i * n_ + l] * ((py[i] - py[l]) * ti) +
                iv_mm_[j * n_ + l] * ((py[j] - py[l]) * tj);
        }
        if (usable && (!ux.contains_zero() || !uy.contains_zero()))
          return Prescreen::NoZero;
      }
    if (collision) *collision = first_collision;
    return Prescreen::Collision;
  }

  IntervalVector f(dim());
  for (int i = 0; i < n_ - 1; ++i) {
    f[vx_[i]] = iv_m_[i] * px[i];
    if (vy_[i] >= 0) f[vy_[i]] = iv_m_[i] * py[i];
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Interval s = ss[i * n_ + j];
      Interval dx = px[i] - px[j];
      Interval dy = py[i] - py[j];
      Interval t = inv_pow_3_2(s);
      Interval gx = iv_mm_[i * n_ + j] * (dx * t);
      Interval gy = iv_mm_[i * n_ + j] * (dy * t);
      if (i < n_ - 1) {
        f[vx_[i]] -= gx;
        if (vy_[i] >= 0) f[vy_[i]] -= gy;
      }
      if (j < n_ - 1) {
        f[vx_[j]] += gx;
        if (vy_[j] >= 0) f[vy_[j]] += gy;
      }
    }
  for (const Interval& c : f)
    if (!c.contains_zero()) return Prescreen::NoZero;
  return Prescreen::Unknown;
}

bool ReducedNBodyProblem::check_gauge_validity(const IntervalVector& x) const {
  auto qn = com_fill(x);
  return x[vx_[gauge_]].disjoint(qn.first);
}

}  // namespace ccenum
