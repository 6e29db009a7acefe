#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccenum {

/// Precondition violation (caller bug): e.g. constructing [2,1].
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Domain error at runtime (not a caller bug): e.g. dividing by an
/// interval that straddles zero.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pairwise distance enclosure touches zero; the search must split or
/// prune the offending box, never continue silently.
class PossibleCollision : public DomainError {
 public:
  PossibleCollision() : DomainError("pairwise distance enclosure contains 0") {}
};

namespace detail {

inline double next_down(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return x;
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double next_up(double x) {
  if (x == std::numeric_limits<double>::infinity()) return x;
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Directed-rounding primitives that stay exact when the floating-point
// result is provably exact (Fast2Sum / fma residue tests), so dyadic
// arithmetic keeps zero-width enclosures.

inline double add_down(double a, double b) {
  double s = a + b;
  if (s - a == b && s - b == a) return s;
  return next_down(s);
}
inline double add_up(double a, double b) {
  double s = a + b;
  if (s - a == b && s - b == a) return s;
  return next_up(s);
}
inline double sub_down(double a, double b) {
  double s = a - b;
  if (s + b == a && a - s == b) return s;
  return next_down(s);
}
inline double sub_up(double a, double b) {
  double s = a - b;
  if (s + b == a && a - s == b) return s;
  return next_up(s);
}
inline double mul_down(double a, double b) {
  double p = a * b;
  if (std::fma(a, b, -p) == 0.0) return p;
  return next_down(p);
}
inline double mul_up(double a, double b) {
  double p = a * b;
  if (std::fma(a, b, -p) == 0.0) return p;
  return next_up(p);
}
inline double div_down(double a, double b) {
  double q = a / b;
  if (std::isfinite(q) && std::fma(q, b, -a) == 0.0) return q;
  return next_down(q);
}
inline double div_up(double a, double b) {
  double q = a / b;
  if (std::isfinite(q) && std::fma(q, b, -a) == 0.0) return q;
  return next_up(q);
}

}  // namespace detail

/// Closed interval [lo, hi] of binary64 endpoints.  Every arithmetic
/// operation returns an enclosure of the exact real-valued result set;
/// outward rounding is realized by one-ulp endpoint nudging so the rest
/// of the library never touches the FPU rounding mode.  Values are
/// immutable after construction and safe to share between threads.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  Interval(double v) : lo_(v), hi_(v) {
    if (std::isnan(v)) throw InvalidArgument("Interval: NaN endpoint");
  }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi))
      throw InvalidArgument("Interval: NaN endpoint");
    if (lo > hi) throw InvalidArgument("Interval: lo > hi");
  }

  /// Trusted constructor used by the arithmetic kernels; skips checks.
  static Interval raw(double lo, double hi) {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const {
    double m = 0.5 * (lo_ + hi_);
    if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
    if (m < lo_) m = lo_;
    if (m > hi_) m = hi_;
    return m;
  }
  double width() const { return hi_ - lo_; }
  /// Magnitude: max |x| over the interval.
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const Interval& o) const {
    return o.lo_ <= lo_ && hi_ <= o.hi_;
  }
  /// Strict interior containment (one-ulp margin comes for free from <).
  bool interior_of(const Interval& o) const {
    return o.lo_ < lo_ && hi_ < o.hi_;
  }
  bool disjoint(const Interval& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }

  /// Intersection; requires non-disjoint operands.
  Interval intersect(const Interval& o) const {
    return Interval(std::max(lo_, o.lo_), std::min(hi_, o.hi_));
  }
  Interval hull(const Interval& o) const {
    return raw(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
  }

  Interval operator-() const { return raw(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return raw(detail::add_down(a.lo_, b.lo_), detail::add_up(a.hi_, b.hi_));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return raw(detail::sub_down(a.lo_, b.hi_), detail::sub_up(a.hi_, b.lo_));
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    double lo = std::min(
        std::min(detail::mul_down(a.lo_, b.lo_), detail::mul_down(a.lo_, b.hi_)),
        std::min(detail::mul_down(a.hi_, b.lo_), detail::mul_down(a.hi_, b.hi_)));
    double hi = std::max(
        std::max(detail::mul_up(a.lo_, b.lo_), detail::mul_up(a.lo_, b.hi_)),
        std::max(detail::mul_up(a.hi_, b.lo_), detail::mul_up(a.hi_, b.hi_)));
    return raw(lo, hi);
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("Interval division by interval containing 0");
    double lo = std::min(
        std::min(detail::div_down(a.lo_, b.lo_), detail::div_down(a.lo_, b.hi_)),
        std::min(detail::div_down(a.hi_, b.lo_), detail::div_down(a.hi_, b.hi_)));
    double hi = std::max(
        std::max(detail::div_up(a.lo_, b.lo_), detail::div_up(a.lo_, b.hi_)),
        std::max(detail::div_up(a.hi_, b.lo_), detail::div_up(a.hi_, b.hi_)));
    return raw(lo, hi);
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

 private:
  double lo_, hi_;
};

/// Dedicated square kernel; tighter than x*x for sign-straddling x.
inline Interval sqr(const Interval& x) {
  double a = std::fabs(x.lo()), b = std::fabs(x.hi());
  double m = std::max(a, b);
  double lo = x.contains_zero() ? 0.0 : std::min(a, b);
  return Interval::raw(detail::mul_down(lo, lo), detail::mul_up(m, m));
}

inline Interval sqrt(const Interval& x) {
  if (x.lo() < 0.0) throw DomainError("sqrt of interval with negative part");
  // stay exact on perfect squares (fma residue test)
  double rlo = std::sqrt(x.lo());
  double lo = std::fma(rlo, rlo, -x.lo()) == 0.0 ? rlo
                                                 : detail::next_down(rlo);
  if (lo < 0.0) lo = 0.0;
  double rhi = std::sqrt(x.hi());
  double hi = std::fma(rhi, rhi, -x.hi()) == 0.0 ? rhi : detail::next_up(rhi);
  return Interval::raw(lo, hi);
}

/// Cube root, monotone over the whole line; endpoints are nudged
/// outward and verified by cubing.
inline Interval cbrt(const Interval& x) {
  double lo = detail::next_down(detail::next_down(std::cbrt(x.lo())));
  double hi = detail::next_up(detail::next_up(std::cbrt(x.hi())));
  Interval out = Interval::raw(lo, hi);
  for (;;) {
    Interval c = out * out * out;
    if (c.lo() <= x.lo() && c.hi() >= x.hi()) return out;
    out = Interval::raw(detail::next_down(out.lo()), detail::next_up(out.hi()));
  }
}

/// Enclosure of s^(-3/2) for s with positive lower bound.  s^(-3/2) is
/// monotone decreasing, so it is evaluated endpoint-wise with three
/// outward nudges per endpoint (sqrt, mul, div).
inline Interval inv_pow_3_2(const Interval& s) {
  if (s.lo() <= 0.0) throw DomainError("inv_pow_3_2: argument not positive");
  double hi = detail::next_up(1.0 / detail::next_down(s.lo() * detail::next_down(std::sqrt(s.lo()))));
  double lo = detail::next_down(1.0 / detail::next_up(s.hi() * detail::next_up(std::sqrt(s.hi()))));
  return Interval::raw(lo, hi);
}

/// Enclosure of s^(-5/2) for s with positive lower bound.
inline Interval inv_pow_5_2(const Interval& s) {
  if (s.lo() <= 0.0) throw DomainError("inv_pow_5_2: argument not positive");
  auto f_up = [](double x) {
    double d = detail::mul_down(detail::mul_down(x, x),
                                detail::next_down(std::sqrt(x)));
    return detail::div_up(1.0, d);
  };
  auto f_down = [](double x) {
    double d = detail::mul_up(detail::mul_up(x, x),
                              detail::next_up(std::sqrt(x)));
    return detail::div_down(1.0, d);
  };
  return Interval::raw(f_down(s.hi()), f_up(s.lo()));
}

/// Enclosure of s^(-1/2) for s with positive lower bound.
inline Interval inv_sqrt(const Interval& s) {
  if (s.lo() <= 0.0) throw DomainError("inv_sqrt: argument not positive");
  double hi = detail::next_up(1.0 / detail::next_down(std::sqrt(s.lo())));
  double lo = detail::next_down(1.0 / detail::next_up(std::sqrt(s.hi())));
  return Interval::raw(lo, hi);
}

/// iv_make with the spec'd preconditions: finite, ordered endpoints.
inline Interval iv_make(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidArgument("iv_make: non-finite endpoint");
  if (lo > hi) throw InvalidArgument("iv_make: lo > hi");
  return Interval(lo, hi);
}

/// 1/r^3 from coordinate differences: enclosure of (dx^2+dy^2)^(-3/2).
/// Throws PossibleCollision when the squared-distance enclosure touches 0.
inline Interval inv_cube_dist(const Interval& dx, const Interval& dy) {
  Interval s = sqr(dx) + sqr(dy);
  if (s.lo() <= 0.0) throw PossibleCollision();
  return inv_pow_3_2(s);
}

using IntervalVector = std::vector<Interval>;

inline double max_width(const IntervalVector& v) {
  double w = 0.0;
  for (const auto& x : v) w = std::max(w, x.width());
  return w;
}

inline std::vector<double> midpoint(const IntervalVector& v) {
  std::vector<double> m(v.size());
  for (size_t i = 0; i < v.size(); ++i) m[i] = v[i].mid();
  return m;
}

inline bool contains_point(const IntervalVector& v, const std::vector<double>& p) {
  if (v.size() != p.size()) return false;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].contains(p[i])) return false;
  return true;
}

}  // namespace ccenum
