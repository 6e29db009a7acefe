// Randomized property suites shared between the unit tests and the
// acceptance runner.  Every suite is deterministic given its seed.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "ccenum/analytic.hpp"
#include "ccenum/search.hpp"

namespace props {

struct Result {
  long trials = 0;
  long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline bool contains_widened(const ccenum::Interval& x, double v, int ulps) {
  double lo = x.lo(), hi = x.hi();
  for (int i = 0; i < ulps; ++i) {
    lo = std::nextafter(lo, -INFINITY);
    hi = std::nextafter(hi, INFINITY);
  }
  return lo <= v && v <= hi;
}

// Containment and inclusion-isotonicity of the interval primitives:
// the enclosure of an operation must contain the double-precision
// result at sampled points (correct rounding puts it within 1-2 ulps
// of the exact value), and shrinking the operands must not grow the
// result.
inline Result interval_fuzz(std::uint64_t seed, int trials) {
  using ccenum::Interval;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Result res;
  auto sample = [&](const Interval& x) {
    double t = unit(rng);
    double v = x.lo() + t * (x.hi() - x.lo());
    return std::min(std::max(v, x.lo()), x.hi());
  };
  auto subset = [](const Interval& a, const Interval& b) {
    return b.lo() <= a.lo() && a.hi() <= b.hi();
  };
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    double a = val(rng), b = val(rng), c = val(rng), d = val(rng);
    Interval x(std::min(a, b), std::max(a, b));
    Interval y(std::min(c, d), std::max(c, d));
    double px = sample(x), py = sample(y);

    if (!contains_widened(x + y, px + py, 1)) res.fail("add containment");
    if (!contains_widened(x - y, px - py, 1)) res.fail("sub containment");
    if (!contains_widened(x * y, px * py, 1)) res.fail("mul containment");
    if (!(y.lo() <= 0.0 && y.hi() >= 0.0)) {
      if (!contains_widened(x / y, px / py, 1)) res.fail("div containment");
    }
    if (!contains_widened(sqr(x), px * px, 2)) res.fail("sqr containment");
    if (x.lo() > 0.0) {
      if (!contains_widened(sqrt(x), std::sqrt(px), 2))
        res.fail("sqrt containment");
      if (!contains_widened(cbrt(x), std::cbrt(px), 3))
        res.fail("cbrt containment");
      if (!contains_widened(ccenum::inv_pow_3_2(x), std::pow(px, -1.5), 4))
        res.fail("inv_pow_3_2 containment");
      if (!contains_widened(ccenum::inv_pow_5_2(x), std::pow(px, -2.5), 4))
        res.fail("inv_pow_5_2 containment");
      // kernel consistency: s^{-5/2} = s^{-3/2} / s must overlap
      Interval lhs = ccenum::inv_pow_5_2(x);
      Interval rhs = ccenum::inv_pow_3_2(x) / x;
      if (lhs.hi() < rhs.lo() || rhs.hi() < lhs.lo())
        res.fail("inv_pow kernel consistency");
    }

    // inclusion isotonicity on shrunken operands
    double s1 = unit(rng), s2 = unit(rng);
    double xl = x.lo() + 0.25 * s1 * (x.hi() - x.lo());
    double xh = x.hi() - 0.25 * s2 * (x.hi() - x.lo());
    Interval xs(std::min(xl, xh), std::max(xl, xh));
    if (!subset(xs + y, x + y)) res.fail("add isotonicity");
    if (!subset(xs * y, x * y)) res.fail("mul isotonicity");
    if (!subset(sqr(xs), sqr(x))) res.fail("sqr isotonicity");
  }
  return res;
}

// Interval Jacobian at thin boxes against central finite differences of
// the residual, at random collision-free configurations.
inline Result jacobian_fd(std::uint64_t seed, int points) {
  using namespace ccenum;
  std::mt19937_64 rng(seed);
  AnisoProblem prob(std::vector<double>(3, 1.0 / 3), 0.75, 2.25);
  std::uniform_real_distribution<double> ux(-prob.bound_x(), prob.bound_x());
  std::uniform_real_distribution<double> uy(-prob.bound_y(), prob.bound_y());
  const int n = prob.dim();
  Result res;
  auto thin = [&](const std::vector<double>& p) {
    IntervalVector b;
    for (double v : p) b.push_back(Interval(v, v));
    return b;
  };
  while (res.trials < points) {
    std::vector<double> p(n);
    for (int i = 0; i < 3; ++i) {
      p[2 * i] = ux(rng);
      p[2 * i + 1] = uy(rng);
    }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3; ++j) {
        double dx = p[2 * i] - p[2 * j], dy = p[2 * i + 1] - p[2 * j + 1];
        if (dx * dx + dy * dy < 0.04) ok = false;
      }
    if (!ok) continue;
    ++res.trials;

    IntervalMatrix jac(n, n);
    if (!prob.jacobian(thin(p), jac)) {
      res.fail("jacobian reported collision off the collision set");
      continue;
    }
    const double h = 1e-6;
    for (int col = 0; col < n; ++col) {
      std::vector<double> pp = p, pm = p;
      pp[col] += h;
      pm[col] -= h;
      IntervalVector fp(n), fm(n);
      if (!prob.eval(thin(pp), fp) || !prob.eval(thin(pm), fm)) {
        --col;
        continue;
      }
      for (int row = 0; row < n; ++row) {
        double fd = (fp[row].mid() - fm[row].mid()) / (2 * h);
        double jv = jac(row, col).mid();
        double scale = std::max({1.0, std::fabs(fd), std::fabs(jv)});
        if (std::fabs(fd - jv) / scale > 1e-4) {
          std::ostringstream os;
          os << "jacobian fd mismatch at (" << row << "," << col
             << "): " << fd << " vs " << jv;
          res.fail(os.str());
        }
      }
    }
  }
  return res;
}

// Structural invariants every certified solution satisfies.
inline Result certificate_invariants(const ccenum::EnumerationReport& rep,
                                     const ccenum::AnisoProblem& prob) {
  using namespace ccenum;
  Result res;
  const auto& mu = prob.mu();
  for (const auto& cert : rep.certificates) {
    ++res.trials;
    std::vector<Interval> px, py;
    prob.positions(cert.box, px, py);

    Interval cx(0.0), cy(0.0);
    bool in_bounds = true;
    for (int i = 0; i < prob.k(); ++i) {
      cx += Interval(mu[i]) * px[i];
      cy += Interval(mu[i]) * py[i];
      if (px[i].mag() > prob.bound_x() + 1e-9 ||
          py[i].mag() > prob.bound_y() + 1e-9)
        in_bounds = false;
    }
    if (!in_bounds) res.fail("certificate outside the a-priori box");
    if (cx.lo() > 0.0 || cx.hi() < 0.0 || cy.lo() > 0.0 || cy.hi() < 0.0)
      res.fail("center of mass excludes zero");

    IntervalVector f;
    if (!prob.eval(cert.box, f)) {
      res.fail("certificate touches a collision");
      continue;
    }
    for (const auto& fi : f)
      if (fi.lo() > 0.0 || fi.hi() < 0.0) res.fail("residual excludes zero");

    Interval rx, ry, rsum;
    prob.inertia_residuals(cert.box, rx, ry, rsum);
    for (const Interval* r : {&rx, &ry, &rsum})
      if (r->lo() > 0.0 || r->hi() < 0.0)
        res.fail("inertia identity excludes zero");

    if (!(cert.contraction_norm < 1.0))
      res.fail("contraction norm not below one");

    // difference-form eigen identities A dx = a dx, A dy = b dy
    const int m = prob.k() - 1;
    IntervalMatrix A = prob.collinear_matrix(cert.box);
    for (int i = 0; i < m; ++i) {
      Interval adx(0.0), ady(0.0);
      for (int j = 0; j < m; ++j) {
        adx += A(i, j) * (px[j] - px[j + 1]);
        ady += A(i, j) * (py[j] - py[j + 1]);
      }
      Interval wx = adx - Interval(prob.a()) * (px[i] - px[i + 1]);
      Interval wy = ady - Interval(prob.b()) * (py[i] - py[i + 1]);
      if (wx.lo() > 0.0 || wx.hi() < 0.0 || wy.lo() > 0.0 || wy.hi() < 0.0)
        res.fail("difference-form eigen identity violated");
    }
  }
  return res;
}

}  // namespace props
