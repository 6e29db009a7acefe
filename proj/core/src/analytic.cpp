#include "ccenum/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ccenum/krawczyk.hpp"
#include "ccenum/linalg.hpp"

namespace ccenum {
namespace {

// ---- first-order interval automatic differentiation -----------------

struct D1 {
  Interval v, d;
};

D1 var(const Interval& x) { return {x, Interval(1.0)}; }
D1 con(const Interval& c) { return {c, Interval(0.0)}; }
D1 operator+(const D1& a, const D1& b) { return {a.v + b.v, a.d + b.d}; }
D1 operator-(const D1& a, const D1& b) { return {a.v - b.v, a.d - b.d}; }
D1 operator*(const D1& a, const D1& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
D1 operator/(const D1& a, const D1& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / sqr(b.v)};
}
D1 sqrt(const D1& a) {
  Interval s = sqrt(a.v);
  return {s, a.d / (Interval(2.0) * s)};
}
D1 cbrt(const D1& a) {
  Interval c = cbrt(a.v);
  return {c, a.d / (Interval(3.0) * sqr(c))};
}
D1 cube(const D1& a) { return a * a * a; }

using Fn1 = std::function<D1(const D1&)>;

// derivative keeps one sign over [lo, hi] (adaptive subdivision)
bool monotone_on(const Fn1& f, double lo, double hi, bool increasing,
                 int depth = 14) {
  Interval d = f(var(Interval(lo, hi))).d;
  if (increasing ? d.lo() > 0.0 : d.hi() < 0.0) return true;
  if (depth == 0) return false;
  double m = Interval(lo, hi).mid();
  if (m <= lo || m >= hi) return false;
  return monotone_on(f, lo, m, increasing, depth - 1) &&
         monotone_on(f, m, hi, increasing, depth - 1);
}

// Rigorous bisection for f(x) = target on a bracket where f is monotone
// (verified by the caller).  Point evaluations use thin intervals; the
// returned interval contains the root.
Interval bisect_root(const Fn1& f, const Interval& target, double lo,
                     double hi, bool increasing, double tol = 1e-12) {
  while (hi - lo > tol) {
    double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;
    Interval fm = f(con(Interval(m))).v;
    bool left;  // root in [lo, m]?
    if (fm.lo() > target.hi())
      left = increasing;
    else if (fm.hi() < target.lo())
      left = !increasing;
    else
      break;  // enclosure overlaps the target; bracket is already tight
    (left ? hi : lo) = m;
  }
  return Interval(lo, hi);
}

// scan outward/inward for a point bracket [lo, hi] with f(lo), f(hi) on
// opposite sides of target (strictly, as interval enclosures)
bool widen_bracket(const Fn1& f, const Interval& target, double& lo,
                   double& hi, bool increasing) {
  auto below = [&](double x) {
    Interval v = f(con(Interval(x))).v;
    return v.hi() < target.lo();
  };
  auto above = [&](double x) {
    Interval v = f(con(Interval(x))).v;
    return v.lo() > target.hi();
  };
  auto low_ok = [&](double x) { return increasing ? below(x) : above(x); };
  auto high_ok = [&](double x) { return increasing ? above(x) : below(x); };
  for (int it = 0; it < 200 && !low_ok(lo); ++it) lo *= 0.5;
  for (int it = 0; it < 200 && !high_ok(hi); ++it) hi *= 2.0;
  return low_ok(lo) && high_ok(hi);
}

Interval solve_monotone(const Fn1& f, const Interval& target, double lo,
                        double hi, bool increasing, const char* what) {
  if (!widen_bracket(f, target, lo, hi, increasing))
    throw DomainError(std::string(what) + ": could not bracket the root");
  if (!monotone_on(f, lo, hi, increasing))
    throw DomainError(std::string(what) +
                      ": monotonicity not verifiable over the bracket");
  return bisect_root(f, target, lo, hi, increasing);
}

}  // namespace

L4Params l4_hessian_params(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0) || m1 >= 1.0 || m2 >= 1.0)
    throw InvalidArgument("l4_hessian_params: masses must lie in (0,1)");
  if (std::fabs(m1 + m2 - 1.0) > 1e-12)
    throw InvalidArgument("l4_hessian_params: masses must sum to 1");
  Interval one(1.0);
  Interval disc = sqrt(one - Interval(3.0) * (Interval(m1) * Interval(m2)));
  Interval half3(1.5);
  L4Params out;
  out.a = half3 * (one - disc);
  out.b = half3 * (one + disc);
  // Hessian [[3/4, g], [g, 9/4]] with g = (3 sqrt(3)/4)(m1 - m2); the
  // rotation placing the smaller eigenvalue on the x axis
  double g = 0.75 * std::sqrt(3.0) * (m1 - m2);
  double rot = 0.5 * std::atan2(2.0 * g, 0.75 - 2.25) + M_PI / 2.0;
  while (rot > M_PI / 2.0) rot -= M_PI;
  while (rot <= -M_PI / 2.0) rot += M_PI;
  out.rotation = rot;
  return out;
}

IntervalVector TriangleSolution::vertices() const {
  Interval zero(0.0);
  Interval half2 = -(x / Interval(2.0));
  return {x, zero, half2, y, half2, -y};
}

std::optional<TriangleSolution> isosceles_triangle(double mu, double a,
                                                   double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(mu > 0.0))
    throw InvalidArgument("isosceles_triangle: mu, a, b must be positive");
  Interval ia(a), ib(b), imu(mu);
  Interval denom = ib - ia / Interval(3.0);  // b - a/3
  // degenerate (collinear) iff b/a <= 5/12
  if (b * 12.0 <= 5.0 * a) return std::nullopt;
  TriangleSolution t;
  t.s = cbrt(Interval(3.0) * imu / ia);
  t.r = cbrt(Interval(2.0) * imu / denom);
  t.y = cbrt(imu / (Interval(4.0) * denom));
  Interval x2 =
      (sqr(t.s) - sqr(t.y)) * sqr(Interval(2.0) / Interval(3.0));
  t.x = sqrt(Interval(std::max(0.0, x2.lo()), x2.hi()));
  return t;
}

IntervalVector RhombusSolution::vertices() const {
  Interval zero(0.0);
  return {x, zero, -x, zero, zero, y, zero, -y};
}

RhombusSolution rhombus(double mu, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(mu > 0.0))
    throw InvalidArgument("rhombus: mu, a, b must be positive");
  Interval ia(a), ib(b), imu(mu);
  RhombusSolution sol;

  // diagonal ratio: (8k^3 + (k sqrt(1+k^2))^3) / (8k^3 + sqrt(1+k^2)^3) = a/b
  Fn1 fk = [](const D1& k) {
    D1 k3 = cube(k);
    D1 w3 = cube(sqrt(con(Interval(1.0)) + k * k));
    D1 eight = con(Interval(8.0));
    return (eight * k3 + k3 * w3) / (eight * k3 + w3);
  };
  sol.kratio = solve_monotone(fk, ia / ib, 1.0, 1.0, true, "rhombus ratio");

  // side length on r > (9 mu / (4 min(a,b)))^{1/3}:
  // (2mu/(a r^3 - 2mu))^{2/3} + (2mu/(b r^3 - 2mu))^{2/3} = 4, decreasing
  Interval two_mu = Interval(2.0) * imu;
  Fn1 gr = [&](const D1& r) {
    D1 r3 = cube(r);
    D1 ta = con(two_mu) / (con(ia) * r3 - con(two_mu));
    D1 tb = con(two_mu) / (con(ib) * r3 - con(two_mu));
    D1 ca = cbrt(ta);
    D1 cb = cbrt(tb);
    return ca * ca + cb * cb;
  };
  double rmin =
      cbrt(Interval(9.0) * imu / (Interval(4.0) * Interval(std::min(a, b))))
          .hi();
  double r0 = detail::next_up(rmin);
  sol.r = solve_monotone(gr, Interval(4.0), r0, 2.0 * r0, false,
                         "rhombus side");

  // x = r / sqrt(1 + k^2), y = k x
  Interval w = sqrt(Interval(1.0) + sqr(sol.kratio));
  sol.x = sol.r / w;
  sol.y = sol.kratio * sol.x;
  return sol;
}

IntervalVector RectangleSolution::vertices() const {
  return {x, y, x, -y, -x, y, -x, -y};
}

RectangleSolution rectangle(double mu, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(mu > 0.0))
    throw InvalidArgument("rectangle: mu, a, b must be positive");
  Interval ia(a), ib(b), imu(mu);
  RectangleSolution sol;

  // angle equation tan^3(phi) (cos^3 phi + 1)/(sin^3 phi + 1) = a/b,
  // reparametrized algebraically by t = tan(phi):
  //   cos = 1/w, sin = t/w with w = sqrt(1 + t^2)
  Fn1 ft = [](const D1& t) {
    D1 one = con(Interval(1.0));
    D1 w = sqrt(one + t * t);
    D1 c = one / w;
    D1 s = t / w;
    return cube(t) * (cube(c) + one) / (cube(s) + one);
  };
  Interval t = solve_monotone(ft, ia / ib, 1.0, 1.0, true, "rectangle angle");
  // phi enclosure from the monotone atan (endpoints nudged outward;
  // libm atan is sub-ulp accurate, a 4-ulp margin is generous)
  double plo = std::atan(t.lo()), phi_hi = std::atan(t.hi());
  for (int i = 0; i < 4; ++i) {
    plo = detail::next_down(plo);
    phi_hi = detail::next_up(phi_hi);
  }
  sol.phi = Interval(std::max(0.0, plo), phi_hi);

  // half-diagonal on r > (mu/(2 min(a,b)))^{1/3}:
  // (mu/(4a r^3 - mu))^{2/3} + (mu/(4b r^3 - mu))^{2/3} = 1, decreasing
  Fn1 gr = [&](const D1& r) {
    D1 r3 = cube(r);
    D1 four = con(Interval(4.0));
    D1 ta = con(imu) / (four * con(ia) * r3 - con(imu));
    D1 tb = con(imu) / (four * con(ib) * r3 - con(imu));
    D1 ca = cbrt(ta);
    D1 cb = cbrt(tb);
    return ca * ca + cb * cb;
  };
  double rmin =
      cbrt(imu / (Interval(2.0) * Interval(std::min(a, b)))).hi();
  double r0 = detail::next_up(rmin);
  sol.r = solve_monotone(gr, Interval(1.0), r0, 2.0 * r0, false,
                         "rectangle diagonal");

  Interval w = sqrt(Interval(1.0) + sqr(t));
  sol.x = sol.r / w;
  sol.y = t * sol.x;
  return sol;
}

// ---- Moulton axis solutions ------------------------------------------

namespace {

// collinear subsystem for a fixed ordering: variables z_1 < ... < z_k,
// slot masses nu_t; f_t = nu_t c z_t - sum_{u<t} nu nu/(z_t-z_u)^2
//                                     + sum_{u>t} nu nu/(z_u-z_t)^2
struct AxisSystem {
  std::vector<double> nu;
  double c;

  bool eval(const IntervalVector& z, IntervalVector& f) const {
    const int k = static_cast<int>(nu.size());
    f.assign(k, Interval());
    for (int t = 0; t < k; ++t) f[t] = Interval(nu[t]) * Interval(c) * z[t];
    for (int t = 0; t < k; ++t)
      for (int u = t + 1; u < k; ++u) {
        Interval d = z[u] - z[t];  // positive for a valid ordering box
        if (d.lo() <= 0.0) return false;
        Interval w = (Interval(nu[t]) * Interval(nu[u])) / sqr(d);
        f[t] += w;
        f[u] -= w;
      }
    return true;
  }

  bool jac(const IntervalVector& z, IntervalMatrix& j) const {
    const int k = static_cast<int>(nu.size());
    j.resize(k, k);
    for (int t = 0; t < k; ++t) j(t, t) = Interval(nu[t]) * Interval(c);
    for (int t = 0; t < k; ++t)
      for (int u = t + 1; u < k; ++u) {
        Interval d = z[u] - z[t];
        if (d.lo() <= 0.0) return false;
        Interval w = Interval(2.0) * (Interval(nu[t]) * Interval(nu[u])) /
                     (sqr(d) * d);
        // d/dz of nu nu (z_u - z_t)^{-2} terms
        j(t, t) += w;
        j(t, u) -= w;
        j(u, u) += w;
        j(u, t) -= w;
      }
    return true;
  }
};

bool axis_newton(const AxisSystem& sys, std::vector<double>& z) {
  const int k = static_cast<int>(z.size());
  IntervalVector box(k);
  IntervalVector f;
  IntervalMatrix j;
  for (int it = 0; it < 200; ++it) {
    for (int i = 0; i < k; ++i) box[i] = Interval(z[i]);
    if (!sys.eval(box, f) || !sys.jac(box, j)) return false;
    std::vector<double> fm(k);
    for (int i = 0; i < k; ++i) fm[i] = f[i].mid();
    std::vector<double> dz;
    if (!solve(midpoint(j), fm, dz)) return false;
    double step = 0.0;
    for (int i = 0; i < k; ++i) {
      z[i] -= dz[i];
      step = std::max(step, std::fabs(dz[i]));
    }
    if (step < 1e-13) return true;
  }
  return false;
}

// solve one ordering; returns certified slot positions
IntervalVector solve_ordering(const std::vector<double>& nu, double c) {
  const int k = static_cast<int>(nu.size());
  AxisSystem sys{nu, c};
  auto eval = [&sys](const IntervalVector& b, IntervalVector& out) {
    return sys.eval(b, out);
  };
  auto jac = [&sys](const IntervalVector& b, IntervalMatrix& out) {
    return sys.jac(b, out);
  };
  double total = std::accumulate(nu.begin(), nu.end(), 0.0);
  double scale = std::cbrt(total / c);
  for (double factor : {0.8, 0.5, 1.2, 0.3, 2.0}) {
    std::vector<double> z(k);
    for (int i = 0; i < k; ++i)
      z[i] = factor * scale * (i - 0.5 * (k - 1));
    if (!axis_newton(sys, z)) continue;
    if (!std::is_sorted(z.begin(), z.end())) continue;
    double h = 0.0;
    for (double v : z) h = std::max(h, std::fabs(v));
    h = std::max(1e-10, 1e-6 * h);
    IntervalVector box(k);
    for (int i = 0; i < k; ++i) box[i] = Interval(z[i] - h, z[i] + h);
    KrawczykOutcome o = krawczyk_step(eval, jac, box);
    if (o.status != KrawczykStatus::UniqueZero) continue;
    return refine(eval, jac, o.refined);
  }
  throw DomainError("moulton_axis: failed to certify an ordering");
}

}  // namespace

IntervalVector MoultonSolution::configuration() const {
  const int k = static_cast<int>(axis_positions.size());
  IntervalVector cfg(2 * k, Interval(0.0));
  for (int i = 0; i < k; ++i)
    cfg[2 * i + (axis == Axis::X ? 0 : 1)] = axis_positions[i];
  return cfg;
}

std::vector<MoultonSolution> moulton_axis(int k, const MassVector& mu,
                                          Axis axis, double coeff) {
  if (k < 2 || mu.size() != k)
    throw InvalidArgument("moulton_axis: bad body count");
  if (!(coeff > 0.0))
    throw InvalidArgument("moulton_axis: axis coefficient must be positive");

  bool equal = true;
  for (int i = 1; i < k; ++i)
    if (mu[i] != mu[0]) equal = false;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  IntervalVector base;  // slot positions for the identity ordering
  if (equal) base = solve_ordering(mu.masses(), coeff);

  std::vector<MoultonSolution> out;
  do {
    IntervalVector slots;
    if (equal) {
      slots = base;  // equal masses: every ordering shares slot positions
    } else {
      std::vector<double> nu(k);
      for (int t = 0; t < k; ++t) nu[t] = mu[perm[t]];
      slots = solve_ordering(nu, coeff);
    }
    MoultonSolution s;
    s.ordering = perm;
    s.axis = axis;
    s.axis_positions.assign(k, Interval());
    for (int t = 0; t < k; ++t) s.axis_positions[perm[t]] = slots[t];
    out.push_back(std::move(s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ccenum
