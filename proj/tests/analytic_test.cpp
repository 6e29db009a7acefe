#include "doctest.h"

#include <cmath>
#include <set>

#include "ccenum/analytic.hpp"
#include "ccenum/aniso.hpp"
#include "ccenum/krawczyk.hpp"

using namespace ccenum;

namespace {
IntervalVector eval_ok(const AnisoProblem& prob, const IntervalVector& x) {
  IntervalVector f;
  REQUIRE(prob.eval(x, f));
  return f;
}

double ulps(const Interval& x, double v) {
  double u = std::nextafter(std::fabs(v), INFINITY) - std::fabs(v);
  return (x.hi() - x.lo()) / u;
}
}  // namespace

TEST_CASE("triangular-equilibrium eigenvalues, equal masses") {
  L4Params p = l4_hessian_params(0.5, 0.5);
  // exact values 3/4 and 9/4, enclosed to a few ulps
  CHECK(p.a.lo() <= 0.75);
  CHECK(p.a.hi() >= 0.75);
  CHECK(p.b.lo() <= 2.25);
  CHECK(p.b.hi() >= 2.25);
  CHECK(ulps(p.a, 0.75) <= 4.0);
  CHECK(ulps(p.b, 2.25) <= 4.0);
  CHECK(p.rotation == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("triangular-equilibrium eigenvalue inequalities on a mass grid") {
  // The gap lambda1 - lambda2 = 3 sqrt(3 m1^2 - 3 m1 + 1) ranges over
  // [3/2, 3); it drops below sqrt(3) -- and lambda1 below
  // (3/2)(1 + 1/sqrt 3) -- exactly when m1 is in (1/3, 2/3).
  Interval sqrt3 = sqrt(Interval(3.0));
  Interval cap = Interval(1.5) * (Interval(1.0) + Interval(1.0) / sqrt3);
  for (int i = 1; i <= 99; ++i) {
    double m1 = i / 100.0, m2 = 1.0 - m1;
    L4Params p = l4_hessian_params(m1, m2);
    Interval gap = p.b - p.a;
    CHECK(gap.lo() >= 1.5 - 1e-12);
    CHECK(gap.hi() < 3.0);
    CHECK(p.a.lo() > 0.0);
    bool narrow = m1 > 1.0 / 3 + 1e-9 && m1 < 2.0 / 3 - 1e-9;
    if (narrow) {
      CHECK(gap.hi() < sqrt3.hi() + 1e-12);
      CHECK(p.b.hi() < cap.hi() + 1e-12);
    } else if (std::fabs(m1 - 1.0 / 3) > 1e-9 &&
               std::fabs(m1 - 2.0 / 3) > 1e-9) {
      CHECK(gap.lo() > sqrt3.lo() - 1e-12);
      CHECK(p.b.lo() > cap.lo() - 1e-12);
    }
  }
  CHECK_THROWS(l4_hessian_params(0.0, 1.0));
  CHECK_THROWS(l4_hessian_params(0.4, 0.4));
}

TEST_CASE("limiting behavior of the eigenvalues as m1 -> 0") {
  L4Params p = l4_hessian_params(1e-9, 1.0 - 1e-9);
  // a -> 9/4 * m1 m2, b -> 3 - a
  CHECK(p.a.mid() == doctest::Approx(2.25e-9).epsilon(1e-6));
  CHECK(p.b.mid() == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("isosceles triangle closed form at the reference weights") {
  auto t = isosceles_triangle(1.0 / 3, 0.75, 2.25);
  REQUIRE(t.has_value());
  double s = std::cbrt(4.0 / 3.0);
  double r = std::cbrt(1.0 / 3.0);
  CHECK(std::fabs(t->s.mid() - s) < 1e-9);
  CHECK(std::fabs(t->r.mid() - r) < 1e-9);
  CHECK(t->s.lo() <= s);
  CHECK(t->s.hi() >= s);
  CHECK(t->r.lo() <= r);
  CHECK(t->r.hi() >= r);
  double y = std::cbrt(1.0 / 24.0);
  CHECK(t->y.mid() == doctest::Approx(y).epsilon(1e-10));
  CHECK(t->x.mid() ==
        doctest::Approx((2.0 / 3) * std::sqrt(s * s - y * y)).epsilon(1e-10));

  IntervalVector v = t->vertices();
  REQUIRE(v.size() == 6);
  CHECK(v[0].mid() == doctest::Approx(t->x.mid()));
  CHECK(v[1].mid() == doctest::Approx(0.0));
  CHECK(v[2].mid() == doctest::Approx(-t->x.mid() / 2));
  CHECK(v[3].mid() == doctest::Approx(t->y.mid()));
  CHECK(v[5].mid() == doctest::Approx(-t->y.mid()));

  // degenerate band: no triangle when b/a <= 5/12
  CHECK(!isosceles_triangle(1.0 / 3, 1.2, 0.5).has_value());
  CHECK(isosceles_triangle(1.0 / 3, 1.2, 0.5001 * 1.2 * 5.0 / 6).has_value());
}

TEST_CASE("triangle residual vanishes in the anisotropic system") {
  auto t = isosceles_triangle(1.0 / 3, 0.75, 2.25);
  REQUIRE(t.has_value());
  AnisoProblem prob(std::vector<double>(3, 1.0 / 3), 0.75, 2.25);
  IntervalVector f = eval_ok(prob, t->vertices());
  for (const auto& fi : f) {
    CHECK(fi.lo() <= 0.0);
    CHECK(fi.hi() >= 0.0);
    CHECK(fi.mag() < 1e-9);
  }
}

TEST_CASE("rhombus closed form at the reference weights") {
  RhombusSolution rs = rhombus(0.25, 0.75, 2.25);
  CHECK(rs.kratio.mid() == doctest::Approx(0.398269).epsilon(1e-4));
  CHECK(rs.r.mid() == doctest::Approx(0.916799).epsilon(1e-4));
  CHECK(rs.y.mid() == doctest::Approx(rs.kratio.mid() * rs.x.mid()));

  AnisoProblem prob(std::vector<double>(4, 0.25), 0.75, 2.25);
  IntervalVector f = eval_ok(prob, rs.vertices());
  for (const auto& fi : f) CHECK(fi.mag() < 1e-8);
}

TEST_CASE("rectangle closed form at the reference weights") {
  RectangleSolution rc = rectangle(0.25, 0.75, 2.25);
  CHECK(rc.phi.mid() == doctest::Approx(0.553766).epsilon(1e-5));
  CHECK(rc.r.mid() == doctest::Approx(0.602566).epsilon(1e-4));
  CHECK(rc.x.mid() ==
        doctest::Approx(rc.r.mid() * std::cos(rc.phi.mid())).epsilon(1e-8));
  CHECK(rc.y.mid() ==
        doctest::Approx(rc.r.mid() * std::sin(rc.phi.mid())).epsilon(1e-8));

  AnisoProblem prob(std::vector<double>(4, 0.25), 0.75, 2.25);
  IntervalVector f = eval_ok(prob, rc.vertices());
  for (const auto& fi : f) CHECK(fi.mag() < 1e-8);
}

TEST_CASE("collinear family: two bodies recovers the closed form") {
  MassVector mu(std::vector<double>(2, 0.5));
  auto sols = moulton_axis(2, mu, Axis::X, 0.75);
  REQUIRE(sols.size() == 2);  // one per ordering
  double q = std::cbrt(0.5 / 3.0);
  for (const auto& s : sols) {
    REQUIRE(s.axis_positions.size() == 2);
    double p0 = s.axis_positions[0].mid();
    CHECK(std::fabs(std::fabs(p0) - q) < 1e-10);
    CHECK(s.axis_positions[1].mid() == doctest::Approx(-p0).epsilon(1e-9));
  }
}

TEST_CASE("collinear family: three bodies on each axis") {
  MassVector mu(std::vector<double>(3, 1.0 / 3));
  double rx = std::cbrt(5.0 / 9.0);
  auto sx = moulton_axis(3, mu, Axis::X, 0.75);
  REQUIRE(sx.size() == 6);  // 3! orderings
  std::set<std::vector<int>> orderings;
  for (const auto& s : sx) {
    orderings.insert(s.ordering);
    // outermost bodies sit at +-rx, the middle one at 0
    int mid_body = s.ordering[1];
    CHECK(std::fabs(s.axis_positions[mid_body].mid()) < 1e-10);
    CHECK(std::fabs(std::fabs(s.axis_positions[s.ordering[0]].mid()) - rx) <
          1e-9);
    CHECK(std::fabs(std::fabs(s.axis_positions[s.ordering[2]].mid()) - rx) <
          1e-9);
    // positions increase along the ordering
    CHECK(s.axis_positions[s.ordering[0]].mid() <
          s.axis_positions[s.ordering[1]].mid());
    CHECK(s.axis_positions[s.ordering[1]].mid() <
          s.axis_positions[s.ordering[2]].mid());
    // the full configuration places the off-axis coordinates at zero
    IntervalVector cfg = s.configuration();
    REQUIRE(cfg.size() == 6);
    for (int i = 0; i < 3; ++i) {
      CHECK(cfg[2 * i].mid() == doctest::Approx(s.axis_positions[i].mid()));
      CHECK(cfg[2 * i + 1].lo() == 0.0);
      CHECK(cfg[2 * i + 1].hi() == 0.0);
    }
  }
  CHECK(orderings.size() == 6);

  double ry = std::cbrt(5.0 / 27.0);
  auto sy = moulton_axis(3, mu, Axis::Y, 2.25);
  REQUIRE(sy.size() == 6);
  CHECK(std::fabs(std::fabs(sy[0].axis_positions[sy[0].ordering[0]].mid()) -
                  ry) < 1e-9);
  IntervalVector cfg = sy[0].configuration();
  for (int i = 0; i < 3; ++i) {
    CHECK(cfg[2 * i].lo() == 0.0);
    CHECK(cfg[2 * i].hi() == 0.0);
  }
}

TEST_CASE("collinear solutions satisfy the anisotropic equations") {
  MassVector mu(std::vector<double>(3, 1.0 / 3));
  AnisoProblem prob(std::vector<double>(3, 1.0 / 3), 0.75, 2.25);
  for (Axis ax : {Axis::X, Axis::Y}) {
    for (const auto& s :
         moulton_axis(3, mu, ax, ax == Axis::X ? 0.75 : 2.25)) {
      IntervalVector f = eval_ok(prob, s.configuration());
      for (const auto& fi : f) {
        CHECK(fi.lo() <= 0.0);
        CHECK(fi.hi() >= 0.0);
      }
    }
  }
}

TEST_CASE("collinear family with unequal masses") {
  MassVector mu(std::vector<double>({0.5, 0.3, 0.2}));
  auto sols = moulton_axis(3, mu, Axis::X, 1.0);
  REQUIRE(sols.size() == 6);
  AnisoProblem prob(std::vector<double>({0.5, 0.3, 0.2}), 1.0, 2.0);
  for (const auto& s : sols) {
    IntervalVector f = eval_ok(prob, s.configuration());
    for (const auto& fi : f) CHECK(fi.mag() < 1e-8);
    // weighted center of mass at the origin
    double com = 0.0;
    for (int i = 0; i < 3; ++i) com += mu[i] * s.axis_positions[i].mid();
    CHECK(std::fabs(com) < 1e-10);
  }
}
