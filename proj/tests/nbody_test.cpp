#include "doctest.h"

#include <cmath>

#include "ccenum/nbody.hpp"

using namespace ccenum;

namespace {
IntervalVector thin(const std::vector<double>& p) {
  IntervalVector b;
  for (double v : p) b.push_back(Interval(v));
  return b;
}
}  // namespace

TEST_CASE("mass vector validation") {
  CHECK_THROWS_AS(MassVector({}), InvalidArgument);
  CHECK_THROWS_AS(MassVector({1.0, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(MassVector({0.0}), InvalidArgument);
  MassVector m({1.0, 2.0, 3.0});
  CHECK(m.total() == 6.0);
  CHECK(m[1] == 2.0);
}

TEST_CASE("two-body layout and residual") {
  // masses (1,1): q = 2^(-2/3); one variable (gauge x), y pinned
  ReducedNBodyProblem p(MassVector({1.0, 1.0}), 0);
  CHECK(p.dim() == 1);
  CHECK(p.body_count() == 2);
  double q = std::pow(2.0, -2.0 / 3.0);
  IntervalVector f;
  REQUIRE(p.eval(thin({q}), f));
  CHECK(f[0].lo() <= 1e-14);
  CHECK(f[0].hi() >= -1e-14);

  // masses (1/2,1/2): q^3 = 1/8
  ReducedNBodyProblem ph(MassVector({0.5, 0.5}), 0);
  REQUIRE(ph.eval(thin({0.5}), f));
  CHECK(f[0].lo() <= 1e-14);
  CHECK(f[0].hi() >= -1e-14);
}

TEST_CASE("reconstructed body and gauge validity") {
  ReducedNBodyProblem p(MassVector({1.0, 1.0}), 0);
  double q = std::pow(2.0, -2.0 / 3.0);
  auto qn = p.com_fill(thin({q}));
  CHECK(qn.first.mid() == doctest::Approx(-q).epsilon(1e-14));
  CHECK(qn.second.mid() == 0.0);
  CHECK(p.check_gauge_validity(thin({q})));
  // a box whose gauge x overlaps the reconstructed body is rejected
  IntervalVector wide = {Interval(-0.1, 0.1)};
  CHECK(!p.check_gauge_validity(wide));
  CHECK(!p.accept_certificate(wide));
}

TEST_CASE("equilateral three-body solution") {
  // equal unit masses, multiplier 1: side 3^(1/3), circumradius 3^(-1/6)
  ReducedNBodyProblem p(MassVector({1.0, 1.0, 1.0}), 1);
  CHECK(p.dim() == 3);
  double rc = std::pow(3.0, -1.0 / 6.0);
  // vars: x0, y0, x1 (body 1 is gauge), body 2 reconstructed
  std::vector<double> v = {-rc / 2, rc * std::sqrt(3.0) / 2, rc};
  IntervalVector f;
  REQUIRE(p.eval(thin(v), f));
  for (const Interval& c : f) {
    CHECK(c.lo() <= 1e-13);
    CHECK(c.hi() >= -1e-13);
  }
  auto qn = p.com_fill(thin(v));
  CHECK(qn.first.mid() == doctest::Approx(-rc / 2).epsilon(1e-12));
  CHECK(qn.second.mid() ==
        doctest::Approx(-rc * std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("collinear three-body Euler solution") {
  // equal masses at (-d, 0, d): q = d satisfies d^3 = 5/4
  ReducedNBodyProblem p(MassVector({1.0, 1.0, 1.0}), 1);
  double d = std::cbrt(1.25);
  IntervalVector f;
  REQUIRE(p.eval(thin({-d, 0.0, 0.0}), f));
  for (const Interval& c : f) {
    CHECK(c.lo() <= 1e-13);
    CHECK(c.hi() >= -1e-13);
  }
}

TEST_CASE("jacobian matches finite differences") {
  ReducedNBodyProblem p(MassVector({1.0, 2.0, 1.5}), 0);
  std::vector<double> x = {0.9, -0.4, 0.6, 0.35};
  IntervalVector box = thin(x);
  IntervalMatrix jac;
  REQUIRE(p.jacobian(box, jac));
  double h = 1e-6;
  for (int j = 0; j < p.dim(); ++j) {
    std::vector<double> xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    IntervalVector fp, fm;
    REQUIRE(p.eval(thin(xp), fp));
    REQUIRE(p.eval(thin(xm), fm));
    for (int i = 0; i < p.dim(); ++i) {
      double fd = (fp[i].mid() - fm[i].mid()) / (2 * h);
      CHECK(jac(i, j).mid() ==
            doctest::Approx(fd).epsilon(1e-5).scale(
                std::max(1.0, std::fabs(fd))));
    }
  }
}

TEST_CASE("prescreen prunes boxes violating the size bound") {
  ReducedNBodyProblem p(MassVector({1.0, 1.0, 1.0}), 1);
  double rb = p.size_bound();
  // all explicit bodies far on one side: reconstructed body violates bound
  IntervalVector box = {Interval(0.9 * rb, rb), Interval(-0.01, 0.01),
                        Interval(0.9 * rb, rb)};
  CHECK(p.prescreen(box, nullptr) == Prescreen::NoZero);
}

TEST_CASE("prescreen excludes off-manifold collision straddles") {
  ReducedNBodyProblem p(MassVector({1.0, 1.0, 1.0}), 1);
  // bodies 0 and 1 straddling far from any merged configuration
  IntervalVector box = {Interval(0.95, 1.05), Interval(-0.02, 0.02),
                        Interval(0.95, 1.05)};
  CHECK(p.prescreen(box, nullptr) == Prescreen::NoZero);
}

TEST_CASE("gauge index validation") {
  CHECK_THROWS_AS(ReducedNBodyProblem(MassVector({1.0, 1.0}), 1),
                  InvalidArgument);
  CHECK_THROWS_AS(ReducedNBodyProblem(MassVector({1.0, 1.0}), -1),
                  InvalidArgument);
}
