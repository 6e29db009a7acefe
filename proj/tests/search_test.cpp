#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "ccenum/search.hpp"

using namespace ccenum;

namespace {

AnisoProblem k2() {
  return AnisoProblem(std::vector<double>(2, 0.5), 0.75, 2.25);
}

IntervalVector thin_box(const std::vector<double>& p, double h) {
  IntervalVector b;
  for (double v : p) b.push_back(Interval(v - h, v + h));
  return b;
}

SolutionCertificate fake_cert(const std::vector<double>& pts) {
  SolutionCertificate c;
  c.box = thin_box(pts, 1e-9);
  return c;
}

}  // namespace

TEST_CASE("two-body enumeration finds the four axis pairs") {
  AnisoProblem p = k2();
  SearchSettings st;
  EnumerationReport rep = enumerate_aniso(p, st);
  CHECK(rep.complete);
  CHECK(rep.undecided_total == 0);
  REQUIRE(rep.certificates.size() == 4);
  CHECK(rep.counts_by_shape["collinear-x"] == 2);
  CHECK(rep.counts_by_shape["collinear-y"] == 2);
  CHECK(rep.stats.volume_accounted == doctest::Approx(1.0).epsilon(1e-6));

  // certificates are sorted by midpoint and enclose the closed forms
  double qx = std::cbrt(0.5 / 3.0);
  double qy = std::cbrt(0.5 / 9.0);
  bool found_x = false, found_y = false;
  for (const auto& c : rep.certificates) {
    if (c.box[0].lo() <= qx && qx <= c.box[0].hi() &&
        c.box[2].lo() <= -qx && -qx <= c.box[2].hi())
      found_x = true;
    if (c.box[1].lo() <= qy && qy <= c.box[1].hi() &&
        c.box[3].lo() <= -qy && -qy <= c.box[3].hi())
      found_y = true;
  }
  CHECK(found_x);
  CHECK(found_y);
  for (std::size_t i = 1; i < rep.certificates.size(); ++i) {
    const auto& a = rep.certificates[i - 1].box;
    const auto& b = rep.certificates[i].box;
    bool le = true;
    for (std::size_t d = 0; d < a.size(); ++d) {
      if (a[d].mid() < b[d].mid()) break;
      if (a[d].mid() > b[d].mid()) {
        le = false;
        break;
      }
    }
    CHECK(le);
  }
}

TEST_CASE("budget exhaustion reports incomplete") {
  AnisoProblem p = k2();
  SearchSettings st;
  st.max_boxes = 50;
  EnumerationReport rep = enumerate_aniso(p, st);
  CHECK(!rep.complete);
  CHECK(rep.budget_exhausted);
  CHECK(rep.undecided_total > 0);
}

TEST_CASE("determinism: two runs give identical certificates") {
  AnisoProblem p = k2();
  SearchSettings st;
  EnumerationReport r1 = enumerate_aniso(p, st);
  EnumerationReport r2 = enumerate_aniso(p, st);
  REQUIRE(r1.certificates.size() == r2.certificates.size());
  for (std::size_t i = 0; i < r1.certificates.size(); ++i)
    for (std::size_t d = 0; d < r1.certificates[i].box.size(); ++d) {
      CHECK(r1.certificates[i].box[d].lo() == r2.certificates[i].box[d].lo());
      CHECK(r1.certificates[i].box[d].hi() == r2.certificates[i].box[d].hi());
    }
}

TEST_CASE("checkpoint round trip and resume") {
  AnisoProblem p = k2();
  SearchSettings st;
  EnumerationReport direct = enumerate_aniso(p, st);

  // resume from scratch: pending = the initial box of the direct run
  EnumerationReport partial;
  partial.problem_id = direct.problem_id;
  partial.initial_box = direct.initial_box;
  std::vector<IntervalVector> pending = {direct.initial_box};

  const char* path = "checkpoint_test.json";
  save_checkpoint(path, partial, pending);
  EnumerationReport loaded;
  std::vector<IntervalVector> loaded_pending;
  REQUIRE(load_checkpoint(path, loaded, loaded_pending));
  std::remove(path);
  REQUIRE(loaded_pending.size() == 1);
  for (std::size_t d = 0; d < direct.initial_box.size(); ++d) {
    CHECK(loaded_pending[0][d].lo() == direct.initial_box[d].lo());
    CHECK(loaded_pending[0][d].hi() == direct.initial_box[d].hi());
  }

  EnumerationReport resumed =
      search_from(p, std::move(loaded), std::move(loaded_pending), st);
  CHECK(resumed.complete);
  REQUIRE(resumed.certificates.size() == direct.certificates.size());
  for (std::size_t i = 0; i < direct.certificates.size(); ++i)
    for (std::size_t d = 0; d < direct.certificates[i].box.size(); ++d) {
      CHECK(resumed.certificates[i].box[d].lo() ==
            direct.certificates[i].box[d].lo());
      CHECK(resumed.certificates[i].box[d].hi() ==
            direct.certificates[i].box[d].hi());
    }
}

TEST_CASE("two-body reduced problem enumeration over a region") {
  ReducedNBodyProblem p(MassVector({1.0, 1.0}), 0);
  SearchSettings st;
  IntervalVector region = {Interval(0.05, 1.5)};
  EnumerationReport rep = enumerate_nbody(p, region, st);
  CHECK(rep.complete);
  REQUIRE(rep.certificates.size() == 1);
  double q = std::pow(2.0, -2.0 / 3.0);
  CHECK(rep.certificates[0].box[0].lo() <= q);
  CHECK(rep.certificates[0].box[0].hi() >= q);
}

TEST_CASE("shape classification on synthetic k=3 and k=4 certificates") {
  AnisoProblem p3(std::vector<double>(3, 1.0 / 3), 0.75, 2.25);
  double s = std::cbrt(4.0 / 3.0), y3 = std::cbrt(1.0 / 24.0);
  double x3 = (2.0 / 3.0) * std::sqrt(s * s - y3 * y3);
  CHECK(classify_shape(fake_cert({x3, 0, -x3 / 2, y3, -x3 / 2, -y3}), p3) ==
        "isosceles-triangle");
  double r = std::cbrt(5.0 / 9.0);
  CHECK(classify_shape(fake_cert({-r, 0, 0, 0, r, 0}), p3) == "collinear-x");
  CHECK(classify_shape(fake_cert({0, -r, 0, 0, 0, r}), p3) == "collinear-y");

  AnisoProblem p4(std::vector<double>(4, 0.25), 0.75, 2.25);
  double rx = 0.8517357111, ry = 0.3392209571;
  CHECK(classify_shape(
            fake_cert({rx, 0, -rx, 0, 0, ry, 0, -ry}), p4) == "rhombus");
  double cx = 0.5124981464, cy = 0.3168767565;
  CHECK(classify_shape(
            fake_cert({cx, cy, cx, -cy, -cx, cy, -cx, -cy}), p4) ==
        "rectangle");
}
