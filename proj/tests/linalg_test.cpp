#include "doctest.h"

#include "ccenum/linalg.hpp"

using namespace ccenum;

TEST_CASE("approximate inverse of a 3x3 matrix") {
  Matrix a(3, 3);
  a(0, 0) = 2;  a(0, 1) = 1;  a(0, 2) = 0;
  a(1, 0) = 1;  a(1, 1) = 3;  a(1, 2) = 1;
  a(2, 0) = 0;  a(2, 1) = 1;  a(2, 2) = 4;
  Matrix inv;
  REQUIRE(approx_inverse(a, inv));
  // a * inv == I to machine precision
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * inv(k, j);
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("singular matrix is rejected") {
  Matrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 2; a(1, 1) = 4;
  Matrix inv;
  CHECK(!approx_inverse(a, inv));
}

TEST_CASE("floating solve") {
  Matrix a(2, 2);
  a(0, 0) = 3; a(0, 1) = 1;
  a(1, 0) = 1; a(1, 1) = 2;
  std::vector<double> b = {5, 5}, x;
  REQUIRE(solve(a, b, x));
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
}

TEST_CASE("point times interval vector contains point products") {
  Matrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = -2;
  a(1, 0) = 0.5; a(1, 1) = 3;
  IntervalVector v = {Interval(1.0, 1.1), Interval(-0.2, 0.0)};
  IntervalVector out;
  mul(a, v, out);
  // corner check: v = (1.05, -0.1)
  double r0 = 1.0 * 1.05 - 2.0 * -0.1;
  double r1 = 0.5 * 1.05 + 3.0 * -0.1;
  CHECK(out[0].lo() <= r0);
  CHECK(out[0].hi() >= r0);
  CHECK(out[1].lo() <= r1);
  CHECK(out[1].hi() >= r1);
}

TEST_CASE("interval matrix midpoint") {
  IntervalMatrix m;
  m.resize(1, 2);
  m(0, 0) = Interval(1.0, 3.0);
  m(0, 1) = Interval(-2.0, 0.0);
  Matrix mid = midpoint(m);
  CHECK(mid(0, 0) == 2.0);
  CHECK(mid(0, 1) == -1.0);
}
