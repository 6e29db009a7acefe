#include "ccenum/bounds.hpp"

#include <cmath>

namespace ccenum {
namespace {

// min((n-1), (2^{1/3}+2^{-2/3})(n-2)^{2/3}) * (M/c)^{1/3}, rounded up
double size_bound(int n, double M, double c) {
  Interval base = cbrt(Interval(M) / Interval(c));
  Interval factor(static_cast<double>(n - 1));
  if (n >= 4) {
    Interval two(2.0);
    Interval alt = (cbrt(two) + Interval(1.0) / cbrt(two * two)) *
                   cbrt(Interval(static_cast<double>((n - 2) * (n - 2))));
    if (alt.hi() < factor.hi()) factor = alt;
  }
  return (factor * base).hi();
}

}  // namespace

std::pair<double, double> aniso_size_bound(int k, double M, double a,
                                           double b) {
  if (k < 2) throw InvalidArgument("aniso_size_bound: k < 2");
  if (!(M > 0)) throw InvalidArgument("aniso_size_bound: M must be positive");
  if (a <= 0 && b <= 0)
    throw InvalidArgument(
        "aniso_size_bound: no solutions when both coefficients are "
        "non-positive");
  double bx = a > 0 ? size_bound(k, M, a) : 0.0;
  double by = b > 0 ? size_bound(k, M, b) : 0.0;
  return {bx, by};
}

double aniso_min_dist(double mu_i, double mu_j, double a, double b, double R) {
  if (!(R > 0)) throw InvalidArgument("aniso_min_dist: R must be positive");
  double c = a > b ? a : b;
  if (!(c > 0)) throw InvalidArgument("aniso_min_dist: max(a,b) must be > 0");
  Interval floor =
      Interval(mu_i) * Interval(mu_j) / (Interval(c) * sqr(Interval(R)));
  return floor.lo();
}

double nbody_size_bound(int n, double M) {
  if (n < 2) throw InvalidArgument("nbody_size_bound: n < 2");
  if (!(M > 0)) throw InvalidArgument("nbody_size_bound: M must be positive");
  return size_bound(n, M, 1.0);
}

double nbody_min_dist(double m_i, double m_j, double M, double R) {
  if (!(R > 0) || !(M > 0))
    throw InvalidArgument("nbody_min_dist: M and R must be positive");
  Interval floor =
      Interval(m_i) * Interval(m_j) / (Interval(M) * sqr(Interval(R)));
  return floor.lo();
}

}  // namespace ccenum
