#include "ccenum/linalg.hpp"

#include <cmath>

namespace ccenum {

bool approx_inverse(const Matrix& a, Matrix& inv) {
  const int n = a.rows();
  if (n != a.cols()) throw InvalidArgument("approx_inverse: not square");
  // Augmented Gauss-Jordan.
  Matrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::fabs(w(col, col));
    for (int r = col + 1; r < n; ++r) {
      double v = std::fabs(w(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best)) return false;
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(col, j));
    const double d = w(col, col);
    for (int j = 0; j < 2 * n; ++j) w(col, j) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < 2 * n; ++j) w(r, j) -= f * w(col, j);
    }
  }
  inv = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = w(i, n + j);
      if (!std::isfinite(v)) return false;
      inv(i, j) = v;
    }
  return true;
}

void mul(const Matrix& a, const IntervalVector& x, IntervalVector& y) {
  const int n = a.rows(), m = a.cols();
  y.assign(n, Interval());
  for (int i = 0; i < n; ++i) {
    Interval s(0.0);
    for (int j = 0; j < m; ++j) s += Interval(a(i, j)) * x[j];
    y[i] = s;
  }
}

void mul(const Matrix& a, const IntervalMatrix& b, IntervalMatrix& c) {
  const int n = a.rows(), k = a.cols(), m = b.cols();
  c = IntervalMatrix(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Interval s(0.0);
      for (int t = 0; t < k; ++t) s += Interval(a(i, t)) * b(t, j);
      c(i, j) = s;
    }
}

bool solve(const Matrix& a, const std::vector<double>& b, std::vector<double>& x) {
  const int n = a.rows();
  Matrix w(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n) = b[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::fabs(w(col, col));
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(w(r, col)) > best) {
        best = std::fabs(w(r, col));
        piv = r;
      }
    if (!(best > 0.0) || !std::isfinite(best)) return false;
    if (piv != col)
      for (int j = 0; j <= n; ++j) std::swap(w(piv, j), w(col, j));
    for (int r = col + 1; r < n; ++r) {
      double f = w(r, col) / w(col, col);
      for (int j = col; j <= n; ++j) w(r, j) -= f * w(col, j);
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = w(i, n);
    for (int j = i + 1; j < n; ++j) s -= w(i, j) * x[j];
    x[i] = s / w(i, i);
  }
  return true;
}

}  // namespace ccenum
