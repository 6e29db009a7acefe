#pragma once

#include <vector>

#include "ccenum/interval.hpp"

namespace ccenum {

/// Dense interval matrix, row-major.
class IntervalMatrix {
 public:
  IntervalMatrix() : rows_(0), cols_(0) {}
  IntervalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw InvalidArgument("IntervalMatrix: non-positive size");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void resize(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw InvalidArgument("IntervalMatrix: non-positive size");
    rows_ = rows;
    cols_ = cols;
    e_.assign(static_cast<size_t>(rows) * cols, Interval());
  }
  Interval& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Interval& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_;
  std::vector<Interval> e_;
};

/// Plain double matrix, row-major; used for midpoints and preconditioners.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<double> e_;
};

inline Matrix midpoint(const IntervalMatrix& a) {
  Matrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).mid();
  return m;
}

/// Floating-point approximate inverse of the midpoint of A (Gauss-Jordan
/// with partial pivoting).  No rigor is claimed; the Krawczyk contraction
/// test restores it.  Returns false when pivoting fails (singular).
bool approx_inverse(const Matrix& a, Matrix& inv);

inline bool approx_mid_inverse(const IntervalMatrix& a, Matrix& inv) {
  if (a.rows() != a.cols()) throw InvalidArgument("approx_mid_inverse: not square");
  return approx_inverse(midpoint(a), inv);
}

/// y = a*x with interval entries in x (a is a point matrix).
void mul(const Matrix& a, const IntervalVector& x, IntervalVector& y);

/// c = a*b, point times interval.
void mul(const Matrix& a, const IntervalMatrix& b, IntervalMatrix& c);

/// Solve a*x = b in floating point (for Newton cross-checks); false if singular.
bool solve(const Matrix& a, const std::vector<double>& b, std::vector<double>& x);

}  // namespace ccenum
