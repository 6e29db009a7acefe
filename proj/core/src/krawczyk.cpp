#include "ccenum/krawczyk.hpp"

#include <cmath>
#include <utility>

namespace ccenum {
namespace {

template <typename F, typename J>
KrawczykOutcome step_impl(const F& eval, const J& jac, const IntervalVector& x) {
  const int n = static_cast<int>(x.size());
  KrawczykOutcome out;
  out.refined = x;

  std::vector<double> m = midpoint(x);
  IntervalVector mbox(n);
  for (int i = 0; i < n; ++i) mbox[i] = Interval(m[i]);
  IntervalVector fm;
  if (!eval(mbox, fm)) return out;  // Undecided

  IntervalMatrix jx;
  if (!jac(x, jx)) return out;
  Matrix y;
  if (!approx_mid_inverse(jx, y)) return out;  // singular preconditioner

  // C = I - Y * J(X)
  IntervalMatrix c;
  mul(y, jx, c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Interval e = -c(i, j);
      if (i == j) e += Interval(1.0);
      c(i, j) = e;
    }
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += c(i, j).mag();
    if (row > norm) norm = row;
  }
  out.contraction_norm = norm;

  // K = m - Y f(m) + C (X - m)
  IntervalVector yfm;
  mul(y, fm, yfm);
  IntervalVector xm(n);
  for (int i = 0; i < n; ++i) xm[i] = x[i] - Interval(m[i]);
  IntervalVector cxm(n);
  for (int i = 0; i < n; ++i) {
    Interval acc;
    for (int j = 0; j < n; ++j) acc += c(i, j) * xm[j];
    cxm[i] = acc;
  }
  out.image.resize(n);
  for (int i = 0; i < n; ++i)
    out.image[i] = Interval(m[i]) - yfm[i] + cxm[i];

  bool interior = true;
  for (int i = 0; i < n; ++i) {
    if (out.image[i].disjoint(x[i])) {
      out.status = KrawczykStatus::Excluded;
      out.refined = x;
      return out;
    }
    if (!out.image[i].interior_of(x[i])) interior = false;
  }
  for (int i = 0; i < n; ++i) out.refined[i] = out.image[i].intersect(x[i]);
  out.status = interior ? KrawczykStatus::UniqueZero : KrawczykStatus::Undecided;
  return out;
}

template <typename F, typename J>
IntervalVector refine_impl(const F& eval, const J& jac, IntervalVector box,
                           int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    double before = max_width(box);
    KrawczykOutcome o = step_impl(eval, jac, box);
    if (o.status != KrawczykStatus::UniqueZero) break;  // keep last good box
    box = o.refined;
    if (max_width(box) > 0.9 * before) break;
  }
  return box;
}

}  // namespace

KrawczykOutcome krawczyk_step(const EvalFn& f, const JacFn& j,
                              const IntervalVector& x) {
  return step_impl(f, j, x);
}

KrawczykOutcome krawczyk_step(const System& sys, const IntervalVector& x) {
  auto eval = [&sys](const IntervalVector& b, IntervalVector& out) {
    return sys.eval(b, out);
  };
  auto jac = [&sys](const IntervalVector& b, IntervalMatrix& out) {
    return sys.jacobian(b, out);
  };
  return step_impl(eval, jac, x);
}

IntervalVector refine(const EvalFn& f, const JacFn& j, const IntervalVector& box,
                      int max_iter) {
  return refine_impl(f, j, box, max_iter);
}

IntervalVector refine(const System& sys, const IntervalVector& box,
                      int max_iter) {
  auto eval = [&sys](const IntervalVector& b, IntervalVector& out) {
    return sys.eval(b, out);
  };
  auto jac = [&sys](const IntervalVector& b, IntervalMatrix& out) {
    return sys.jacobian(b, out);
  };
  return refine_impl(eval, jac, box, max_iter);
}

bool newton_polish(const System& sys, std::vector<double>& x, double tol,
                   int max_iter) {
  const int n = static_cast<int>(x.size());
  IntervalVector box(n);
  IntervalVector f;
  IntervalMatrix j;
  for (int it = 0; it < max_iter; ++it) {
    for (int i = 0; i < n; ++i) box[i] = Interval(x[i]);
    if (!sys.eval(box, f) || !sys.jacobian(box, j)) return false;
    std::vector<double> fm(n);
    for (int i = 0; i < n; ++i) fm[i] = f[i].mid();
    Matrix jm = midpoint(j);
    std::vector<double> dx;
    if (!solve(jm, fm, dx)) return false;
    double step = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] -= dx[i];
      step = std::max(step, std::fabs(dx[i]));
    }
    if (step < tol) return true;
  }
  return false;
}

SolutionCertificate make_certificate(const System& sys, std::string problem_id,
                                     const KrawczykOutcome& outcome) {
  SolutionCertificate cert;
  cert.problem_id = std::move(problem_id);
  cert.box = outcome.refined;
  cert.image = outcome.image;
  cert.contraction_norm = outcome.contraction_norm;
  const int n = static_cast<int>(cert.box.size());
  IntervalVector mbox(n);
  std::vector<double> m = midpoint(cert.box);
  for (int i = 0; i < n; ++i) mbox[i] = Interval(m[i]);
  IntervalVector fm;
  if (sys.eval(mbox, fm)) {
    double norm = 0.0;
    for (const Interval& c : fm) norm = std::max(norm, c.mag());
    cert.midpoint_residual_norm = norm;
  }
  return cert;
}

}  // namespace ccenum
