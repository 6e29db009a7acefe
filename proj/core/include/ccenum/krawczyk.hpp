#pragma once

#include <functional>
#include <limits>
#include <string>

#include "ccenum/system.hpp"

namespace ccenum {

enum class KrawczykStatus { Excluded, UniqueZero, Undecided };

struct KrawczykOutcome {
  KrawczykStatus status = KrawczykStatus::Undecided;
  IntervalVector image;    // K(X)
  IntervalVector refined;  // X intersect K(X); equals X when Excluded
  // inf-norm bound of I - Y J(X); < 1 certifies J invertible on X
  double contraction_norm = std::numeric_limits<double>::infinity();
};

struct SolutionCertificate {
  std::string problem_id;
  IntervalVector box;     // certified box, K(box) in its interior
  IntervalVector image;   // K(box)
  double contraction_norm = 0.0;
  double midpoint_residual_norm = 0.0;
  std::string shape_class;  // assigned by classify_shape
};

/// One Krawczyk step K(X) = m - Y F(m) + (I - Y J(X)) (X - m) with
/// m = midpoint(X) and Y the floating approximate inverse of the
/// midpoint Jacobian.  Excluded iff K(X) and X are disjoint; UniqueZero
/// iff K(X) lies in the interior of X.  A singular preconditioner or a
/// collision inside the evaluators yields Undecided.
///
/// The callable forms return false to signal an unevaluable box
/// (overlapping bodies); the outcome is then Undecided.
using EvalFn = std::function<bool(const IntervalVector&, IntervalVector&)>;
using JacFn = std::function<bool(const IntervalVector&, IntervalMatrix&)>;

KrawczykOutcome krawczyk_step(const EvalFn& f, const JacFn& j,
                              const IntervalVector& x);
KrawczykOutcome krawczyk_step(const System& sys, const IntervalVector& x);

/// Iterates X <- X intersect K(X) on a UniqueZero box until the maximum
/// width shrinks by less than 10% per step or max_iter is reached.  The
/// result still satisfies the UniqueZero test.
IntervalVector refine(const System& sys, const IntervalVector& box,
                      int max_iter = 50);
IntervalVector refine(const EvalFn& f, const JacFn& j,
                      const IntervalVector& box, int max_iter = 50);

/// Plain floating Newton from x (in-place); true when the step norm
/// drops below tol.  Used only to cross-validate certificates.
bool newton_polish(const System& sys, std::vector<double>& x,
                   double tol = 1e-12, int max_iter = 100);

/// Builds a certificate from a box already classified UniqueZero.
SolutionCertificate make_certificate(const System& sys, std::string problem_id,
                                     const KrawczykOutcome& outcome);

}  // namespace ccenum
