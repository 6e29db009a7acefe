#pragma once

#include <utility>

#include "ccenum/interval.hpp"
#include "ccenum/linalg.hpp"

namespace ccenum {

/// Result of the cheap box prescreen that runs before the Krawczyk test.
enum class Prescreen {
  NoZero,     ///< box provably contains no solution (C1)
  Collision,  ///< some pairwise distance enclosure touches 0; split or prune
  Unknown,    ///< inconclusive; proceed to Krawczyk
};

/// A square nonlinear system F(x)=0 over an interval box, with enough
/// structure exposed for the subdivision search: body layout for
/// collision splitting and identity-based pruning.
///
/// Implementations must be pure/thread-safe: all methods are const and
/// may be called concurrently.
class System {
 public:
  virtual ~System() = default;

  virtual int dim() const = 0;
  virtual int body_count() const = 0;

  /// Variable indices (x, y) of body b; -1 when that coordinate is not a
  /// search variable (pinned gauge coordinate or reconstructed body).
  virtual std::pair<int, int> body_vars(int b) const = 0;

  /// Interval positions of all bodies for a box, including bodies whose
  /// position is reconstructed rather than searched.
  virtual void positions(const IntervalVector& x, std::vector<Interval>& px,
                         std::vector<Interval>& py) const = 0;

  /// Residual enclosure.  Returns false (and the offending pair) when a
  /// pairwise distance enclosure touches 0.
  virtual bool eval(const IntervalVector& x, IntervalVector& f,
                    std::pair<int, int>* collision = nullptr) const = 0;

  /// Interval Jacobian over the box (analytic partials).  Same collision
  /// convention as eval.
  virtual bool jacobian(const IntervalVector& x, IntervalMatrix& jac,
                        std::pair<int, int>* collision = nullptr) const = 0;

  /// Combined cheap tests: conserved-quantity identities, pairwise
  /// distance floors, residual sign exclusion.  Sound: NoZero is only
  /// returned when no solution can lie in the box.
  virtual Prescreen prescreen(const IntervalVector& x,
                              std::pair<int, int>* collision) const = 0;

  /// A-priori lower bound for the distance between bodies i and j
  /// (0 when no bound is available).
  virtual double pair_dist_floor(int i, int j) const = 0;

  /// Final veto on a certified box (e.g. gauge validity for the reduced
  /// n-body system).  Certificates failing this are counted, not kept.
  virtual bool accept_certificate(const IntervalVector& /*box*/) const {
    return true;
  }
};

}  // namespace ccenum
