#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccenum/aniso.hpp"
#include "ccenum/krawczyk.hpp"
#include "ccenum/nbody.hpp"

namespace ccenum {

struct SearchSettings {
  double epsilon_c3 = 1e-10;     // width threshold below which a box is C3
  std::uint64_t max_boxes = 100000000;  // processed-box budget
  int workers = 1;
  std::uint64_t checkpoint_period = 0;  // boxes between checkpoints; 0 = off
  std::string checkpoint_path;
  bool prune = true;  // identity/floor pruning (soundness audit switch)
};

struct SearchStats {
  std::uint64_t boxes_processed = 0;
  std::uint64_t pruned_by_bounds = 0;    // identity/floor prescreen
  std::uint64_t pruned_by_krawczyk = 0;  // Krawczyk exclusions
  std::uint64_t collision_splits = 0;
  std::uint64_t bisections = 0;
  std::uint64_t krawczyk_contractions = 0;  // box replaced by X ∩ K(X)
  std::uint64_t gauge_rejected = 0;         // certified but vetoed boxes
  // relative-volume accounting: credited converges to 1 on complete runs
  double volume_accounted = 0.0;
};

struct EnumerationReport {
  std::string problem_id;
  IntervalVector initial_box;
  std::vector<SolutionCertificate> certificates;  // sorted by midpoint
  std::map<std::string, int> counts_by_shape;
  std::vector<IntervalVector> undecided;  // C3 and unprocessed boxes (capped)
  std::uint64_t undecided_total = 0;
  SearchStats stats;
  bool budget_exhausted = false;
  bool complete = false;  // true iff undecided_total == 0
  double wall_seconds = 0.0;
};

/// Branch-and-bound subdivision over the initial box: every sub-box is
/// pruned, Krawczyk-classified, or bisected along the coordinate of
/// largest width relative to the initial extents (ties to the lowest
/// index).  Certified boxes are refined and collected; boxes narrower
/// than epsilon_c3 in every coordinate are reported undecided and make
/// the run incomplete, as does budget exhaustion.
EnumerationReport search(const System& sys, const IntervalVector& initial,
                         const SearchSettings& settings,
                         const std::string& problem_id);

/// Continues a run from a loaded checkpoint (partial results + pending
/// boxes); with one worker the result is identical to an uninterrupted
/// run.
EnumerationReport search_from(const System& sys, EnumerationReport partial,
                              std::vector<IntervalVector> pending,
                              const SearchSettings& settings);

/// Full enumeration over the a-priori box of the anisotropic problem,
/// with shape classes assigned.
EnumerationReport enumerate_aniso(const AnisoProblem& prob,
                                  const SearchSettings& settings);

/// Enumeration of the reduced n-body problem over a caller-supplied
/// region; certificates additionally pass check_gauge_validity.
EnumerationReport enumerate_nbody(const ReducedNBodyProblem& prob,
                                  const IntervalVector& region,
                                  const SearchSettings& settings);

/// Geometric class of a certificate from midpoint geometry (tolerance
/// 1e-6 for axis/symmetry tests): collinear-x, collinear-y,
/// isosceles-triangle, triangle-with-interior-point,
/// equilateral-in-isosceles, rhombus, rectangle, slanted-rhombus, other.
std::string classify_shape(const SolutionCertificate& cert,
                           const AnisoProblem& prob);

/// Checkpoint round-trip used for long runs; the file stores pending
/// boxes, partial results, and statistics with hex-exact endpoints.
void save_checkpoint(const std::string& path, const EnumerationReport& partial,
                     const std::vector<IntervalVector>& pending);
bool load_checkpoint(const std::string& path, EnumerationReport& partial,
                     std::vector<IntervalVector>& pending);

}  // namespace ccenum
