#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridreg/distreg.hpp"
#include "gridreg/perfectness.hpp"
#include "gridreg/torus.hpp"

namespace gridreg {

inline constexpr std::int64_t kDefaultNodeBudget = 2'000'000'000;

// Which matrix-level screens a tridiagonal candidate passes. `bound` is
// k <= 2n+1 with membership in the reducible family as the only escape, so
// an irreducible realization of a bound-failing matrix is impossible.
struct FilterFlags {
  bool monotonicity = false;
  bool strictness = false;
  bool repeated_shape = false;
  bool bound = false;
  bool reducible_family = false;

  bool all() const { return monotonicity && strictness && repeated_shape && bound; }

  bool operator==(const FilterFlags&) const = default;
};

struct MatrixCandidate {
  ParameterMatrix matrix;
  FilterFlags flags;

  bool operator==(const MatrixCandidate&) const = default;
};

// All tridiagonal k x k matrices with row sums 2n and a positive
// off-diagonal chain (u_i >= 1 for i < k, l_i >= 1 for i > 1), each
// annotated with the screens it passes. Sorted lexicographically by rows.
std::vector<MatrixCandidate> enumerate_matrices(int n, int k);

// Whether the matrix equals reducible_matrix for some r in [1..n] and
// eps1, eps2 in {1,2}.
bool is_reducible_family_matrix(const ParameterMatrix& matrix);

struct SearchConfig {
  int n = 1;
  int k = 1;
  std::vector<int> periods;
  // Absent: loop over every candidate from enumerate_matrices that passes
  // all screens and merge the results.
  std::optional<ParameterMatrix> target;
  int workers = 1;
  std::int64_t node_budget = kDefaultNodeBudget;
  // When set, completed assignments must pass check_distance_regular, not
  // just recompute the target matrix.
  bool require_distance_regular = true;
};

struct SearchResult {
  std::vector<PeriodicColoring> colorings;  // canonical forms, sorted by cells
  std::int64_t nodes_expanded = 0;
  bool budget_exceeded = false;  // partial: some subtree hit its budget slice
};

// Depth-first color assignment in flat cell order with the origin pinned to
// color 1, pruning any cell whose assigned-neighbor histogram exceeds its
// matrix row. Completed assignments are re-verified from scratch before
// emission; the pruning is never trusted as a proof. The tree is split into
// prefix subtrees chosen from the config alone and the budget is divided
// into fixed per-subtree slices, so the result - including nodes_expanded -
// is identical for every worker count.
SearchResult search_colorings(const SearchConfig& config);

// Lexicographically minimal cell array over all translations composed with
// the color relabelings preserving equivalence: for colorings whose matrix
// admits standard orders, exactly those (at most two) relabelings;
// otherwise every permutation, guarded to k <= 7 (throws InvalidK beyond).
PeriodicColoring canonical_form(const PeriodicColoring& coloring);

// Smallest torus carrying the same coloring of Z^n: per axis, the least
// divisor d of the period such that a d-step translation fixes the coloring.
PeriodicColoring reduce_to_minimal_period(const PeriodicColoring& coloring);

struct ColoringClass {
  PeriodicColoring representative;  // canonical form at minimal periods
  DRReport report;
};

struct ClassifyResult {
  std::vector<ColoringClass> classes;  // sorted by (periods, cells)
  // Classes merged further under signed axis permutations of the grid.
  // Translations plus color relabelings stay the primary notion; this count
  // is reported alongside because axis-swapped lifts are otherwise listed
  // as distinct classes.
  int classes_up_to_grid_symmetry = 0;
  std::int64_t nodes_expanded = 0;
  bool budget_exceeded = false;
};

// Distance regular classification at desk scale: every screened candidate
// matrix crossed with every period tuple in [1..max_period]^n (lexicographic
// order), merged by canonical minimal-period representative. The budget
// applies to each (matrix, periods) search independently.
ClassifyResult classify(int n, int k, int max_period, int workers = 1,
                        std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace gridreg
