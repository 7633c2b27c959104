#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gridreg/perfectness.hpp"
#include "gridreg/structure.hpp"
#include "gridreg/torus.hpp"

namespace gridreg {

// Degree triple (l_i, k_i, u_i) of color i: neighbors of colors i-1, i, i+1.
// Sums to 2n; l_1 = u_k = 0 by convention.
struct DegreeTriple {
  int lower = 0;
  int inner = 0;
  int upper = 0;

  bool operator==(const DegreeTriple&) const = default;
};

// Colors listed first layer to last; relabeling color order[p] to p+1 makes
// the parameter matrix tridiagonal.
struct StandardOrder {
  std::vector<int> colors;

  bool operator==(const StandardOrder&) const = default;
};

// Three-segment shape of the triple list: l_i < u_i for i <= i1,
// l_i = u_i strictly between, l_i > u_i for i >= i2. When a boundary does
// not exist the convention i1 = 1 (resp. i2 = k) applies and is flagged.
struct SegmentPartition {
  int i1 = 1;
  int i2 = 1;
  bool first_degenerate = false;
  bool third_degenerate = false;

  bool operator==(const SegmentPartition&) const = default;
};

struct DRReport {
  ParameterMatrix matrix;  // rows in standard order
  StandardOrder order;
  std::vector<DegreeTriple> triples;
  SegmentPartition segments;
  bool bfs_verified = false;
  bool small_period = false;  // some period < 3: wrapped coincident edges in play
  std::optional<Reduction> reduction;
  std::vector<int> essential_axes;  // 0-based
};

struct DRFailure {
  enum class Kind { NotPerfect, NoStandardOrder, LayeringMismatch };

  Kind kind = Kind::NotPerfect;
  std::optional<NotPerfectWitness> witness;  // NotPerfect
  std::optional<Cell> cell;                  // LayeringMismatch
};

using DRResult = std::variant<DRReport, DRFailure>;

struct MonotonicityReport {
  bool ok = true;
  char chain = 'l';  // which chain broke
  int index = 0;     // higher color of the first violating pair
};

struct StrictnessReport {
  bool ok = true;
  char chain = 'l';
  int index = 0;
};

struct RepeatedShapeReport {
  bool ok = true;
  int first = 0;    // repeated pair (first, second)
  int second = 0;
  int between = 0;  // color strictly between with lower != upper
};

// 0, 1 or 2 orders: none if the color graph is not a simple path over all k
// colors, both traversals otherwise (the one starting at the smaller original
// color index listed first), a single order for k = 1.
std::vector<StandardOrder> find_standard_orders(const ParameterMatrix& matrix);

// Diagonals of the matrix permuted by the order. Throws NotTridiagonal if a
// nonzero entry survives outside the three diagonals.
std::vector<DegreeTriple> degree_triples(const ParameterMatrix& matrix,
                                         const StandardOrder& order);

// l_2 <= ... <= l_k and u_1 >= ... >= u_{k-1}.
MonotonicityReport validate_monotonicity(const std::vector<DegreeTriple>& triples);

// Throws MonotonicityViolation when the precondition fails.
SegmentPartition compute_segments(const std::vector<DegreeTriple>& triples);

// Consecutive l distinct before i1, consecutive u distinct after i2.
StrictnessReport validate_strictness(const std::vector<DegreeTriple>& triples,
                                     const SegmentPartition& segments);

// Whenever triples at colors i < j (both in [2..k-1]) coincide, every color
// strictly between them must have l = u.
RepeatedShapeReport validate_repeated_triples_shape(const std::vector<DegreeTriple>& triples);

// Perfect + unique standard order + BFS layering from the first color class.
// For connected tridiagonal matrices the layering is implied, so a
// LayeringMismatch on a matrix-accepted coloring signals an internal error.
DRResult check_distance_regular(const PeriodicColoring& coloring);

// An irreducible coloring must satisfy k <= 2n+1; reducible colorings are
// exempt.
bool validate_color_bound(const DRReport& report);

// If l_i = l_{i+1} then u_i <= l_i and -U(x) within L(x) for every cell of
// color i; symmetrically, if u_i = u_{i-1} then l_i <= u_i and -L(x) within
// U(x). Expects a coloring already in standard order with its triples.
std::optional<EqualDegreeViolation> verify_equal_degree_implication(
    const PeriodicColoring& coloring, const std::vector<DegreeTriple>& triples);

// Renumber colors so that order[p] becomes p+1.
PeriodicColoring relabel_to_order(const PeriodicColoring& coloring, const StandardOrder& order);

}  // namespace gridreg
