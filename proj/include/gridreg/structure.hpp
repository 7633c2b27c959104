#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridreg/torus.hpp"

namespace gridreg {

// Partition of the 2n directions at one cell by neighbor color relative to
// the cell's own color: -1 lower, 0 inner, +1 upper. Sizes reproduce the
// cell's degree triple (l, k, u).
struct DirectionSets {
  std::vector<Direction> lower;
  std::vector<Direction> inner;
  std::vector<Direction> upper;

  bool operator==(const DirectionSets&) const = default;
};

// Discrete hyperplane M(delta, c) = { x : delta . x = c } with
// delta in {-1,0,+1}^n, not all zero, first nonzero entry +1.
struct HyperplaneSpec {
  std::vector<int> delta;
  std::int64_t offset = 0;  // well-defined mod gcd of periods over support(delta)

  bool operator==(const HyperplaneSpec&) const = default;
};

// Hyperplane structure of one connected component of G(C_i u C_{i+1}).
// Cells y of color i+t in the component satisfy
//   delta . y  ==  offset + orientation * t   (mod g),
// where g is the gcd of the periods over support(delta). The orientation
// records on which side of the color-i layer the (i+1)-layer sits after
// delta's sign has been normalized.
struct ComponentHyperplane {
  HyperplaneSpec plane;
  int orientation = +1;
  CellIndex representative = 0;  // smallest flat index in the component
  std::int64_t cell_count = 0;
};

// Witness that a coloring factors through a single linear form:
// color(x) = pattern(delta . x mod period(pattern)).
struct Reduction {
  std::vector<int> delta;  // canonical: first nonzero entry is +1
  PeriodicColoring pattern;

  bool operator==(const Reduction&) const = default;
};

struct InclusionCounterexample {
  Cell x;               // color i
  Cell y;               // adjacent, color i+1
  Direction direction;  // direction present on the wrong side
  char which = 'L';     // 'L': L(x) not within L(y); 'U': U(y) not within U(x)
};

struct OppositionCounterexample {
  Cell cell_a;
  Cell cell_b;
  std::string reason;
};

struct EqualDegreeViolation {
  int color = 0;
  std::string reason;
};

// Classify the 2n directions at one cell. Throws NotLayered if some neighbor
// color differs by more than one (the coloring cannot be distance regular
// with colors in their current order).
DirectionSets direction_sets(const PeriodicColoring& coloring, CellIndex index);
DirectionSets direction_sets(const PeriodicColoring& coloring, const Cell& cell);

// For every edge x~y with color(y) = color(x) + 1, checks L(x) within L(y)
// and U(x) contains U(y). nullopt = holds everywhere.
std::optional<InclusionCounterexample> verify_inclusion(const PeriodicColoring& coloring);

// Checks the nested-direction-set chains along an ascending chain of cells
// (consecutive cells adjacent, colors increasing by exactly 1). Throws
// NotAChain when the input is not such a chain.
bool verify_ascending_chains(const PeriodicColoring& coloring, const std::vector<Cell>& chain);

// For a color pair (i, i+1) with identical degree triples: on every
// connected component of G(C_i u C_{i+1}) the direction sets are constant
// with L = -U and I = -I. Throws TriplesDiffer when the triples disagree
// (including i out of range, e.g. k = 1). nullopt = holds.
std::optional<OppositionCounterexample> verify_opposition(const PeriodicColoring& coloring,
                                                          int color);

// Recovers the hyperplane structure of every component of G(C_i u C_{i+1})
// for a color pair with identical degree triples. Components are listed by
// smallest flat index. Throws InconsistentDelta if the directions inside one
// component disagree or a cell misses its hyperplane residue; that signals a
// bug (or a precondition violation), not a property of distance regular
// input.
std::vector<ComponentHyperplane> recover_hyperplane(const PeriodicColoring& coloring, int color);

// First delta in canonical enumeration order (base-3 counter over
// (delta_1,...,delta_n) with digits 0,+1,-1, first axis fastest, skipping
// tuples whose first nonzero is -1) such that the color depends only on
// delta . x modulo the induced period, together with the induced
// one-dimensional coloring. nullopt = irreducible.
std::optional<Reduction> detect_reducible(const PeriodicColoring& coloring);

// 0-based axes j such that the coloring actually depends on x_j.
std::vector<int> essential_variables(const PeriodicColoring& coloring);

}  // namespace gridreg
