#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridreg/errors.hpp"

namespace gridreg {

using CellIndex = std::int64_t;

// A cell named by its coordinate tuple, 0 <= coords[j] < period[j].
using Cell = std::vector<int>;

// A signed unit step +-e^axis. Axes are 0-based in code; JSON and CLI output
// print them 1-based.
struct Direction {
  int axis = 0;
  int sign = +1;

  Direction negated() const { return Direction{axis, -sign}; }
  bool operator==(const Direction&) const = default;
  auto operator<=>(const Direction&) const = default;
};

// The 2n directions in canonical order: axis 0 (+,-), axis 1 (+,-), ...
std::vector<Direction> all_directions(int n);

// Rectangular torus Z^n / (p_1 Z x ... x p_n Z). Cells are addressed by
// coordinate tuple or by row-major flat index with the LAST coordinate
// fastest. The adjacency is inherited from Z^n with multiplicity: every cell
// has exactly 2n incident edges, so a period of 2 yields a doubled edge and a
// period of 1 a doubled self-loop. Keeping those multiplicities is what makes
// grid-level degree claims checkable verbatim on the quotient.
class Torus {
 public:
  explicit Torus(std::vector<int> periods);

  int dim() const { return static_cast<int>(periods_.size()); }
  const std::vector<int>& periods() const { return periods_; }
  CellIndex cell_count() const { return count_; }

  CellIndex index_of(std::span<const int> coords) const;
  Cell coords_of(CellIndex index) const;
  int coordinate(CellIndex index, int axis) const;

  CellIndex step(CellIndex index, Direction d) const;

  // The 2n neighbors of a cell as a multiset, in all_directions order.
  std::vector<CellIndex> neighbor_indices(CellIndex index) const;
  void neighbor_indices(CellIndex index, std::vector<CellIndex>& out) const;

  bool operator==(const Torus&) const = default;

 private:
  std::vector<int> periods_;
  std::vector<CellIndex> strides_;
  CellIndex count_ = 1;
};

// A coloring of Z^n with rectangular periods, stored on its fundamental
// torus. Colors are 1-based and every color in [1..k] occurs somewhere.
class PeriodicColoring {
 public:
  PeriodicColoring(std::vector<int> periods, int k, std::vector<int> cells);

  int dim() const { return torus_.dim(); }
  int color_count() const { return k_; }
  const Torus& torus() const { return torus_; }
  const std::vector<int>& periods() const { return torus_.periods(); }
  const std::vector<int>& cells() const { return cells_; }

  int color_at(CellIndex index) const { return cells_[static_cast<std::size_t>(index)]; }
  int color_at(std::span<const int> coords) const { return color_at(torus_.index_of(coords)); }

  std::vector<CellIndex> color_class(int color) const;

  // True when some period is < 3, i.e. wrapped coincident edges are in play.
  bool has_small_period() const;

  bool operator==(const PeriodicColoring&) const = default;

 private:
  Torus torus_;
  int k_ = 1;
  std::vector<int> cells_;
};

// Multiset of the 2n neighboring cells, in all_directions order.
std::vector<Cell> neighbors(const PeriodicColoring& coloring, const Cell& cell);

// Multi-source BFS distances to the nearest source, indexed by flat cell
// index. Edge multiplicities are irrelevant for distance. Equals the Z^n
// distance to the periodic source set. Throws EmptySource.
std::vector<int> distance_from_set(const Torus& torus, const std::vector<CellIndex>& sources);
std::vector<int> distance_from_set(const PeriodicColoring& coloring, const std::vector<Cell>& sources);

// Color i becomes k+1-i.
PeriodicColoring reverse_colors(const PeriodicColoring& coloring);

// Cell x receives the old color of x - offset.
PeriodicColoring translate(const PeriodicColoring& coloring, const Cell& offset);

// new_color_of[old_color - 1] = new color; must be a bijection on [1..k].
PeriodicColoring apply_color_permutation(const PeriodicColoring& coloring,
                                         const std::vector<int>& new_color_of);

}  // namespace gridreg
