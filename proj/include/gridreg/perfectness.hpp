#pragma once

#include <variant>
#include <vector>

#include "gridreg/torus.hpp"

namespace gridreg {

// Parameter matrix of a perfect coloring: rows[i-1][j-1] is the number of
// j-colored neighbors of any cell of color i. Every row sums to 2n.
struct ParameterMatrix {
  int n = 0;  // grid dimension
  int k = 0;
  std::vector<std::vector<int>> rows;

  bool operator==(const ParameterMatrix&) const = default;
};

// Two cells of the same color whose neighbor color counts disagree.
struct NotPerfectWitness {
  Cell cell_a;
  Cell cell_b;
  int color = 0;
  std::vector<int> counts_a;
  std::vector<int> counts_b;

  bool operator==(const NotPerfectWitness&) const = default;
};

using PerfectnessResult = std::variant<ParameterMatrix, NotPerfectWitness>;

// Neighbor color histogram of one cell; counts[j-1] = neighbors of color j,
// with wrapped multiplicities, so the histogram always sums to 2n.
std::vector<int> neighbor_color_counts(const PeriodicColoring& coloring, CellIndex index);
std::vector<int> neighbor_color_counts(const PeriodicColoring& coloring, const Cell& cell);

// Either the parameter matrix, or the first witness in row-major scan order:
// cell_a is the first cell of the offending color, cell_b the first cell
// whose counts differ from cell_a's.
PerfectnessResult compute_parameter_matrix(const PeriodicColoring& coloring);

bool is_perfect(const PeriodicColoring& coloring);

}  // namespace gridreg
