#include "gridreg/perfectness.hpp"

namespace gridreg {

std::vector<int> neighbor_color_counts(const PeriodicColoring& coloring, CellIndex index) {
  std::vector<int> counts(static_cast<std::size_t>(coloring.color_count()), 0);
  std::vector<CellIndex> nbrs;
  coloring.torus().neighbor_indices(index, nbrs);
  for (CellIndex nb : nbrs) ++counts[static_cast<std::size_t>(coloring.color_at(nb) - 1)];
  return counts;
}

std::vector<int> neighbor_color_counts(const PeriodicColoring& coloring, const Cell& cell) {
  return neighbor_color_counts(coloring, coloring.torus().index_of(cell));
}

PerfectnessResult compute_parameter_matrix(const PeriodicColoring& coloring) {
  const Torus& t = coloring.torus();
  const int k = coloring.color_count();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
  std::vector<CellIndex> first_cell(static_cast<std::size_t>(k), -1);

  std::vector<CellIndex> nbrs;
  std::vector<int> counts(static_cast<std::size_t>(k));
  for (CellIndex i = 0; i < t.cell_count(); ++i) {
    const int color = coloring.color_at(i);
    counts.assign(static_cast<std::size_t>(k), 0);
    t.neighbor_indices(i, nbrs);
    for (CellIndex nb : nbrs) ++counts[static_cast<std::size_t>(coloring.color_at(nb) - 1)];

    auto& row = rows[static_cast<std::size_t>(color - 1)];
    if (first_cell[static_cast<std::size_t>(color - 1)] < 0) {
      first_cell[static_cast<std::size_t>(color - 1)] = i;
      row = counts;
    } else if (row != counts) {
      NotPerfectWitness w;
      w.cell_a = t.coords_of(first_cell[static_cast<std::size_t>(color - 1)]);
      w.cell_b = t.coords_of(i);
      w.color = color;
      w.counts_a = row;
      w.counts_b = counts;
      return w;
    }
  }
  return ParameterMatrix{t.dim(), k, std::move(rows)};
}

bool is_perfect(const PeriodicColoring& coloring) {
  return std::holds_alternative<ParameterMatrix>(compute_parameter_matrix(coloring));
}

}  // namespace gridreg
