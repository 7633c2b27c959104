#include "gridreg/torus.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gridreg {

std::vector<Direction> all_directions(int n) {
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int axis = 0; axis < n; ++axis) {
    out.push_back(Direction{axis, +1});
    out.push_back(Direction{axis, -1});
  }
  return out;
}

Torus::Torus(std::vector<int> periods) : periods_(std::move(periods)) {
  if (periods_.empty()) throw InvalidColoring("torus needs at least one axis");
  for (int p : periods_) {
    if (p < 1) throw InvalidColoring("periods must be >= 1");
  }
  strides_.assign(periods_.size(), 1);
  for (int j = static_cast<int>(periods_.size()) - 2; j >= 0; --j) {
    strides_[static_cast<std::size_t>(j)] =
        strides_[static_cast<std::size_t>(j + 1)] * periods_[static_cast<std::size_t>(j + 1)];
  }
  count_ = strides_[0] * periods_[0];
}

CellIndex Torus::index_of(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw InvalidColoring("coordinate tuple has wrong dimension");
  CellIndex idx = 0;
  for (int j = 0; j < dim(); ++j) {
    const int p = periods_[static_cast<std::size_t>(j)];
    int c = coords[static_cast<std::size_t>(j)] % p;
    if (c < 0) c += p;
    idx += static_cast<CellIndex>(c) * strides_[static_cast<std::size_t>(j)];
  }
  return idx;
}

Cell Torus::coords_of(CellIndex index) const {
  Cell c(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) {
    c[static_cast<std::size_t>(j)] = coordinate(index, j);
  }
  return c;
}

int Torus::coordinate(CellIndex index, int axis) const {
  return static_cast<int>((index / strides_[static_cast<std::size_t>(axis)]) %
                          periods_[static_cast<std::size_t>(axis)]);
}

CellIndex Torus::step(CellIndex index, Direction d) const {
  const CellIndex stride = strides_[static_cast<std::size_t>(d.axis)];
  const int p = periods_[static_cast<std::size_t>(d.axis)];
  const int c = static_cast<int>((index / stride) % p);
  int c2 = c + d.sign;
  if (c2 < 0) c2 += p;
  if (c2 >= p) c2 -= p;
  return index + static_cast<CellIndex>(c2 - c) * stride;
}

std::vector<CellIndex> Torus::neighbor_indices(CellIndex index) const {
  std::vector<CellIndex> out;
  neighbor_indices(index, out);
  return out;
}

void Torus::neighbor_indices(CellIndex index, std::vector<CellIndex>& out) const {
  out.clear();
  out.reserve(static_cast<std::size_t>(2 * dim()));
  for (int axis = 0; axis < dim(); ++axis) {
    out.push_back(step(index, Direction{axis, +1}));
    out.push_back(step(index, Direction{axis, -1}));
  }
}

PeriodicColoring::PeriodicColoring(std::vector<int> periods, int k, std::vector<int> cells)
    : torus_(std::move(periods)), k_(k), cells_(std::move(cells)) {
  if (k_ < 1) throw InvalidColoring("color count must be >= 1");
  if (static_cast<CellIndex>(cells_.size()) != torus_.cell_count())
    throw InvalidColoring("cell array length does not match the torus size");
  std::vector<char> seen(static_cast<std::size_t>(k_), 0);
  for (int c : cells_) {
    if (c < 1 || c > k_) throw InvalidColoring("cell color out of range [1..k]");
    seen[static_cast<std::size_t>(c - 1)] = 1;
  }
  for (int c = 0; c < k_; ++c) {
    if (!seen[static_cast<std::size_t>(c)])
      throw InvalidColoring("color " + std::to_string(c + 1) + " never occurs");
  }
}

std::vector<CellIndex> PeriodicColoring::color_class(int color) const {
  std::vector<CellIndex> out;
  for (CellIndex i = 0; i < torus_.cell_count(); ++i) {
    if (cells_[static_cast<std::size_t>(i)] == color) out.push_back(i);
  }
  return out;
}

bool PeriodicColoring::has_small_period() const {
  return std::ranges::any_of(periods(), [](int p) { return p < 3; });
}

std::vector<Cell> neighbors(const PeriodicColoring& coloring, const Cell& cell) {
  const Torus& t = coloring.torus();
  const CellIndex idx = t.index_of(cell);
  std::vector<Cell> out;
  for (CellIndex nb : t.neighbor_indices(idx)) out.push_back(t.coords_of(nb));
  return out;
}

std::vector<int> distance_from_set(const Torus& torus, const std::vector<CellIndex>& sources) {
  if (sources.empty()) throw EmptySource("distance_from_set: no sources");
  std::vector<int> dist(static_cast<std::size_t>(torus.cell_count()), -1);
  std::deque<CellIndex> queue;
  for (CellIndex s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  std::vector<CellIndex> nbrs;
  while (!queue.empty()) {
    const CellIndex u = queue.front();
    queue.pop_front();
    torus.neighbor_indices(u, nbrs);
    for (CellIndex v : nbrs) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int> distance_from_set(const PeriodicColoring& coloring,
                                   const std::vector<Cell>& sources) {
  std::vector<CellIndex> idx;
  idx.reserve(sources.size());
  for (const Cell& c : sources) idx.push_back(coloring.torus().index_of(c));
  return distance_from_set(coloring.torus(), idx);
}

PeriodicColoring reverse_colors(const PeriodicColoring& coloring) {
  const int k = coloring.color_count();
  std::vector<int> cells = coloring.cells();
  for (int& c : cells) c = k + 1 - c;
  return PeriodicColoring(coloring.periods(), k, std::move(cells));
}

PeriodicColoring translate(const PeriodicColoring& coloring, const Cell& offset) {
  const Torus& t = coloring.torus();
  if (static_cast<int>(offset.size()) != t.dim())
    throw InvalidColoring("translation offset has wrong dimension");
  std::vector<int> cells(static_cast<std::size_t>(t.cell_count()));
  Cell shifted(static_cast<std::size_t>(t.dim()));
  for (CellIndex i = 0; i < t.cell_count(); ++i) {
    for (int j = 0; j < t.dim(); ++j) {
      shifted[static_cast<std::size_t>(j)] =
          t.coordinate(i, j) - offset[static_cast<std::size_t>(j)];
    }
    cells[static_cast<std::size_t>(i)] = coloring.color_at(t.index_of(shifted));
  }
  return PeriodicColoring(coloring.periods(), coloring.color_count(), std::move(cells));
}

PeriodicColoring apply_color_permutation(const PeriodicColoring& coloring,
                                         const std::vector<int>& new_color_of) {
  const int k = coloring.color_count();
  if (static_cast<int>(new_color_of.size()) != k)
    throw InvalidColoring("color permutation has wrong size");
  std::vector<int> cells = coloring.cells();
  for (int& c : cells) c = new_color_of[static_cast<std::size_t>(c - 1)];
  return PeriodicColoring(coloring.periods(), k, std::move(cells));
}

}  // namespace gridreg
