#include "gridreg/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace gridreg {

PeriodicColoring one_dim_pattern(int k, OneDimKind kind) {
  if (k < 1) throw InvalidK("one-dimensional pattern needs k >= 1");
  if (k == 1) {
    const int period = kind == OneDimKind::both_doubled ? 2 : 1;
    return PeriodicColoring({period}, 1, std::vector<int>(static_cast<std::size_t>(period), 1));
  }
  std::vector<int> cells;
  if (kind == OneDimKind::left_doubled || kind == OneDimKind::both_doubled) cells.push_back(1);
  for (int c = 1; c <= k; ++c) cells.push_back(c);
  if (kind == OneDimKind::both_doubled) cells.push_back(k);
  for (int c = k - 1; c >= 2; --c) cells.push_back(c);
  const int period = static_cast<int>(cells.size());
  return PeriodicColoring({period}, k, std::move(cells));
}

PeriodicColoring lift_reducible(const PeriodicColoring& pattern, const std::vector<int>& delta) {
  if (pattern.dim() != 1) throw InvalidColoring("lift expects a one-dimensional pattern");
  if (std::ranges::all_of(delta, [](int v) { return v == 0; }))
    throw AllZeroDelta("lift needs a nonzero delta");
  for (int v : delta) {
    if (v < -1 || v > 1) throw InvalidColoring("delta entries must be in {-1,0,+1}");
  }

  const int period = pattern.periods()[0];
  const int n = static_cast<int>(delta.size());
  std::vector<int> periods(static_cast<std::size_t>(n), 1);
  for (int j = 0; j < n; ++j) {
    if (delta[static_cast<std::size_t>(j)] != 0) periods[static_cast<std::size_t>(j)] = period;
  }

  Torus torus(periods);
  std::vector<int> cells(static_cast<std::size_t>(torus.cell_count()));
  for (CellIndex x = 0; x < torus.cell_count(); ++x) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j)
      s += static_cast<std::int64_t>(delta[static_cast<std::size_t>(j)]) * torus.coordinate(x, j);
    std::int64_t r = s % period;
    if (r < 0) r += period;
    cells[static_cast<std::size_t>(x)] = pattern.color_at(static_cast<CellIndex>(r));
  }
  return PeriodicColoring(std::move(periods), pattern.color_count(), std::move(cells));
}

ParameterMatrix reducible_matrix(const ReducibleMatrixSpec& spec) {
  if (spec.n < 1 || spec.k < 1) throw InvalidSpec("dimension and color count must be >= 1");
  if (spec.r < 1 || spec.r > spec.n) throw InvalidSpec("support size r must be in [1..n]");
  if ((spec.eps1 != 1 && spec.eps1 != 2) || (spec.eps2 != 1 && spec.eps2 != 2))
    throw InvalidSpec("eps parameters must be 1 or 2");

  const int degree = 2 * spec.n;
  ParameterMatrix m{spec.n, spec.k, {}};
  m.rows.assign(static_cast<std::size_t>(spec.k),
                std::vector<int>(static_cast<std::size_t>(spec.k), 0));
  if (spec.k == 1) {
    m.rows[0][0] = degree;
    return m;
  }
  m.rows[0][0] = degree - spec.eps1 * spec.r;
  m.rows[0][1] = spec.eps1 * spec.r;
  for (int i = 2; i <= spec.k - 1; ++i) {
    auto& row = m.rows[static_cast<std::size_t>(i - 1)];
    row[static_cast<std::size_t>(i - 2)] = spec.r;
    row[static_cast<std::size_t>(i - 1)] = degree - 2 * spec.r;
    row[static_cast<std::size_t>(i)] = spec.r;
  }
  auto& last = m.rows[static_cast<std::size_t>(spec.k - 1)];
  last[static_cast<std::size_t>(spec.k - 2)] = spec.eps2 * spec.r;
  last[static_cast<std::size_t>(spec.k - 1)] = degree - spec.eps2 * spec.r;
  return m;
}

PeriodicColoring cylindrical_lift(const PeriodicColoring& coloring, int n) {
  const int m = coloring.dim();
  if (n <= m) throw DimensionNotLarger("cylindrical lift needs a strictly larger dimension");
  std::vector<int> periods = coloring.periods();
  periods.resize(static_cast<std::size_t>(n), 1);

  // Period-1 axes do not enlarge the cell array; only the torus grows.
  return PeriodicColoring(std::move(periods), coloring.color_count(), coloring.cells());
}

namespace {

// 00, 01, 11, 10 in that order.
constexpr int kPairToDigit[2][2] = {{0, 1}, {3, 2}};
constexpr int kDigitToPair[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};

}  // namespace

std::vector<int> gray_point(const BinaryWord& word) {
  if (word.size() % 2 != 0) throw OddLength("binary word must have even length");
  std::vector<int> out;
  out.reserve(word.size() / 2);
  for (std::size_t b = 0; b < word.size(); b += 2) {
    const int hi = word[b];
    const int lo = word[b + 1];
    if ((hi != 0 && hi != 1) || (lo != 0 && lo != 1))
      throw InvalidColoring("binary word entries must be bits");
    out.push_back(kPairToDigit[hi][lo]);
  }
  return out;
}

BinaryWord gray_inverse(const std::vector<int>& point) {
  BinaryWord out;
  out.reserve(point.size() * 2);
  for (int digit : point) {
    if (digit < 0 || digit > 3) throw InvalidColoring("torus coordinates must be in [0..3]");
    out.push_back(kDigitToPair[digit][0]);
    out.push_back(kDigitToPair[digit][1]);
  }
  return out;
}

HypercubeColoring hamming_distance_coloring(int n) {
  if (n < 1) throw InvalidK("hypercube coloring needs n >= 1");
  HypercubeColoring out;
  out.half_dim = n;
  const std::size_t size = std::size_t{1} << (2 * n);
  out.colors.resize(size);
  for (std::size_t mask = 0; mask < size; ++mask)
    out.colors[mask] = std::popcount(mask) + 1;
  return out;
}

std::optional<ParameterMatrix> hypercube_parameter_matrix(const HypercubeColoring& coloring) {
  const int bits = 2 * coloring.half_dim;
  const int k = *std::ranges::max_element(coloring.colors);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
  for (std::size_t mask = 0; mask < coloring.colors.size(); ++mask) {
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int b = 0; b < bits; ++b) {
      const int nb_color = coloring.colors[mask ^ (std::size_t{1} << b)];
      ++counts[static_cast<std::size_t>(nb_color - 1)];
    }
    auto& row = rows[static_cast<std::size_t>(coloring.colors[mask] - 1)];
    if (row.empty())
      row = std::move(counts);
    else if (row != counts)
      return std::nullopt;
  }
  return ParameterMatrix{coloring.half_dim, k, std::move(rows)};
}

PeriodicColoring gray_lift(int n) {
  if (n < 1) throw InvalidK("gray lift needs n >= 1");
  Torus torus(std::vector<int>(static_cast<std::size_t>(n), 4));
  std::vector<int> cells(static_cast<std::size_t>(torus.cell_count()));
  for (CellIndex x = 0; x < torus.cell_count(); ++x) {
    int weight = 0;
    for (int b : gray_inverse(torus.coords_of(x))) weight += b;
    cells[static_cast<std::size_t>(x)] = weight + 1;
  }
  return PeriodicColoring(std::vector<int>(static_cast<std::size_t>(n), 4), 2 * n + 1,
                          std::move(cells));
}

}  // namespace gridreg
