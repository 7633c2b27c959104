#include "gridreg/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gridreg {
namespace {

std::vector<Direction> negated_sorted(const std::vector<Direction>& dirs) {
  std::vector<Direction> out;
  out.reserve(dirs.size());
  for (const Direction& d : dirs) out.push_back(d.negated());
  std::ranges::sort(out);
  return out;
}

bool subset_of(const std::vector<Direction>& small, const std::vector<Direction>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::int64_t mod_reduce(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::int64_t dot_delta(const std::vector<int>& delta, const Torus& torus, CellIndex index) {
  std::int64_t s = 0;
  for (int j = 0; j < torus.dim(); ++j) {
    if (delta[static_cast<std::size_t>(j)] != 0)
      s += static_cast<std::int64_t>(delta[static_cast<std::size_t>(j)]) *
           torus.coordinate(index, j);
  }
  return s;
}

std::int64_t support_gcd(const std::vector<int>& delta, const std::vector<int>& periods) {
  std::int64_t g = 0;
  for (std::size_t j = 0; j < delta.size(); ++j) {
    if (delta[j] != 0) g = std::gcd(g, static_cast<std::int64_t>(periods[j]));
  }
  return g;
}

// Connected components of the subgraph induced by colors {i, i+1}, each as an
// ascending index list, ordered by smallest member.
std::vector<std::vector<CellIndex>> color_pair_components(const PeriodicColoring& coloring,
                                                          int color) {
  const Torus& t = coloring.torus();
  auto in_pair = [&](CellIndex x) {
    const int c = coloring.color_at(x);
    return c == color || c == color + 1;
  };
  std::vector<char> seen(static_cast<std::size_t>(t.cell_count()), 0);
  std::vector<std::vector<CellIndex>> components;
  std::vector<CellIndex> nbrs;
  for (CellIndex start = 0; start < t.cell_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || !in_pair(start)) continue;
    std::vector<CellIndex> comp;
    std::deque<CellIndex> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const CellIndex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      t.neighbor_indices(u, nbrs);
      for (CellIndex v : nbrs) {
        if (!seen[static_cast<std::size_t>(v)] && in_pair(v)) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    std::ranges::sort(comp);
    components.push_back(std::move(comp));
  }
  return components;
}

// Throws TriplesDiffer unless colors i and i+1 exist and the direction-set
// sizes of their first cells coincide.
void require_equal_triples(const PeriodicColoring& coloring, int color) {
  if (color < 1 || color + 1 > coloring.color_count())
    throw TriplesDiffer("no color pair (i, i+1) inside [1..k]");
  const auto ci = coloring.color_class(color);
  const auto cj = coloring.color_class(color + 1);
  const DirectionSets a = direction_sets(coloring, ci.front());
  const DirectionSets b = direction_sets(coloring, cj.front());
  if (a.lower.size() != b.lower.size() || a.inner.size() != b.inner.size() ||
      a.upper.size() != b.upper.size())
    throw TriplesDiffer("degree triples of the color pair differ");
}

std::vector<int> delta_from_upper(const PeriodicColoring& coloring, const DirectionSets& ds) {
  std::vector<int> delta(static_cast<std::size_t>(coloring.dim()), 0);
  for (const Direction& d : ds.upper) {
    int& slot = delta[static_cast<std::size_t>(d.axis)];
    if (slot != 0 && slot != d.sign)
      throw InconsistentDelta("upper set contains an opposite direction pair");
    slot = d.sign;
  }
  return delta;
}

}  // namespace

DirectionSets direction_sets(const PeriodicColoring& coloring, CellIndex index) {
  DirectionSets out;
  const int base = coloring.color_at(index);
  for (const Direction& d : all_directions(coloring.dim())) {
    const int diff = coloring.color_at(coloring.torus().step(index, d)) - base;
    if (diff == -1)
      out.lower.push_back(d);
    else if (diff == 0)
      out.inner.push_back(d);
    else if (diff == +1)
      out.upper.push_back(d);
    else
      throw NotLayered("neighbor color jumps by more than one");
  }
  std::ranges::sort(out.lower);
  std::ranges::sort(out.inner);
  std::ranges::sort(out.upper);
  return out;
}

DirectionSets direction_sets(const PeriodicColoring& coloring, const Cell& cell) {
  return direction_sets(coloring, coloring.torus().index_of(cell));
}

std::optional<InclusionCounterexample> verify_inclusion(const PeriodicColoring& coloring) {
  const Torus& t = coloring.torus();
  std::vector<DirectionSets> sets(static_cast<std::size_t>(t.cell_count()));
  for (CellIndex i = 0; i < t.cell_count(); ++i) sets[static_cast<std::size_t>(i)] = direction_sets(coloring, i);

  for (CellIndex x = 0; x < t.cell_count(); ++x) {
    for (const Direction& d : all_directions(t.dim())) {
      const CellIndex y = t.step(x, d);
      if (coloring.color_at(y) != coloring.color_at(x) + 1) continue;
      const DirectionSets& dx = sets[static_cast<std::size_t>(x)];
      const DirectionSets& dy = sets[static_cast<std::size_t>(y)];
      if (!subset_of(dx.lower, dy.lower)) {
        for (const Direction& miss : dx.lower) {
          if (!std::ranges::binary_search(dy.lower, miss))
            return InclusionCounterexample{t.coords_of(x), t.coords_of(y), miss, 'L'};
        }
      }
      if (!subset_of(dy.upper, dx.upper)) {
        for (const Direction& miss : dy.upper) {
          if (!std::ranges::binary_search(dx.upper, miss))
            return InclusionCounterexample{t.coords_of(x), t.coords_of(y), miss, 'U'};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_ascending_chains(const PeriodicColoring& coloring, const std::vector<Cell>& chain) {
  if (chain.empty()) throw NotAChain("empty chain");
  const Torus& t = coloring.torus();
  std::vector<CellIndex> idx;
  idx.reserve(chain.size());
  for (const Cell& c : chain) idx.push_back(t.index_of(c));

  for (std::size_t s = 0; s + 1 < idx.size(); ++s) {
    bool adjacent = false;
    for (const Direction& d : all_directions(t.dim())) {
      if (t.step(idx[s], d) == idx[s + 1]) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) throw NotAChain("consecutive chain cells are not adjacent");
    if (coloring.color_at(idx[s + 1]) != coloring.color_at(idx[s]) + 1)
      throw NotAChain("chain colors do not ascend by one");
  }

  // Lower sets grow along the chain, upper sets shrink.
  for (std::size_t s = 0; s + 1 < idx.size(); ++s) {
    const DirectionSets a = direction_sets(coloring, idx[s]);
    const DirectionSets b = direction_sets(coloring, idx[s + 1]);
    if (!subset_of(a.lower, b.lower) || !subset_of(b.upper, a.upper)) return false;
  }
  return true;
}

std::optional<OppositionCounterexample> verify_opposition(const PeriodicColoring& coloring,
                                                          int color) {
  require_equal_triples(coloring, color);
  const Torus& t = coloring.torus();
  for (const auto& comp : color_pair_components(coloring, color)) {
    const DirectionSets rep = direction_sets(coloring, comp.front());
    if (rep.lower != negated_sorted(rep.upper))
      return OppositionCounterexample{t.coords_of(comp.front()), t.coords_of(comp.front()),
                                      "lower set is not the negated upper set"};
    if (rep.inner != negated_sorted(rep.inner))
      return OppositionCounterexample{t.coords_of(comp.front()), t.coords_of(comp.front()),
                                      "inner set is not closed under negation"};
    for (CellIndex x : comp) {
      if (direction_sets(coloring, x) != rep)
        return OppositionCounterexample{t.coords_of(comp.front()), t.coords_of(x),
                                        "direction sets vary inside one component"};
    }
  }
  return std::nullopt;
}

std::vector<ComponentHyperplane> recover_hyperplane(const PeriodicColoring& coloring, int color) {
  require_equal_triples(coloring, color);
  const Torus& t = coloring.torus();
  std::vector<ComponentHyperplane> out;

  for (const auto& comp : color_pair_components(coloring, color)) {
    std::vector<int> delta_raw = delta_from_upper(coloring, direction_sets(coloring, comp.front()));
    for (CellIndex x : comp) {
      if (delta_from_upper(coloring, direction_sets(coloring, x)) != delta_raw)
        throw InconsistentDelta("delta varies inside one component");
    }
    if (std::ranges::all_of(delta_raw, [](int v) { return v == 0; }))
      throw InconsistentDelta("component has an empty upper set");

    int orientation = +1;
    std::vector<int> delta = delta_raw;
    for (int v : delta_raw) {
      if (v == 0) continue;
      if (v < 0) {
        orientation = -1;
        for (int& e : delta) e = -e;
      }
      break;
    }

    const std::int64_t g = support_gcd(delta, t.periods());
    CellIndex anchor = -1;
    for (CellIndex x : comp) {
      if (coloring.color_at(x) == color) {
        anchor = x;
        break;
      }
    }
    if (anchor < 0) throw InconsistentDelta("component misses the lower color entirely");

    const std::int64_t c = mod_reduce(dot_delta(delta, t, anchor), g);
    for (CellIndex x : comp) {
      const std::int64_t want = c + orientation * (coloring.color_at(x) - color);
      if (mod_reduce(dot_delta(delta, t, x) - want, g) != 0)
        throw InconsistentDelta("component cell misses its hyperplane residue");
    }

    out.push_back(ComponentHyperplane{HyperplaneSpec{std::move(delta), c}, orientation,
                                      comp.front(), static_cast<std::int64_t>(comp.size())});
  }
  return out;
}

std::optional<Reduction> detect_reducible(const PeriodicColoring& coloring) {
  const Torus& t = coloring.torus();
  const int n = t.dim();

  std::int64_t total = 1;
  for (int j = 0; j < n; ++j) total *= 3;

  static constexpr int kDigitValue[3] = {0, +1, -1};
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m < total; ++m) {
    std::int64_t rest = m;
    int first_nonzero = 0;
    for (int j = 0; j < n; ++j) {
      delta[static_cast<std::size_t>(j)] = kDigitValue[rest % 3];
      rest /= 3;
      if (first_nonzero == 0) first_nonzero = delta[static_cast<std::size_t>(j)];
    }
    if (first_nonzero < 0) continue;  // canonical representative of {delta, -delta}

    const std::int64_t g = support_gcd(delta, t.periods());
    std::vector<int> pattern(static_cast<std::size_t>(g), 0);
    bool factors = true;
    for (CellIndex x = 0; x < t.cell_count() && factors; ++x) {
      const auto r = static_cast<std::size_t>(mod_reduce(dot_delta(delta, t, x), g));
      const int c = coloring.color_at(x);
      if (pattern[r] == 0)
        pattern[r] = c;
      else if (pattern[r] != c)
        factors = false;
    }
    if (factors) {
      return Reduction{delta, PeriodicColoring({static_cast<int>(g)}, coloring.color_count(),
                                               std::move(pattern))};
    }
  }
  return std::nullopt;
}

std::vector<int> essential_variables(const PeriodicColoring& coloring) {
  const Torus& t = coloring.torus();
  std::vector<int> out;
  for (int j = 0; j < t.dim(); ++j) {
    if (t.periods()[static_cast<std::size_t>(j)] == 1) continue;
    const Direction d{j, +1};
    for (CellIndex x = 0; x < t.cell_count(); ++x) {
      if (coloring.color_at(t.step(x, d)) != coloring.color_at(x)) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

}  // namespace gridreg
