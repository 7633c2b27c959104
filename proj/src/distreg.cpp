#include "gridreg/distreg.hpp"

#include <algorithm>

namespace gridreg {
namespace {

// Undirected color graph: i ~ j iff i != j and a nonzero count links them.
// For matrices of perfect colorings the two off-diagonal entries are nonzero
// together (counting identity), so symmetrizing changes nothing.
std::vector<std::vector<int>> color_graph(const ParameterMatrix& m) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m.k));
  for (int i = 0; i < m.k; ++i) {
    for (int j = i + 1; j < m.k; ++j) {
      const bool linked = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0 ||
                          m.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] > 0;
      if (linked) {
        adj[static_cast<std::size_t>(i)].push_back(j + 1);
        adj[static_cast<std::size_t>(j)].push_back(i + 1);
      }
    }
  }
  return adj;
}

}  // namespace

std::vector<StandardOrder> find_standard_orders(const ParameterMatrix& matrix) {
  if (matrix.k == 1) return {StandardOrder{{1}}};
  const auto adj = color_graph(matrix);

  std::vector<int> endpoints;
  for (int c = 1; c <= matrix.k; ++c) {
    const auto deg = adj[static_cast<std::size_t>(c - 1)].size();
    if (deg > 2) return {};
    if (deg == 1) endpoints.push_back(c);
  }
  if (endpoints.size() != 2) return {};

  auto walk = [&](int start) {
    std::vector<int> path{start};
    int prev = 0;
    int cur = start;
    while (true) {
      int next = 0;
      for (int nb : adj[static_cast<std::size_t>(cur - 1)]) {
        if (nb != prev) {
          next = nb;
          break;
        }
      }
      if (next == 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  const std::vector<int> a = walk(std::min(endpoints[0], endpoints[1]));
  if (static_cast<int>(a.size()) != matrix.k) return {};  // path does not cover all colors
  std::vector<int> b(a.rbegin(), a.rend());
  return {StandardOrder{a}, StandardOrder{std::move(b)}};
}

std::vector<DegreeTriple> degree_triples(const ParameterMatrix& matrix,
                                         const StandardOrder& order) {
  if (static_cast<int>(order.colors.size()) != matrix.k)
    throw NotTridiagonal("order does not cover all colors");
  auto entry = [&](int p, int q) {  // positions 1-based within the order
    return matrix.rows[static_cast<std::size_t>(order.colors[static_cast<std::size_t>(p - 1)] - 1)]
                      [static_cast<std::size_t>(order.colors[static_cast<std::size_t>(q - 1)] - 1)];
  };
  for (int p = 1; p <= matrix.k; ++p) {
    for (int q = 1; q <= matrix.k; ++q) {
      if (std::abs(p - q) > 1 && entry(p, q) != 0)
        throw NotTridiagonal("nonzero entry outside the three diagonals");
    }
  }
  std::vector<DegreeTriple> triples;
  triples.reserve(static_cast<std::size_t>(matrix.k));
  for (int p = 1; p <= matrix.k; ++p) {
    DegreeTriple t;
    t.lower = p > 1 ? entry(p, p - 1) : 0;
    t.inner = entry(p, p);
    t.upper = p < matrix.k ? entry(p, p + 1) : 0;
    triples.push_back(t);
  }
  return triples;
}

MonotonicityReport validate_monotonicity(const std::vector<DegreeTriple>& triples) {
  const int k = static_cast<int>(triples.size());
  for (int i = 3; i <= k; ++i) {
    if (triples[static_cast<std::size_t>(i - 2)].lower > triples[static_cast<std::size_t>(i - 1)].lower)
      return {false, 'l', i};
  }
  for (int i = 2; i <= k - 1; ++i) {
    if (triples[static_cast<std::size_t>(i - 2)].upper < triples[static_cast<std::size_t>(i - 1)].upper)
      return {false, 'u', i};
  }
  return {};
}

SegmentPartition compute_segments(const std::vector<DegreeTriple>& triples) {
  const auto mono = validate_monotonicity(triples);
  if (!mono.ok)
    throw MonotonicityViolation("triple chains are not monotone (chain " +
                                std::string(1, mono.chain) + ", color " +
                                std::to_string(mono.index) + ")");
  const int k = static_cast<int>(triples.size());
  SegmentPartition seg;
  seg.i1 = 1;
  seg.first_degenerate = true;
  for (int i = k; i >= 1; --i) {
    if (triples[static_cast<std::size_t>(i - 1)].lower < triples[static_cast<std::size_t>(i - 1)].upper) {
      seg.i1 = i;
      seg.first_degenerate = false;
      break;
    }
  }
  seg.i2 = k;
  seg.third_degenerate = true;
  for (int i = 1; i <= k; ++i) {
    if (triples[static_cast<std::size_t>(i - 1)].lower > triples[static_cast<std::size_t>(i - 1)].upper) {
      seg.i2 = i;
      seg.third_degenerate = false;
      break;
    }
  }
  return seg;
}

StrictnessReport validate_strictness(const std::vector<DegreeTriple>& triples,
                                     const SegmentPartition& segments) {
  for (int i = 1; i < segments.i1; ++i) {
    if (triples[static_cast<std::size_t>(i - 1)].lower == triples[static_cast<std::size_t>(i)].lower)
      return {false, 'l', i};
  }
  const int k = static_cast<int>(triples.size());
  for (int i = segments.i2 + 1; i <= k; ++i) {
    if (triples[static_cast<std::size_t>(i - 1)].upper == triples[static_cast<std::size_t>(i - 2)].upper)
      return {false, 'u', i};
  }
  return {};
}

RepeatedShapeReport validate_repeated_triples_shape(const std::vector<DegreeTriple>& triples) {
  const int k = static_cast<int>(triples.size());
  for (int i = 2; i <= k - 1; ++i) {
    for (int j = i + 1; j <= k - 1; ++j) {
      if (triples[static_cast<std::size_t>(i - 1)] != triples[static_cast<std::size_t>(j - 1)]) continue;
      for (int m = i + 1; m < j; ++m) {
        const auto& t = triples[static_cast<std::size_t>(m - 1)];
        if (t.lower != t.upper) return {false, i, j, m};
      }
    }
  }
  return {};
}

PeriodicColoring relabel_to_order(const PeriodicColoring& coloring, const StandardOrder& order) {
  std::vector<int> new_color_of(order.colors.size(), 0);
  for (std::size_t p = 0; p < order.colors.size(); ++p)
    new_color_of[static_cast<std::size_t>(order.colors[p] - 1)] = static_cast<int>(p) + 1;
  return apply_color_permutation(coloring, new_color_of);
}

DRResult check_distance_regular(const PeriodicColoring& coloring) {
  PerfectnessResult perfect = compute_parameter_matrix(coloring);
  if (auto* witness = std::get_if<NotPerfectWitness>(&perfect))
    return DRFailure{DRFailure::Kind::NotPerfect, std::move(*witness), std::nullopt};
  ParameterMatrix matrix = std::get<ParameterMatrix>(std::move(perfect));

  const auto orders = find_standard_orders(matrix);
  if (orders.empty()) return DRFailure{DRFailure::Kind::NoStandardOrder, std::nullopt, std::nullopt};
  const StandardOrder& order = orders.front();

  // Independent verification: colors must be the BFS layers from the first
  // class. Tridiagonality plus connectedness already implies this, so any
  // mismatch here is an internal error, reported as a failure value.
  PeriodicColoring layered = relabel_to_order(coloring, order);
  const auto dist = distance_from_set(layered.torus(), layered.color_class(1));
  for (CellIndex x = 0; x < layered.torus().cell_count(); ++x) {
    if (layered.color_at(x) != dist[static_cast<std::size_t>(x)] + 1)
      return DRFailure{DRFailure::Kind::LayeringMismatch, std::nullopt,
                       layered.torus().coords_of(x)};
  }

  DRReport report;
  report.order = order;
  const PerfectnessResult relabeled = compute_parameter_matrix(layered);
  report.matrix = std::get<ParameterMatrix>(relabeled);
  report.triples = degree_triples(report.matrix, StandardOrder{[&] {
                                    std::vector<int> identity(static_cast<std::size_t>(matrix.k));
                                    for (int c = 1; c <= matrix.k; ++c)
                                      identity[static_cast<std::size_t>(c - 1)] = c;
                                    return identity;
                                  }()});
  report.segments = compute_segments(report.triples);
  report.bfs_verified = true;
  report.small_period = coloring.has_small_period();
  report.reduction = detect_reducible(layered);
  report.essential_axes = essential_variables(layered);
  return report;
}

bool validate_color_bound(const DRReport& report) {
  if (report.reduction.has_value()) return true;
  return report.matrix.k <= 2 * report.matrix.n + 1;
}

std::optional<EqualDegreeViolation> verify_equal_degree_implication(
    const PeriodicColoring& coloring, const std::vector<DegreeTriple>& triples) {
  const int k = static_cast<int>(triples.size());
  auto negated = [](const std::vector<Direction>& dirs) {
    std::vector<Direction> out;
    out.reserve(dirs.size());
    for (const Direction& d : dirs) out.push_back(d.negated());
    std::ranges::sort(out);
    return out;
  };
  auto subset_of = [](const std::vector<Direction>& small, const std::vector<Direction>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  for (int i = 2; i <= k - 1; ++i) {
    const auto& ti = triples[static_cast<std::size_t>(i - 1)];
    if (ti.lower == triples[static_cast<std::size_t>(i)].lower) {
      if (ti.upper > ti.lower)
        return EqualDegreeViolation{i, "equal lower degrees but u_i > l_i"};
      for (CellIndex x : coloring.color_class(i)) {
        const DirectionSets ds = direction_sets(coloring, x);
        if (!subset_of(negated(ds.upper), ds.lower))
          return EqualDegreeViolation{i, "-U(x) escapes L(x) at a cell of color i"};
      }
    }
    if (ti.upper == triples[static_cast<std::size_t>(i - 2)].upper) {
      if (ti.lower > ti.upper)
        return EqualDegreeViolation{i, "equal upper degrees but l_i > u_i"};
      for (CellIndex x : coloring.color_class(i)) {
        const DirectionSets ds = direction_sets(coloring, x);
        if (!subset_of(negated(ds.lower), ds.upper))
          return EqualDegreeViolation{i, "-L(x) escapes U(x) at a cell of color i"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gridreg
