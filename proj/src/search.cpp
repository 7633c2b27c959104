#include "gridreg/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "gridreg/constructions.hpp"

namespace gridreg {

namespace {

// Aim for roughly this many prefix subtrees so that worker scheduling has
// slack without the split depending on the worker count.
constexpr std::int64_t kTargetTasks = 256;

using Key = std::pair<std::vector<int>, std::vector<int>>;  // (periods, cells)

Key key_of(const PeriodicColoring& coloring) {
  return {coloring.periods(), coloring.cells()};
}

// Incremental color assignment in flat cell order against a fixed target
// matrix. counts_ tracks, for every cell, the histogram of its already
// assigned neighbors; each row sums to 2n, so "assigned counts never exceed
// the row" is the whole feasibility story: at full assignment the totals
// match and pointwise <= becomes equality.
class Assignment {
 public:
  Assignment(const Torus& torus, const ParameterMatrix& target, std::int64_t budget)
      : torus_(torus),
        target_(target),
        k_(target.k),
        budget_(budget),
        cell_count_(torus.cell_count()) {
    colors_.assign(static_cast<std::size_t>(cell_count_), 0);
    counts_.assign(static_cast<std::size_t>(cell_count_) * static_cast<std::size_t>(k_), 0);
    usage_.assign(static_cast<std::size_t>(k_), 0);
    missing_ = k_;
    neighbors_.reserve(static_cast<std::size_t>(cell_count_));
    for (CellIndex x = 0; x < cell_count_; ++x) neighbors_.push_back(torus.neighbor_indices(x));
  }

  std::int64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }
  const std::vector<int>& colors() const { return colors_; }
  int missing() const { return missing_; }
  CellIndex cell_count() const { return cell_count_; }

  bool try_assign(CellIndex x, int c) {
    ++nodes_;
    if (nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    const auto& row = target_.rows[static_cast<std::size_t>(c - 1)];
    const std::size_t base = static_cast<std::size_t>(x) * static_cast<std::size_t>(k_);
    for (int j = 0; j < k_; ++j) {
      if (counts_[base + static_cast<std::size_t>(j)] > row[static_cast<std::size_t>(j)])
        return false;
    }
    colors_[static_cast<std::size_t>(x)] = c;
    const auto& nb = neighbors_[static_cast<std::size_t>(x)];
    for (std::size_t t = 0; t < nb.size(); ++t) {
      const CellIndex y = nb[t];
      const std::size_t slot =
          static_cast<std::size_t>(y) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1);
      ++counts_[slot];
      const int cy = colors_[static_cast<std::size_t>(y)];
      if (cy != 0 &&
          counts_[slot] > target_.rows[static_cast<std::size_t>(cy - 1)][static_cast<std::size_t>(c - 1)]) {
        for (std::size_t u = 0; u <= t; ++u)
          --counts_[static_cast<std::size_t>(nb[u]) * static_cast<std::size_t>(k_) +
                    static_cast<std::size_t>(c - 1)];
        colors_[static_cast<std::size_t>(x)] = 0;
        return false;
      }
    }
    if (usage_[static_cast<std::size_t>(c - 1)]++ == 0) --missing_;
    return true;
  }

  void undo_assign(CellIndex x, int c) {
    for (const CellIndex y : neighbors_[static_cast<std::size_t>(x)])
      --counts_[static_cast<std::size_t>(y) * static_cast<std::size_t>(k_) +
                static_cast<std::size_t>(c - 1)];
    colors_[static_cast<std::size_t>(x)] = 0;
    if (--usage_[static_cast<std::size_t>(c - 1)] == 0) ++missing_;
  }

 private:
  const Torus& torus_;
  const ParameterMatrix& target_;
  int k_;
  std::int64_t budget_;
  CellIndex cell_count_;
  std::int64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<int> colors_;
  std::vector<int> counts_;
  std::vector<int> usage_;
  int missing_ = 0;
  std::vector<std::vector<CellIndex>> neighbors_;
};

bool accept_completed(const PeriodicColoring& coloring, const ParameterMatrix& target,
                      bool require_distance_regular) {
  auto computed = compute_parameter_matrix(coloring);
  const auto* matrix = std::get_if<ParameterMatrix>(&computed);
  if (matrix == nullptr || !(*matrix == target)) return false;
  if (!require_distance_regular) return true;
  return std::holds_alternative<DRReport>(check_distance_regular(coloring));
}

struct TaskOutcome {
  std::vector<std::vector<int>> canonical_cells;
  std::int64_t nodes = 0;
  bool exceeded = false;
};

// Full depth-first run below one prefix; emits canonical forms.
class TaskRunner {
 public:
  TaskRunner(const Torus& torus, const std::vector<int>& periods, const ParameterMatrix& target,
             bool require_distance_regular, std::int64_t budget)
      : state_(torus, target, budget),
        periods_(periods),
        target_(target),
        require_dr_(require_distance_regular) {}

  TaskOutcome run(const std::vector<int>& prefix) {
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
      if (!state_.try_assign(static_cast<CellIndex>(pos), prefix[pos])) {
        // A generated prefix always replays cleanly unless its budget slice
        // is smaller than the prefix itself.
        outcome_.nodes = state_.nodes();
        outcome_.exceeded = state_.exceeded();
        return std::move(outcome_);
      }
    }
    descend(static_cast<CellIndex>(prefix.size()));
    outcome_.nodes = state_.nodes();
    outcome_.exceeded = state_.exceeded();
    return std::move(outcome_);
  }

 private:
  void descend(CellIndex pos) {
    if (state_.exceeded()) return;
    if (pos == state_.cell_count()) {
      emit();
      return;
    }
    const int k = target_.k;
    for (int c = 1; c <= k; ++c) {
      if (!state_.try_assign(pos, c)) {
        if (state_.exceeded()) return;
        continue;
      }
      if (state_.cell_count() - pos - 1 >= state_.missing()) descend(pos + 1);
      state_.undo_assign(pos, c);
      if (state_.exceeded()) return;
    }
  }

  void emit() {
    if (state_.missing() != 0) return;
    PeriodicColoring coloring(periods_, target_.k, state_.colors());
    if (!accept_completed(coloring, target_, require_dr_)) return;
    outcome_.canonical_cells.push_back(canonical_form(coloring).cells());
  }

  Assignment state_;
  std::vector<int> periods_;
  const ParameterMatrix& target_;
  bool require_dr_;
  TaskOutcome outcome_;
};

// Depth of the fixed prefix split: stay within the first row of cells and
// stop once the nominal branching k^(depth-1) reaches the task target.
int prefix_depth(CellIndex cell_count, const std::vector<int>& periods, int k) {
  const std::int64_t cap = std::min<std::int64_t>(cell_count, periods.back());
  int depth = 1;
  std::int64_t width = 1;
  while (depth < cap && width < kTargetTasks) {
    width *= std::max(k, 2);
    ++depth;
  }
  return depth;
}

void generate_prefixes(Assignment& state, int depth, int k, std::vector<int>& scratch,
                       std::vector<std::vector<int>>& out) {
  const auto pos = static_cast<CellIndex>(scratch.size());
  if (pos == depth) {
    out.push_back(scratch);
    return;
  }
  const int hi = (pos == 0) ? 1 : k;  // the origin is pinned to color 1
  for (int c = 1; c <= hi; ++c) {
    if (!state.try_assign(pos, c)) {
      if (state.exceeded()) return;
      continue;
    }
    if (state.cell_count() - pos - 1 >= state.missing()) {
      scratch.push_back(c);
      generate_prefixes(state, depth, k, scratch, out);
      scratch.pop_back();
    }
    state.undo_assign(pos, c);
    if (state.exceeded()) return;
  }
}

struct CoreResult {
  std::vector<std::vector<int>> cells;  // canonical, sorted, unique
  std::int64_t nodes = 0;
  bool exceeded = false;
};

bool valid_target_shape(const ParameterMatrix& target, int n, int k) {
  if (target.n != n || target.k != k) return false;
  if (static_cast<int>(target.rows.size()) != k) return false;
  for (const auto& row : target.rows)
    if (static_cast<int>(row.size()) != k) return false;
  return true;
}

bool target_reachable(const ParameterMatrix& target) {
  for (const auto& row : target.rows) {
    int sum = 0;
    for (int v : row) {
      if (v < 0) return false;
      sum += v;
    }
    if (sum != 2 * target.n) return false;
  }
  return true;
}

CoreResult search_one_matrix(const Torus& torus, const std::vector<int>& periods,
                             const ParameterMatrix& target, int workers, std::int64_t budget,
                             bool require_distance_regular) {
  CoreResult result;
  if (!target_reachable(target)) return result;

  const int depth = prefix_depth(torus.cell_count(), periods, target.k);
  std::vector<std::vector<int>> prefixes;
  {
    Assignment generator(torus, target, budget);
    std::vector<int> scratch;
    generate_prefixes(generator, depth, target.k, scratch, prefixes);
    result.nodes = generator.nodes();
    if (generator.exceeded()) {
      result.exceeded = true;
      return result;
    }
  }
  if (prefixes.empty()) return result;

  const std::size_t task_count = prefixes.size();
  const std::int64_t per_task = budget / static_cast<std::int64_t>(task_count);
  const std::int64_t remainder = budget % static_cast<std::int64_t>(task_count);
  std::vector<TaskOutcome> outcomes(task_count);

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= task_count) break;
      const std::int64_t slice =
          per_task + (static_cast<std::int64_t>(i) < remainder ? 1 : 0);
      TaskRunner runner(torus, periods, target, require_distance_regular, std::max<std::int64_t>(slice, 1));
      outcomes[i] = runner.run(prefixes[i]);
    }
  };

  const int thread_count = std::max(1, std::min<int>(workers, static_cast<int>(task_count)));
  if (thread_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (auto& outcome : outcomes) {
    result.nodes += outcome.nodes;
    result.exceeded = result.exceeded || outcome.exceeded;
    for (auto& cells : outcome.canonical_cells) result.cells.push_back(std::move(cells));
  }
  std::ranges::sort(result.cells);
  result.cells.erase(std::unique(result.cells.begin(), result.cells.end()), result.cells.end());
  return result;
}

void validate_config(const SearchConfig& config) {
  if (config.n < 1 || config.k < 1) throw InvalidSpec("search needs n >= 1 and k >= 1");
  if (static_cast<int>(config.periods.size()) != config.n)
    throw InvalidSpec("periods must list one entry per axis");
  for (int p : config.periods)
    if (p < 1) throw InvalidSpec("periods must be positive");
  if (config.workers < 1) throw InvalidSpec("worker count must be positive");
  if (config.node_budget < 1) throw InvalidSpec("node budget must be positive");
  if (config.target && !valid_target_shape(*config.target, config.n, config.k))
    throw InvalidSpec("target matrix shape disagrees with n and k");
}

}  // namespace

std::vector<MatrixCandidate> enumerate_matrices(int n, int k) {
  if (n < 1 || k < 1) throw InvalidSpec("matrix enumeration needs n >= 1 and k >= 1");
  const int degree = 2 * n;
  std::vector<ParameterMatrix> matrices;
  ParameterMatrix work{n, k, std::vector<std::vector<int>>(
                                 static_cast<std::size_t>(k),
                                 std::vector<int>(static_cast<std::size_t>(k), 0))};

  auto fill = [&](auto&& self, int i) -> void {
    if (i == k) {
      matrices.push_back(work);
      return;
    }
    auto& row = work.rows[static_cast<std::size_t>(i)];
    if (k == 1) {
      row[0] = degree;
      self(self, i + 1);
      row[0] = 0;
      return;
    }
    if (i == 0) {
      for (int u = 1; u <= degree; ++u) {
        row[0] = degree - u;
        row[1] = u;
        self(self, i + 1);
      }
      row[0] = row[1] = 0;
      return;
    }
    if (i == k - 1) {
      for (int l = 1; l <= degree; ++l) {
        row[static_cast<std::size_t>(i - 1)] = l;
        row[static_cast<std::size_t>(i)] = degree - l;
        self(self, i + 1);
      }
      row[static_cast<std::size_t>(i - 1)] = row[static_cast<std::size_t>(i)] = 0;
      return;
    }
    for (int l = 1; l < degree; ++l) {
      for (int u = 1; l + u <= degree; ++u) {
        row[static_cast<std::size_t>(i - 1)] = l;
        row[static_cast<std::size_t>(i)] = degree - l - u;
        row[static_cast<std::size_t>(i + 1)] = u;
        self(self, i + 1);
      }
    }
    row[static_cast<std::size_t>(i - 1)] = row[static_cast<std::size_t>(i)] =
        row[static_cast<std::size_t>(i + 1)] = 0;
  };
  fill(fill, 0);

  std::ranges::sort(matrices, {}, [](const ParameterMatrix& m) { return m.rows; });

  StandardOrder identity;
  identity.colors.resize(static_cast<std::size_t>(k));
  std::iota(identity.colors.begin(), identity.colors.end(), 1);

  std::vector<MatrixCandidate> out;
  out.reserve(matrices.size());
  for (auto& matrix : matrices) {
    MatrixCandidate candidate{std::move(matrix), {}};
    const auto triples = degree_triples(candidate.matrix, identity);
    candidate.flags.monotonicity = validate_monotonicity(triples).ok;
    if (candidate.flags.monotonicity) {
      const auto segments = compute_segments(triples);
      candidate.flags.strictness = validate_strictness(triples, segments).ok;
    }
    candidate.flags.repeated_shape = validate_repeated_triples_shape(triples).ok;
    candidate.flags.reducible_family = is_reducible_family_matrix(candidate.matrix);
    candidate.flags.bound = (k <= 2 * n + 1) || candidate.flags.reducible_family;
    out.push_back(std::move(candidate));
  }
  return out;
}

bool is_reducible_family_matrix(const ParameterMatrix& matrix) {
  for (int r = 1; r <= matrix.n; ++r) {
    for (int e1 : {1, 2}) {
      for (int e2 : {1, 2}) {
        if (matrix == reducible_matrix({matrix.n, matrix.k, r, e1, e2})) return true;
      }
    }
  }
  return false;
}

SearchResult search_colorings(const SearchConfig& config) {
  validate_config(config);
  Torus torus(config.periods);

  SearchResult result;
  std::vector<std::vector<int>> merged;
  auto run_target = [&](const ParameterMatrix& target) {
    CoreResult core = search_one_matrix(torus, config.periods, target, config.workers,
                                        config.node_budget, config.require_distance_regular);
    result.nodes_expanded += core.nodes;
    result.budget_exceeded = result.budget_exceeded || core.exceeded;
    for (auto& cells : core.cells) merged.push_back(std::move(cells));
  };

  if (config.target) {
    run_target(*config.target);
  } else {
    for (const auto& candidate : enumerate_matrices(config.n, config.k)) {
      if (candidate.flags.all()) run_target(candidate.matrix);
    }
  }

  std::ranges::sort(merged);
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  result.colorings.reserve(merged.size());
  for (auto& cells : merged)
    result.colorings.emplace_back(config.periods, config.k, std::move(cells));
  return result;
}

PeriodicColoring canonical_form(const PeriodicColoring& coloring) {
  const int k = coloring.color_count();
  std::vector<std::vector<int>> relabelings;
  auto computed = compute_parameter_matrix(coloring);
  if (const auto* matrix = std::get_if<ParameterMatrix>(&computed)) {
    for (const auto& order : find_standard_orders(*matrix)) {
      std::vector<int> map(static_cast<std::size_t>(k));
      for (int p = 0; p < k; ++p) map[static_cast<std::size_t>(order.colors[static_cast<std::size_t>(p)] - 1)] = p + 1;
      relabelings.push_back(std::move(map));
    }
  }
  if (relabelings.empty()) {
    if (k > 7) throw InvalidK("canonical form without a standard order is limited to k <= 7");
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      relabelings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  const Torus& torus = coloring.torus();
  const auto& periods = coloring.periods();
  const int n = torus.dim();
  const CellIndex count = torus.cell_count();

  std::vector<int> best;
  std::vector<int> base(static_cast<std::size_t>(count));
  std::vector<int> candidate(static_cast<std::size_t>(count));
  Cell shifted(static_cast<std::size_t>(n));
  for (const auto& map : relabelings) {
    for (CellIndex x = 0; x < count; ++x)
      base[static_cast<std::size_t>(x)] =
          map[static_cast<std::size_t>(coloring.color_at(x) - 1)];
    for (CellIndex v = 0; v < count; ++v) {
      const Cell offset = torus.coords_of(v);
      for (CellIndex x = 0; x < count; ++x) {
        for (int j = 0; j < n; ++j) {
          const int p = periods[static_cast<std::size_t>(j)];
          shifted[static_cast<std::size_t>(j)] =
              (torus.coordinate(x, j) - offset[static_cast<std::size_t>(j)] + p) % p;
        }
        candidate[static_cast<std::size_t>(x)] = base[static_cast<std::size_t>(torus.index_of(shifted))];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return PeriodicColoring(periods, k, std::move(best));
}

PeriodicColoring reduce_to_minimal_period(const PeriodicColoring& coloring) {
  const Torus& torus = coloring.torus();
  const auto& periods = coloring.periods();
  const int n = torus.dim();
  const CellIndex count = torus.cell_count();

  std::vector<int> minimal(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int p = periods[static_cast<std::size_t>(j)];
    for (int d = 1; d <= p; ++d) {
      if (p % d != 0) continue;
      bool fixed = true;
      for (CellIndex x = 0; x < count && fixed; ++x) {
        Cell c = torus.coords_of(x);
        c[static_cast<std::size_t>(j)] = (c[static_cast<std::size_t>(j)] + d) % p;
        fixed = coloring.color_at(x) == coloring.color_at(torus.index_of(c));
      }
      if (fixed) {
        minimal[static_cast<std::size_t>(j)] = d;
        break;
      }
    }
  }
  if (minimal == periods) return coloring;

  Torus small(minimal);
  std::vector<int> cells(static_cast<std::size_t>(small.cell_count()));
  for (CellIndex y = 0; y < small.cell_count(); ++y)
    cells[static_cast<std::size_t>(y)] = coloring.color_at(small.coords_of(y));
  return PeriodicColoring(std::move(minimal), coloring.color_count(), std::move(cells));
}

namespace {

PeriodicColoring apply_grid_symmetry(const PeriodicColoring& coloring,
                                     const std::vector<int>& axis_perm, unsigned flips) {
  const int n = coloring.dim();
  const auto& periods = coloring.periods();
  std::vector<int> new_periods(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    new_periods[static_cast<std::size_t>(j)] =
        periods[static_cast<std::size_t>(axis_perm[static_cast<std::size_t>(j)])];

  Torus image(new_periods);
  std::vector<int> cells(static_cast<std::size_t>(image.cell_count()));
  Cell source(static_cast<std::size_t>(n));
  for (CellIndex y = 0; y < image.cell_count(); ++y) {
    for (int j = 0; j < n; ++j) {
      const int axis = axis_perm[static_cast<std::size_t>(j)];
      const int p = new_periods[static_cast<std::size_t>(j)];
      const int coord = image.coordinate(y, j);
      source[static_cast<std::size_t>(axis)] =
          (flips >> j) & 1u ? (p - coord) % p : coord;
    }
    cells[static_cast<std::size_t>(y)] = coloring.color_at(source);
  }
  return PeriodicColoring(std::move(new_periods), coloring.color_count(), std::move(cells));
}

Key grid_symmetry_key(const PeriodicColoring& representative) {
  const int n = representative.dim();
  std::vector<int> axis_perm(static_cast<std::size_t>(n));
  std::iota(axis_perm.begin(), axis_perm.end(), 0);
  std::optional<Key> best;
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      Key key = key_of(canonical_form(apply_grid_symmetry(representative, axis_perm, flips)));
      if (!best || key < *best) best = std::move(key);
    }
  } while (std::next_permutation(axis_perm.begin(), axis_perm.end()));
  return *best;
}

}  // namespace

ClassifyResult classify(int n, int k, int max_period, int workers, std::int64_t node_budget) {
  if (n < 1 || k < 1 || max_period < 1)
    throw InvalidSpec("classification needs n, k, max_period >= 1");

  std::vector<MatrixCandidate> candidates;
  for (auto& candidate : enumerate_matrices(n, k)) {
    if (candidate.flags.all()) candidates.push_back(std::move(candidate));
  }

  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> current(static_cast<std::size_t>(n), 1);
    while (true) {
      tuples.push_back(current);
      int axis = n - 1;
      while (axis >= 0 && current[static_cast<std::size_t>(axis)] == max_period) {
        current[static_cast<std::size_t>(axis)] = 1;
        --axis;
      }
      if (axis < 0) break;
      ++current[static_cast<std::size_t>(axis)];
    }
  }

  ClassifyResult result;
  std::map<Key, ColoringClass> classes;
  for (const auto& candidate : candidates) {
    for (const auto& periods : tuples) {
      SearchConfig config;
      config.n = n;
      config.k = k;
      config.periods = periods;
      config.target = candidate.matrix;
      config.workers = workers;
      config.node_budget = node_budget;
      config.require_distance_regular = true;
      SearchResult found = search_colorings(config);
      result.nodes_expanded += found.nodes_expanded;
      result.budget_exceeded = result.budget_exceeded || found.budget_exceeded;
      for (const auto& coloring : found.colorings) {
        PeriodicColoring representative = canonical_form(reduce_to_minimal_period(coloring));
        Key key = key_of(representative);
        if (classes.contains(key)) continue;
        auto verdict = check_distance_regular(representative);
        const auto* report = std::get_if<DRReport>(&verdict);
        if (report == nullptr)
          throw Error("internal: classified representative failed re-verification");
        classes.emplace(std::move(key), ColoringClass{std::move(representative), *report});
      }
    }
  }

  std::set<Key> grid_keys;
  for (auto& [key, cls] : classes) {
    grid_keys.insert(grid_symmetry_key(cls.representative));
    result.classes.push_back(std::move(cls));
  }
  result.classes_up_to_grid_symmetry = static_cast<int>(grid_keys.size());
  return result;
}

}  // namespace gridreg
