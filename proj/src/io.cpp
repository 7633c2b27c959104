#include "gridreg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gridreg {

namespace {

using nlohmann::json;

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw Error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

json axes_1based(const std::vector<int>& axes) {
  json out = json::array();
  for (int a : axes) out.push_back(a + 1);
  return out;
}

json triples_to_json(const std::vector<DegreeTriple>& triples) {
  json out = json::array();
  for (const auto& t : triples)
    out.push_back({{"lower", t.lower}, {"inner", t.inner}, {"upper", t.upper}});
  return out;
}

json segments_to_json(const SegmentPartition& segments) {
  return {{"i1", segments.i1},
          {"i2", segments.i2},
          {"first_degenerate", segments.first_degenerate},
          {"third_degenerate", segments.third_degenerate}};
}

json hyperplane_to_json(const ComponentHyperplane& component, const Torus& torus) {
  return {{"cell_count", component.cell_count},
          {"delta", component.plane.delta},
          {"offset", component.plane.offset},
          {"orientation", component.orientation},
          {"representative", torus.coords_of(component.representative)}};
}

}  // namespace

json coloring_to_json(const PeriodicColoring& coloring) {
  return {{"n", coloring.dim()},
          {"periods", coloring.periods()},
          {"k", coloring.color_count()},
          {"cells", coloring.cells()}};
}

PeriodicColoring coloring_from_json(const json& j) {
  const int n = int_field(j, "n");
  std::vector<int> periods = int_array(field(j, "periods"), "periods");
  if (static_cast<int>(periods.size()) != n)
    throw Error("field \"periods\" must list exactly n entries");
  const int k = int_field(j, "k");
  std::vector<int> cells = int_array(field(j, "cells"), "cells");
  return PeriodicColoring(std::move(periods), k, std::move(cells));
}

json matrix_to_json(const ParameterMatrix& matrix) {
  return {{"n", matrix.n}, {"k", matrix.k}, {"rows", matrix.rows}};
}

ParameterMatrix matrix_from_json(const json& j) {
  ParameterMatrix m;
  m.n = int_field(j, "n");
  m.k = int_field(j, "k");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.k)
    throw InvalidSpec("matrix needs exactly k rows");
  for (const auto& row : rows) {
    auto parsed = int_array(row, "matrix row");
    if (static_cast<int>(parsed.size()) != m.k) throw InvalidSpec("matrix rows must have k entries");
    int sum = 0;
    for (int v : parsed) {
      if (v < 0) throw InvalidSpec("matrix entries must be nonnegative");
      sum += v;
    }
    if (sum != 2 * m.n) throw InvalidSpec("matrix rows must sum to 2n");
    m.rows.push_back(std::move(parsed));
  }
  return m;
}

json witness_to_json(const NotPerfectWitness& witness) {
  return {{"cell_a", witness.cell_a},
          {"cell_b", witness.cell_b},
          {"color", witness.color},
          {"counts_a", witness.counts_a},
          {"counts_b", witness.counts_b}};
}

json reduction_to_json(const Reduction& reduction) {
  return {{"delta", reduction.delta}, {"pattern", coloring_to_json(reduction.pattern)}};
}

json report_to_json(const DRReport& report) {
  json j{{"distance_regular", true},
         {"matrix", matrix_to_json(report.matrix)},
         {"order", report.order.colors},
         {"triples", triples_to_json(report.triples)},
         {"segments", segments_to_json(report.segments)},
         {"bfs_verified", report.bfs_verified},
         {"small_period", report.small_period},
         {"essential_axes", axes_1based(report.essential_axes)}};
  j["reducible"] = report.reduction ? reduction_to_json(*report.reduction) : json(nullptr);
  return j;
}

json failure_to_json(const DRFailure& failure) {
  json j{{"distance_regular", false}};
  switch (failure.kind) {
    case DRFailure::Kind::NotPerfect:
      j["kind"] = "not_perfect";
      break;
    case DRFailure::Kind::NoStandardOrder:
      j["kind"] = "no_standard_order";
      break;
    case DRFailure::Kind::LayeringMismatch:
      j["kind"] = "layering_mismatch";
      break;
  }
  if (failure.witness) j["witness"] = witness_to_json(*failure.witness);
  if (failure.cell) j["cell"] = *failure.cell;
  return j;
}

json dr_result_to_json(const DRResult& result) {
  if (const auto* report = std::get_if<DRReport>(&result)) return report_to_json(*report);
  return failure_to_json(std::get<DRFailure>(result));
}

json analysis_report(const PeriodicColoring& coloring) {
  json j{{"n", coloring.dim()},
         {"periods", coloring.periods()},
         {"k", coloring.color_count()},
         {"small_period", coloring.has_small_period()},
         {"essential_axes", axes_1based(essential_variables(coloring))}};

  auto perfectness = compute_parameter_matrix(coloring);
  if (const auto* matrix = std::get_if<ParameterMatrix>(&perfectness)) {
    j["perfect"] = true;
    j["matrix"] = matrix_to_json(*matrix);
  } else {
    j["perfect"] = false;
    j["witness"] = witness_to_json(std::get<NotPerfectWitness>(perfectness));
  }

  auto reduction = detect_reducible(coloring);
  j["reducible"] = reduction ? reduction_to_json(*reduction) : json(nullptr);

  auto dr = check_distance_regular(coloring);
  j["distance_regular"] = dr_result_to_json(dr);

  // Per-color profile of (l, k, u) sizes; only meaningful when every
  // neighbor color is within one of the cell's own, so layering failures
  // simply omit it.
  const auto* report = std::get_if<DRReport>(&dr);
  try {
    std::map<int, std::map<std::vector<int>, int>> profiles;
    for (CellIndex x = 0; x < coloring.torus().cell_count(); ++x) {
      const auto sets = direction_sets(coloring, x);
      std::vector<int> sizes{static_cast<int>(sets.lower.size()),
                             static_cast<int>(sets.inner.size()),
                             static_cast<int>(sets.upper.size())};
      ++profiles[coloring.color_at(x)][sizes];
    }
    json hist = json::array();
    for (const auto& [color, per_sizes] : profiles) {
      json rows = json::array();
      for (const auto& [sizes, count] : per_sizes)
        rows.push_back({{"lower", sizes[0]},
                        {"inner", sizes[1]},
                        {"upper", sizes[2]},
                        {"cells", count}});
      hist.push_back({{"color", color}, {"profiles", rows}});
    }
    j["direction_histograms"] = hist;
  } catch (const NotLayered&) {
    j["direction_histograms"] = json(nullptr);
  }

  // Hyperplane structure across every consecutive pair of equal triples.
  json planes = json::array();
  if (report != nullptr) {
    const auto& triples = report->triples;
    for (int i = 1; i + 1 <= report->matrix.k; ++i) {
      if (!(triples[static_cast<std::size_t>(i - 1)] == triples[static_cast<std::size_t>(i)]))
        continue;
      const PeriodicColoring relabeled = relabel_to_order(coloring, report->order);
      json components = json::array();
      for (const auto& component : recover_hyperplane(relabeled, i))
        components.push_back(hyperplane_to_json(component, coloring.torus()));
      planes.push_back({{"color", i}, {"components", components}});
    }
  }
  j["hyperplanes"] = planes;
  return j;
}

json matrix_candidate_to_json(const MatrixCandidate& candidate) {
  return {{"matrix", matrix_to_json(candidate.matrix)},
          {"passes",
           {{"monotonicity", candidate.flags.monotonicity},
            {"strictness", candidate.flags.strictness},
            {"repeated_shape", candidate.flags.repeated_shape},
            {"bound", candidate.flags.bound},
            {"reducible_family", candidate.flags.reducible_family},
            {"all", candidate.flags.all()}}}};
}

json search_result_to_json(const SearchResult& result) {
  json colorings = json::array();
  for (const auto& coloring : result.colorings) colorings.push_back(coloring_to_json(coloring));
  return {{"colorings", colorings},
          {"summary",
           {{"classes", result.colorings.size()},
            {"nodes_expanded", result.nodes_expanded},
            {"budget_exceeded", result.budget_exceeded}}}};
}

json classify_result_to_json(const ClassifyResult& result) {
  json classes = json::array();
  for (const auto& cls : result.classes)
    classes.push_back({{"representative", coloring_to_json(cls.representative)},
                       {"report", report_to_json(cls.report)}});
  return {{"classes", classes},
          {"summary",
           {{"classes", result.classes.size()},
            {"classes_up_to_grid_symmetry", result.classes_up_to_grid_symmetry},
            {"nodes_expanded", result.nodes_expanded},
            {"budget_exceeded", result.budget_exceeded}}}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string render_ascii(const PeriodicColoring& coloring) {
  if (coloring.dim() != 2) throw Error("rendering is defined for n = 2 only");
  if (coloring.color_count() > 35) throw Error("rendering supports at most 35 colors");
  const auto& periods = coloring.periods();
  std::ostringstream out;
  for (int row = 0; row < periods[0]; ++row) {
    for (int col = 0; col < periods[1]; ++col) {
      const int c = coloring.color_at(std::vector<int>{row, col});
      out << static_cast<char>(c <= 9 ? '0' + c : 'a' + (c - 10));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gridreg
