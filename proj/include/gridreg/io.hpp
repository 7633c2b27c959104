#pragma once

#include <string>

#include "json.hpp"

#include "gridreg/distreg.hpp"
#include "gridreg/perfectness.hpp"
#include "gridreg/search.hpp"
#include "gridreg/structure.hpp"
#include "gridreg/torus.hpp"

namespace gridreg {

// All serializers emit plain nlohmann objects; key order is alphabetical by
// construction, so dumps are stable for golden-file comparisons. Axes are
// printed 1-based.

nlohmann::json coloring_to_json(const PeriodicColoring& coloring);

// Accepts {"n", "periods", "k", "cells"}; unknown fields are ignored.
// Throws Error on malformed documents; the coloring constructor rejects
// length mismatches, out-of-range colors and absent colors.
PeriodicColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ParameterMatrix& matrix);

// Accepts {"n", "k", "rows"}; rows must be k x k, nonnegative, each summing
// to 2n. Throws Error / InvalidSpec.
ParameterMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const NotPerfectWitness& witness);
nlohmann::json reduction_to_json(const Reduction& reduction);
nlohmann::json report_to_json(const DRReport& report);
nlohmann::json failure_to_json(const DRFailure& failure);
nlohmann::json dr_result_to_json(const DRResult& result);

// Full structural rundown of one coloring: perfectness, distance
// regularity, reducibility, essential axes, per-color direction profiles
// and, for repeated consecutive triples, the recovered hyperplane
// structure.
nlohmann::json analysis_report(const PeriodicColoring& coloring);

nlohmann::json matrix_candidate_to_json(const MatrixCandidate& candidate);
nlohmann::json search_result_to_json(const SearchResult& result);
nlohmann::json classify_result_to_json(const ClassifyResult& result);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Character grid for n = 2: rows follow axis 1, columns axis 2 (the fast
// coordinate). Colors 1..9 print as digits, 10..35 as letters; beyond that
// (or for n != 2) throws Error.
std::string render_ascii(const PeriodicColoring& coloring);

}  // namespace gridreg
