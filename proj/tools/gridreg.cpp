#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridreg/constructions.hpp"
#include "gridreg/io.hpp"
#include "gridreg/search.hpp"

namespace {

using nlohmann::json;

// 0 success / property holds, 1 property fails, 2 usage or IO error,
// 3 node budget exceeded.
constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::int64_t default_budget() {
  if (const char* env = std::getenv("GRIDREG_BUDGET")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
    std::cerr << "ignoring unparsable GRIDREG_BUDGET=\"" << env << "\"\n";
  }
  return gridreg::kDefaultNodeBudget;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    gridreg::write_json_file(out_path, j);
  }
}

const std::map<std::string, gridreg::OneDimKind> kKindNames{
    {"reflective", gridreg::OneDimKind::reflective},
    {"left-doubled", gridreg::OneDimKind::left_doubled},
    {"both-doubled", gridreg::OneDimKind::both_doubled}};

std::string kind_name(gridreg::OneDimKind kind) {
  for (const auto& [name, value] : kKindNames) {
    if (value == kind) return name;
  }
  return "?";
}

json constructed(const gridreg::PeriodicColoring& coloring, json provenance) {
  json j = gridreg::coloring_to_json(coloring);
  j["construction"] = std::move(provenance);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect and distance regular colorings of rectangular grids, as periodic torus colorings"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a named coloring");
  construct->require_subcommand(1);

  int gray_n = 1;
  std::string gray_out;
  auto* gray = construct->add_subcommand("gray", "pair-encoded weight coloring, k = 2n+1");
  gray->add_option("--n", gray_n, "dimension")->required();
  gray->add_option("-o,--output", gray_out, "output file (default stdout)");

  int onedim_k = 2;
  gridreg::OneDimKind onedim_kind = gridreg::OneDimKind::reflective;
  std::string onedim_out;
  auto* onedim = construct->add_subcommand("one-dim", "one-dimensional pattern");
  onedim->add_option("--k", onedim_k, "number of colors")->required();
  onedim->add_option("--kind", onedim_kind, "pattern kind")
      ->required()
      ->transform(CLI::CheckedTransformer(kKindNames, CLI::ignore_case));
  onedim->add_option("-o,--output", onedim_out, "output file (default stdout)");

  int lift_k = 2;
  gridreg::OneDimKind lift_kind = gridreg::OneDimKind::reflective;
  std::vector<int> lift_delta;
  std::string lift_out;
  auto* lift = construct->add_subcommand("lift", "one-dimensional pattern lifted along delta");
  lift->add_option("--k", lift_k, "number of colors")->required();
  lift->add_option("--kind", lift_kind, "pattern kind")
      ->required()
      ->transform(CLI::CheckedTransformer(kKindNames, CLI::ignore_case));
  lift->add_option("--delta", lift_delta, "entries in {-1,0,1}, comma separated")
      ->required()
      ->delimiter(',');
  lift->add_option("-o,--output", lift_out, "output file (default stdout)");

  std::string cyl_input;
  int cyl_n = 2;
  std::string cyl_out;
  auto* cylinder = construct->add_subcommand("cylinder", "re-embed a coloring in a larger dimension");
  cylinder->add_option("input", cyl_input, "coloring JSON file")->required();
  cylinder->add_option("--n", cyl_n, "target dimension")->required();
  cylinder->add_option("-o,--output", cyl_out, "output file (default stdout)");

  // verify
  std::string verify_input;
  bool verify_perfect = false;
  bool verify_dr = false;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "check perfectness / distance regularity");
  verify->add_option("input", verify_input, "coloring JSON file")->required();
  verify->add_flag("--perfect", verify_perfect, "check perfectness");
  verify->add_flag("--distance-regular", verify_dr, "check distance regularity");
  verify->add_option("-o,--output", verify_out, "output file (default stdout)");

  // analyze
  std::string analyze_input;
  std::string analyze_out;
  auto* analyze = app.add_subcommand("analyze", "full structural report for a coloring");
  analyze->add_option("input", analyze_input, "coloring JSON file")->required();
  analyze->add_option("-o,--output", analyze_out, "output file (default stdout)");

  // enumerate-matrices
  int enum_n = 1;
  int enum_k = 1;
  bool enum_passing = false;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate-matrices", "tridiagonal candidate matrices");
  enumerate->add_option("--n", enum_n, "dimension")->required();
  enumerate->add_option("--k", enum_k, "number of colors")->required();
  enumerate->add_flag("--passing", enum_passing, "keep only candidates passing every screen");
  enumerate->add_option("-o,--output", enum_out, "output file (default stdout)");

  // search
  int search_n = 1;
  int search_k = 1;
  std::vector<int> search_periods;
  std::string search_matrix;
  int search_workers = 1;
  std::int64_t search_budget = 0;
  std::string search_out;
  auto* search = app.add_subcommand("search", "exhaustive search at fixed periods");
  search->add_option("--n", search_n, "dimension")->required();
  search->add_option("--k", search_k, "number of colors")->required();
  search->add_option("--periods", search_periods, "comma separated periods")
      ->required()
      ->delimiter(',');
  search->add_option("--matrix", search_matrix, "target matrix JSON file (default: every screened candidate)");
  search->add_option("--workers", search_workers, "worker threads");
  search->add_option("--budget", search_budget, "node budget (default GRIDREG_BUDGET)");
  search->add_option("-o,--output", search_out, "output file (default stdout)");

  // classify
  int cls_n = 1;
  int cls_k = 1;
  int cls_max_period = 1;
  int cls_workers = 1;
  std::int64_t cls_budget = 0;
  std::string cls_out;
  auto* cls = app.add_subcommand("classify", "equivalence classes over all period tuples");
  cls->add_option("--n", cls_n, "dimension")->required();
  cls->add_option("--k", cls_k, "number of colors")->required();
  cls->add_option("--max-period", cls_max_period, "largest period per axis")->required();
  cls->add_option("--workers", cls_workers, "worker threads");
  cls->add_option("--budget", cls_budget, "node budget (default GRIDREG_BUDGET)");
  cls->add_option("-o,--output", cls_out, "output file (default stdout)");

  // render
  std::string render_input;
  auto* render = app.add_subcommand("render", "ASCII grid for an n = 2 coloring");
  render->add_option("input", render_input, "coloring JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gray->parsed()) {
      emit(constructed(gridreg::gray_lift(gray_n), {{"kind", "gray"}, {"n", gray_n}}), gray_out);
      return kOk;
    }
    if (onedim->parsed()) {
      emit(constructed(gridreg::one_dim_pattern(onedim_k, onedim_kind),
                       {{"kind", "one-dim"}, {"k", onedim_k}, {"pattern", kind_name(onedim_kind)}}),
           onedim_out);
      return kOk;
    }
    if (lift->parsed()) {
      const auto pattern = gridreg::one_dim_pattern(lift_k, lift_kind);
      emit(constructed(gridreg::lift_reducible(pattern, lift_delta),
                       {{"kind", "lift"},
                        {"k", lift_k},
                        {"pattern", kind_name(lift_kind)},
                        {"delta", lift_delta}}),
           lift_out);
      return kOk;
    }
    if (cylinder->parsed()) {
      const auto coloring = gridreg::coloring_from_json(gridreg::read_json_file(cyl_input));
      emit(constructed(gridreg::cylindrical_lift(coloring, cyl_n),
                       {{"kind", "cylinder"}, {"n", cyl_n}}),
           cyl_out);
      return kOk;
    }
    if (verify->parsed()) {
      if (!verify_perfect && !verify_dr) {
        std::cerr << "verify needs --perfect and/or --distance-regular\n";
        return kUsage;
      }
      const auto coloring = gridreg::coloring_from_json(gridreg::read_json_file(verify_input));
      json j;
      bool holds = true;
      if (verify_perfect) {
        auto result = gridreg::compute_parameter_matrix(coloring);
        if (const auto* matrix = std::get_if<gridreg::ParameterMatrix>(&result)) {
          j["perfect"] = true;
          j["matrix"] = gridreg::matrix_to_json(*matrix);
        } else {
          j["perfect"] = false;
          j["witness"] = gridreg::witness_to_json(std::get<gridreg::NotPerfectWitness>(result));
          holds = false;
        }
      }
      if (verify_dr) {
        const auto result = gridreg::check_distance_regular(coloring);
        j["distance_regular"] = gridreg::dr_result_to_json(result);
        holds = holds && std::holds_alternative<gridreg::DRReport>(result);
      }
      emit(j, verify_out);
      return holds ? kOk : kPropertyFails;
    }
    if (analyze->parsed()) {
      const auto coloring = gridreg::coloring_from_json(gridreg::read_json_file(analyze_input));
      emit(gridreg::analysis_report(coloring), analyze_out);
      return kOk;
    }
    if (enumerate->parsed()) {
      json candidates = json::array();
      int passing = 0;
      for (const auto& candidate : gridreg::enumerate_matrices(enum_n, enum_k)) {
        if (candidate.flags.all()) ++passing;
        if (enum_passing && !candidate.flags.all()) continue;
        candidates.push_back(gridreg::matrix_candidate_to_json(candidate));
      }
      emit({{"candidates", candidates},
            {"summary", {{"count", candidates.size()}, {"passing", passing}}}},
           enum_out);
      return kOk;
    }
    if (search->parsed()) {
      gridreg::SearchConfig config;
      config.n = search_n;
      config.k = search_k;
      config.periods = search_periods;
      config.workers = search_workers;
      config.node_budget = search_budget > 0 ? search_budget : default_budget();
      if (!search_matrix.empty())
        config.target = gridreg::matrix_from_json(gridreg::read_json_file(search_matrix));
      const auto result = gridreg::search_colorings(config);
      emit(gridreg::search_result_to_json(result), search_out);
      return result.budget_exceeded ? kBudget : kOk;
    }
    if (cls->parsed()) {
      const auto result = gridreg::classify(cls_n, cls_k, cls_max_period, cls_workers,
                                            cls_budget > 0 ? cls_budget : default_budget());
      emit(gridreg::classify_result_to_json(result), cls_out);
      return result.budget_exceeded ? kBudget : kOk;
    }
    if (render->parsed()) {
      const auto coloring = gridreg::coloring_from_json(gridreg::read_json_file(render_input));
      std::cout << gridreg::render_ascii(coloring);
      return kOk;
    }
  } catch (const gridreg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::cerr << "no command\n";
  return kUsage;
}
