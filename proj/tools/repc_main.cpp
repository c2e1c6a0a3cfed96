#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "repc/config.hpp"
#include "repc/harness.hpp"
#include "repc/plot.hpp"
#include "repc/presets.hpp"
#include "repc/trace_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve_out_dir(const std::string& cli_dir,
                            const std::string& cfg_dir) {
  if (!cli_dir.empty()) return cli_dir;
  if (!cfg_dir.empty()) return cfg_dir;
  if (const char* env = std::getenv("REPC_OUT"); env && *env) return env;
  return "repc_out";
}

json assumptions_to_json(const repc::AssumptionReport& a) {
  json j;
  j["min_neighborhood_size"] = a.min_neighborhood_size;
  j["min_proper_neighborhood_size"] = a.min_proper_neighborhood_size;
  j["majority_ok"] = a.majority_ok;
  j["regular_subgraph_connected"] = a.regular_subgraph_connected;
  j["rate_bound_applicable"] = a.rate_bound_applicable;
  return j;
}

json summarize(const repc::SimConfig& cfg, const repc::RunResult& r,
               std::optional<double> reference) {
  repc::Metrics m = repc::compute_metrics(r, reference);
  json j;
  j["algorithm"] = cfg.algorithm == repc::Algorithm::kRepc ? "repc" : "trimmed";
  j["n"] = r.n();
  j["rounds"] = r.rounds;
  j["converged"] = r.converged;
  if (r.bound > 0) j["round_bound"] = r.bound;
  j["consensus_estimate"] = m.consensus_estimate;
  j["max_spread"] = m.max_spread;
  if (m.error_vs_reference) j["error_vs_reference"] = *m.error_vs_reference;
  if (reference) j["reference"] = *reference;
  j["attacked"] = r.attacked;
  j["seed"] = cfg.seed;
  if (r.seed_defaulted) j["seed_note"] = "seed missing from config, using 0";
  j["assumptions"] = assumptions_to_json(r.assumptions);
  if (cfg.algorithm == repc::Algorithm::kRepc) {
    repc::DetectionReport d = repc::detect_attacked(r, cfg.detect);
    j["suspects"] = d.suspects();
    j["detection_low_confidence"] = d.low_confidence;
  } else {
    j["trim_holds"] = r.trim_holds;
  }
  return j;
}

void print_summary(const json& j) {
  std::cout << j["algorithm"].get<std::string>() << ": consensus="
            << j["consensus_estimate"].get<double>()
            << " rounds=" << j["rounds"].get<int>()
            << " converged=" << (j["converged"].get<bool>() ? "yes" : "no")
            << " spread=" << j["max_spread"].get<double>();
  if (j.contains("suspects"))
    std::cout << " suspects=" << j["suspects"].dump();
  std::cout << "\n";
  if (j.contains("seed_note"))
    std::cout << "note: " << j["seed_note"].get<std::string>() << "\n";
}

// Writes the standard artifact set for one run into `dir` using `stem` as the
// file name prefix ("" for the primary run).
void write_run_artifacts(const fs::path& dir, const std::string& stem,
                         const repc::SimConfig& cfg, const repc::RunResult& r,
                         std::optional<double> reference, json& summary) {
  auto name = [&](const std::string& base) {
    return (dir / (stem.empty() ? base : stem + "_" + base)).string();
  };
  if (cfg.outputs.states_csv)
    repc::write_file(name("states.csv"), repc::states_csv(r));
  if (cfg.outputs.reputations_csv && cfg.algorithm == repc::Algorithm::kRepc)
    repc::write_file(name("reputations.csv"), repc::reputations_csv(r));
  if (cfg.outputs.plot_svg) {
    repc::PlotOptions opt;
    opt.reference = reference;
    opt.title = stem.empty() ? "states" : stem + " states";
    repc::write_file(name("plot.svg"), repc::plot_svg(r, opt));
  }
  summary = summarize(cfg, r, reference);
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  repc::SimConfig cfg = repc::load_config(config_path);
  fs::path dir = resolve_out_dir(out_dir, cfg.outputs.dir);
  fs::create_directories(dir);
  repc::RunResult r = repc::run(cfg);
  json summary;
  write_run_artifacts(dir, "", cfg, r, std::nullopt, summary);
  if (cfg.outputs.summary_json)
    repc::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  print_summary(summary);
  std::cout << "wrote " << dir.string() << "\n";
  return 0;
}

int cmd_preset(const std::string& name, const std::string& out_dir,
               std::optional<std::uint64_t> seed, bool desk_scale) {
  repc::Preset preset = repc::make_preset(name, seed, desk_scale);
  fs::path dir =
      fs::path(resolve_out_dir(out_dir, preset.config.outputs.dir)) / name;
  fs::create_directories(dir);
  repc::write_file((dir / "config.json").string(),
                   repc::config_to_json(preset.config));

  if (preset.sweep_grid) {
    repc::SweepResult s = repc::sweep(preset.config, *preset.sweep_grid);
    repc::write_file((dir / "sweep.csv").string(), repc::sweep_csv(s));
    const repc::SweepCell* peak = &s.cells[0];
    for (const auto& c : s.cells)
      if (c.mean_abs_error > peak->mean_abs_error) peak = &c;
    json summary;
    summary["reference"] = s.reference;
    summary["peak"] = {{"mu", peak->mu},
                       {"sigma", peak->sigma},
                       {"mean_abs_error", peak->mean_abs_error}};
    repc::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
    std::cout << name << ": reference=" << s.reference << " peak cell mu="
              << peak->mu << " sigma=" << peak->sigma
              << " mean_abs_error=" << peak->mean_abs_error << "\n";
    std::cout << "wrote " << dir.string() << "\n";
    return 0;
  }

  std::optional<double> reference;
  if (preset.compute_reference) {
    repc::SimConfig clean = preset.config;
    clean.attacks.clear();
    reference = repc::compute_metrics(repc::run(clean)).consensus_estimate;
  }

  repc::RunResult r = repc::run(preset.config);
  json summary;
  write_run_artifacts(dir, "", preset.config, r, reference, summary);
  summary["preset"] = name;
  summary["description"] = preset.description;

  if (preset.baseline_config) {
    repc::RunResult b = repc::run(*preset.baseline_config);
    json baseline_summary;
    write_run_artifacts(dir, "baseline", *preset.baseline_config, b, reference,
                        baseline_summary);
    summary["baseline"] = baseline_summary;
  }
  repc::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  print_summary(summary);
  if (summary.contains("baseline")) print_summary(summary["baseline"]);
  std::cout << "wrote " << dir.string() << "\n";
  return 0;
}

repc::SweepGrid parse_grid(const std::string& path) {
  json j = json::parse(repc::read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw repc::ConfigError({"grid: invalid JSON"});
  std::vector<std::string> problems;
  repc::SweepGrid grid;
  for (const auto& [key, _] : j.items()) {
    if (key != "mus" && key != "sigmas" && key != "repeats" &&
        key != "agents" && key != "start_round")
      problems.push_back("grid: unknown key \"" + key + "\"");
  }
  auto numbers = [&](const char* key, std::vector<double>& out) {
    if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
      problems.push_back(std::string("grid: \"") + key +
                         "\" must be a nonempty array");
      return;
    }
    for (const auto& v : j[key]) {
      if (!v.is_number()) {
        problems.push_back(std::string("grid: \"") + key +
                           "\" must contain numbers");
        return;
      }
      out.push_back(v.get<double>());
    }
  };
  numbers("mus", grid.mus);
  numbers("sigmas", grid.sigmas);
  if (j.contains("repeats")) {
    if (!j["repeats"].is_number_integer() || j["repeats"].get<int>() < 1)
      problems.push_back("grid: \"repeats\" must be a positive integer");
    else
      grid.repeats = j["repeats"].get<int>();
  }
  if (j.contains("agents")) {
    grid.agents.clear();
    if (!j["agents"].is_array() || j["agents"].empty())
      problems.push_back("grid: \"agents\" must be a nonempty array");
    else
      for (const auto& a : j["agents"]) {
        if (!a.is_number_integer() || a.get<int>() < 0) {
          problems.push_back("grid: agent ids must be non-negative integers");
          break;
        }
        grid.agents.push_back(a.get<int>());
      }
  }
  if (j.contains("start_round")) {
    if (!j["start_round"].is_number_integer() ||
        j["start_round"].get<int>() < 1)
      problems.push_back("grid: \"start_round\" must be >= 1");
    else
      grid.start_round = j["start_round"].get<int>();
  }
  if (!problems.empty()) throw repc::ConfigError(problems);
  return grid;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_path,
              const std::string& out_dir) {
  repc::SimConfig cfg = repc::load_config(config_path);
  repc::SweepGrid grid = parse_grid(grid_path);
  fs::path dir = resolve_out_dir(out_dir, cfg.outputs.dir);
  fs::create_directories(dir);
  repc::SweepResult s = repc::sweep(cfg, grid);
  repc::write_file((dir / "sweep.csv").string(), repc::sweep_csv(s));
  std::cout << "reference=" << s.reference << "\n";
  std::cout << "mu\tsigma\tmean_abs_error\tstd_error\n";
  for (const auto& c : s.cells)
    std::cout << c.mu << "\t" << c.sigma << "\t" << c.mean_abs_error << "\t"
              << c.std_error << "\n";
  std::cout << "wrote " << (dir / "sweep.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reputation-weighted resilient consensus simulator"};
  app.require_subcommand(1);

  std::string run_config, run_out;
  CLI::App* run_cmd = app.add_subcommand("run", "simulate a JSON config");
  run_cmd->add_option("config", run_config, "path to the config JSON")
      ->required();
  run_cmd->add_option("--out", run_out, "output directory");

  std::string preset_name, preset_out;
  std::uint64_t preset_seed = 0;
  bool desk_scale = false;
  bool list_presets = false;
  CLI::App* preset_cmd = app.add_subcommand("preset", "run a canned scenario");
  preset_cmd->add_option("name", preset_name, "preset name");
  preset_cmd->add_option("--out", preset_out, "output directory");
  CLI::Option* seed_opt =
      preset_cmd->add_option("--seed", preset_seed, "override the preset seed");
  preset_cmd->add_flag("--desk-scale", desk_scale,
                       "shrink heavy presets for a quick look");
  preset_cmd->add_flag("--list", list_presets, "list preset names");

  std::string sweep_config, sweep_grid, sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "attack-parameter sweep over a config");
  sweep_cmd->add_option("config", sweep_config, "path to the config JSON")
      ->required();
  sweep_cmd->add_option("grid", sweep_grid, "path to the grid JSON")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_config, run_out);
    if (preset_cmd->parsed()) {
      if (list_presets) {
        for (const auto& n : repc::preset_names()) std::cout << n << "\n";
        return 0;
      }
      if (preset_name.empty()) {
        std::cerr << "preset: missing name (try --list)\n";
        return 2;
      }
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) seed = preset_seed;
      try {
        return cmd_preset(preset_name, preset_out, seed, desk_scale);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\navailable presets:\n";
        for (const auto& n : repc::preset_names()) std::cerr << "  " << n << "\n";
        return 2;
      }
    }
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_config, sweep_grid, sweep_out);
  } catch (const repc::ConfigError& e) {
    std::cerr << "config error:\n";
    for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
