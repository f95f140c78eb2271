// Command-line front end: scenario sweeps to CSV, bundled presets, and the
// oracle validation suite.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mpjcm/mpjcm.hpp"

namespace {

bool is_preset(const std::string& name) {
  for (const auto& p : mpjcm::preset_names())
    if (p == name) return true;
  return false;
}

std::vector<mpjcm::PresetScenario> load_scenarios(const std::string& source) {
  if (is_preset(source)) return mpjcm::preset_scenarios(source);
  const std::filesystem::path path(source);
  mpjcm::ScenarioConfig cfg = mpjcm::parse_config_file(path);
  return {{path.stem().string(), cfg}};
}

int run_command(const std::string& source, const std::string& out_dir,
                long dim_override, unsigned threads,
                const std::vector<std::string>& overrides) {
  auto scenarios = load_scenarios(source);
  for (auto& sc : scenarios) {
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw mpjcm::ConfigError("--set expects key=value, got '" + kv + "'");
      mpjcm::apply_config_entry(sc.config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (dim_override > 0) sc.config.dim = dim_override;
    sc.config.threads = threads;
    mpjcm::run_scenario(sc.config, out_dir, sc.stem);
    std::cout << "wrote " << sc.stem << "_* to " << out_dir << "\n";
  }
  return 0;
}

int validate_command(unsigned seed) {
  const auto results = mpjcm::run_validation_suite(seed);
  bool all_pass = true;
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    std::printf("[%s] %s", res.pass ? "PASS" : "FAIL", res.name.c_str());
    if (res.tol > 0.0) std::printf(": max dev %.3e (tol %.0e)", res.max_dev, res.tol);
    if (!res.note.empty()) std::printf(": %s", res.note.c_str());
    std::printf(" [%.1fs]\n", res.seconds);
  }
  std::printf("%s\n", all_pass ? "validation suite passed" : "validation suite FAILED");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiphoton Jaynes-Cummings simulator for superposed squeezed "
               "displaced number states"};
  app.require_subcommand(1);

  std::string source;
  std::string out_dir = "out";
  long dim_override = 0;
  unsigned threads = mpjcm::default_thread_count();
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "run a preset or config file, emit CSV");
  run->add_option("source", source, "preset name (fig1..fig10b) or config path")
      ->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--dim", dim_override, "override truncation dimension");
  run->add_option("--threads", threads, "worker threads for sweeps");
  run->add_option("--set", overrides, "override config entries as key=value");

  unsigned seed = 1;
  auto* validate = app.add_subcommand("validate", "run the oracle validation suite");
  validate->add_option("--seed", seed, "seed for the random spot checks");

  std::string wigner_source;
  std::string grid_spec = "201,201";
  double range = 0.0;
  auto* wigner = app.add_subcommand("wigner", "evaluate a Wigner grid from a config");
  wigner->add_option("source", wigner_source, "preset name or config path")->required();
  wigner->add_option("--grid", grid_spec, "grid size as NX,NP");
  wigner->add_option("--range", range, "half-width of the phase-space window");
  wigner->add_option("--out", out_dir, "output directory");
  wigner->add_option("--threads", threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(source, out_dir, dim_override, threads, overrides);
    if (validate->parsed()) return validate_command(seed);
    if (wigner->parsed()) {
      auto scenarios = load_scenarios(wigner_source);
      const auto comma = grid_spec.find(',');
      if (comma == std::string::npos)
        throw mpjcm::ConfigError("--grid expects NX,NP");
      const long nx = std::stol(grid_spec.substr(0, comma));
      const long np = std::stol(grid_spec.substr(comma + 1));
      for (auto& sc : scenarios) {
        sc.config.sweep = mpjcm::SweepKind::Wigner;
        sc.config.observables = {mpjcm::Observable::Wigner};
        sc.config.nx = nx;
        sc.config.np = np;
        if (range > 0.0) sc.config.range = range;
        sc.config.threads = threads;
        mpjcm::run_scenario(sc.config, out_dir, sc.stem);
        std::cout << "wrote " << sc.stem << "_wigner.csv to " << out_dir << "\n";
      }
      return 0;
    }
  } catch (const mpjcm::TruncationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
