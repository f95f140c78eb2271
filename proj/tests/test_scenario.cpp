#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mpjcm/scenario.hpp"

using namespace mpjcm;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_dir(const char* tag) {
  const fs::path dir = fs::temp_directory_path() / (std::string("mpjcm_test_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

constexpr const char* kTimeConfig =
    "# inversion sweep\n"
    "alpha = 2.0\n"
    "r = 0.0\n"
    "n = 1\n"
    "eps = i\n"
    "k = 1\n"
    "sweep = time\n"
    "t_min = 0\n"
    "t_max = 2.0\n"
    "dt = 0.1\n"
    "observables = inversion, pnd\n";

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("valid file") {
    const ScenarioConfig cfg = parse_config_text(kTimeConfig);
    CHECK(cfg.state.alpha == 2.0);
    CHECK(cfg.state.n == 1);
    CHECK(cfg.state.eps_mod == 1.0);
    CHECK(cfg.state.eps_phase == doctest::Approx(std::numbers::pi_v<double> / 2));
    CHECK(cfg.model.k == 1);
    CHECK(cfg.observables.size() == 2);
    CHECK_NOTHROW(validate_config(cfg));
  }
  SUBCASE("unknown key reports the line") {
    try {
      (void)parse_config_text("alpha = 1\nbogus = 3\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
      CHECK(std::string(err.what()).find("line 2") != std::string::npos);
      CHECK(std::string(err.what()).find("bogus") != std::string::npos);
    }
  }
  SUBCASE("bad number reports the field") {
    try {
      (void)parse_config_text("alpha = two\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
      CHECK(std::string(err.what()).find("alpha") != std::string::npos);
    }
  }
  SUBCASE("unordered bounds rejected") {
    ScenarioConfig cfg = parse_config_text(kTimeConfig);
    cfg.t_max = -1.0;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("empty observables rejected") {
    ScenarioConfig cfg = parse_config_text(kTimeConfig);
    cfg.observables.clear();
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("alpha sweep restricted to stationary observables") {
    ScenarioConfig cfg = parse_config_text(kTimeConfig);
    cfg.sweep = SweepKind::Alpha;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("command-line overrides win") {
    ScenarioConfig cfg = parse_config_text(kTimeConfig);
    apply_config_entry(cfg, "alpha", "3.5");
    CHECK(cfg.state.alpha == 3.5);
  }
}

TEST_CASE("deterministic CSV output") {
  const ScenarioConfig cfg = parse_config_text(kTimeConfig);
  const fs::path dir_a = temp_dir("det_a");
  const fs::path dir_b = temp_dir("det_b");
  run_scenario(cfg, dir_a, "scan");
  run_scenario(cfg, dir_b, "scan");
  for (const char* name : {"scan_inversion.csv", "scan_pnd.csv"}) {
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  }
  SUBCASE("header and 12-significant-digit payload") {
    std::istringstream in(slurp(dir_a / "scan_inversion.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "T,sigma_z");
    std::getline(in, line);
    CHECK(line.substr(0, 2) == "0,");
    // T = 0 row: inversion exactly 1
    CHECK(line.substr(2) == "1");
    std::getline(in, line);
    const double t1 = std::strtod(line.c_str(), nullptr);
    CHECK(t1 == doctest::Approx(0.1).epsilon(1e-12));
  }
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("truncation error surfaces the doubled dimension") {
  ScenarioConfig cfg = parse_config_text(kTimeConfig);
  cfg.dim = 6;
  try {
    run_scenario(cfg, temp_dir("trunc"), "t");
    FAIL("expected TruncationError");
  } catch (const TruncationError& err) {
    CHECK(err.suggested_dim == 12);
    CHECK(std::string(err.what()).find("retry with dim 12") != std::string::npos);
  }
  SUBCASE("worker-thread failures surface on the caller") {
    // per-alpha state construction happens inside the worker pool; the
    // fixed dimension only fails for the large-amplitude points
    ScenarioConfig sweep;
    sweep.state = SuperpositionParams::with_eps(0.0, 0.0, 0, {0, 0});
    sweep.model.k = 1;
    sweep.sweep = SweepKind::Alpha;
    sweep.alpha_min = 0.5;
    sweep.alpha_max = 5.0;
    sweep.dalpha = 0.5;
    sweep.t_fixed = 1.0;
    sweep.dim = 30;
    sweep.threads = 4;
    sweep.observables = {Observable::MandelQ};
    CHECK_THROWS_AS(run_scenario(sweep, temp_dir("trunc_mt"), "t"), TruncationError);
  }
}

TEST_CASE("presets") {
  SUBCASE("all preset names expand") {
    for (const auto& name : preset_names()) {
      const auto scenarios = preset_scenarios(name);
      CHECK(!scenarios.empty());
      for (const auto& sc : scenarios) CHECK_NOTHROW(validate_config(sc.config));
    }
  }
  SUBCASE("named parameters of selected presets") {
    const auto fig8a = preset_scenarios("fig8a");
    REQUIRE(fig8a.size() == 5);
    CHECK(fig8a[0].config.t_fixed == 1.578);
    CHECK(fig8a[0].config.state.n == 1);
    CHECK(fig8a[0].config.sweep == SweepKind::Alpha);
    const auto fig10a = preset_scenarios("fig10a");
    CHECK(fig10a[0].config.wigner_t == 4.599998);
    CHECK(fig10a[0].config.nx == 201);
    const auto fig2 = preset_scenarios("fig2");
    CHECK(fig2[0].config.state.alpha == 16.0);
    CHECK(fig2[0].config.observables.contains(Observable::AsymptoticInversion));
  }
  SUBCASE("unknown preset rejected") {
    CHECK_THROWS_AS((void)preset_scenarios("fig99"), ConfigError);
  }
}

TEST_CASE("alpha sweep emits stationary observables") {
  ScenarioConfig cfg;
  cfg.state = SuperpositionParams::with_eps(0.0, 0.0, 1, {0, 0});
  cfg.model.k = 1;
  cfg.sweep = SweepKind::Alpha;
  cfg.alpha_min = 0.5;
  cfg.alpha_max = 1.5;
  cfg.dalpha = 0.5;
  cfg.t_fixed = 1.578;
  cfg.observables = {Observable::MandelQ, Observable::Squeezing};
  const fs::path dir = temp_dir("alpha");
  run_scenario(cfg, dir, "sweep");
  const std::string mandel = slurp(dir / "sweep_mandel.csv");
  CHECK(mandel.substr(0, 8) == "alpha,Q\n");
  int rows = 0;
  for (char ch : mandel)
    if (ch == '\n') ++rows;
  CHECK(rows == 4);  // header + three alphas
  fs::remove_all(dir);
}

TEST_CASE("wigner sweep writes a grid") {
  ScenarioConfig cfg;
  cfg.state = SuperpositionParams::with_eps(1.0, 0.0, 0, {1, 0});
  cfg.model.k = 1;
  cfg.sweep = SweepKind::Wigner;
  cfg.wigner_t = 0.5;
  cfg.nx = 11;
  cfg.np = 11;
  cfg.range = 4.0;
  cfg.observables = {Observable::Wigner};
  const fs::path dir = temp_dir("wig");
  run_scenario(cfg, dir, "w");
  const std::string grid = slurp(dir / "w_wigner.csv");
  CHECK(grid.substr(0, 6) == "x,p,W\n");
  int rows = 0;
  for (char ch : grid)
    if (ch == '\n') ++rows;
  CHECK(rows == 1 + 11 * 11);
  fs::remove_all(dir);
}

TEST_CASE("thread count does not change the emitted bytes") {
  ScenarioConfig cfg = parse_config_text(kTimeConfig);
  cfg.observables = {Observable::Inversion, Observable::Purity};
  const fs::path dir_serial = temp_dir("thr1");
  const fs::path dir_pool = temp_dir("thr4");
  cfg.threads = 1;
  run_scenario(cfg, dir_serial, "s");
  cfg.threads = 4;
  run_scenario(cfg, dir_pool, "s");
  CHECK(slurp(dir_serial / "s_inversion.csv") == slurp(dir_pool / "s_inversion.csv"));
  CHECK(slurp(dir_serial / "s_purity.csv") == slurp(dir_pool / "s_purity.csv"));
  fs::remove_all(dir_serial);
  fs::remove_all(dir_pool);
}

TEST_CASE("time sweep default range follows the model") {
  ScenarioConfig cfg = parse_config_text(
      "alpha = 2.0\nn = 0\neps = 0\nk = 1\nsweep = time\ndt = 0.5\n"
      "observables = inversion\n");
  CHECK(std::isnan(cfg.t_max));
  const fs::path dir = temp_dir("trange");
  run_scenario(cfg, dir, "d");
  // mean photon number is 4: grid should reach 4 pi sqrt(4) ~ 25.13
  std::istringstream in(slurp(dir / "d_inversion.csv"));
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  const double t_last = std::strtod(last.c_str(), nullptr);
  CHECK(t_last == doctest::Approx(25.0).epsilon(0.02));
  fs::remove_all(dir);
}

TEST_CASE("default tolerance honours the environment override") {
  CHECK(default_tail_tolerance() == kDefaultTailTolerance);
  setenv("JCM_DEFAULT_TOL", "1e-9", 1);
  CHECK(default_tail_tolerance() == 1e-9);
  unsetenv("JCM_DEFAULT_TOL");
  CHECK(default_tail_tolerance() == kDefaultTailTolerance);
}
