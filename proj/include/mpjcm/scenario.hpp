#ifndef MPJCM_SCENARIO_HPP
#define MPJCM_SCENARIO_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mpjcm/asymptotics.hpp"
#include "mpjcm/dynamics.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/observables.hpp"
#include "mpjcm/parallel.hpp"
#include "mpjcm/states.hpp"
#include "mpjcm/wigner.hpp"

namespace mpjcm {

enum class SweepKind { Time, Alpha, Wigner };

enum class Observable {
  Inversion,
  Pnd,
  PndT,
  PndTApprox,
  Purity,
  MandelQ,
  Squeezing,
  Wigner,
  AsymptoticInversion,
};

inline double default_tail_tolerance() {
  if (const char* env = std::getenv("JCM_DEFAULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return kDefaultTailTolerance;
}

struct ScenarioConfig {
  SuperpositionParams state;
  ModelParams model;
  SweepKind sweep = SweepKind::Time;
  // t_max defaults per model: 4 pi sqrt(<n>) for the one-photon model,
  // 4 pi otherwise (NaN = resolve when the state is built).
  double t_min = 0.0, t_max = std::numeric_limits<double>::quiet_NaN(), dt = 0.02;
  double alpha_min = 0.1, alpha_max = 5.0, dalpha = 0.1, t_fixed = 0.0;
  double wigner_t = 0.0;
  Eigen::Index nx = 201, np = 201;
  double range = 0.0;  // 0 -> auto: |beta| + 6
  std::set<Observable> observables;
  std::optional<Eigen::Index> dim;
  double tail_tol = default_tail_tolerance();
  std::vector<double> pnd_times;
  unsigned threads = 1;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view v, int line, std::string_view key) {
  const std::string buf(v);
  char* end = nullptr;
  const double out = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size())
    throw ConfigError("line " + std::to_string(line) + ": field '" + std::string(key) +
                      "' is not a number: '" + buf + "'");
  return out;
}

inline long parse_int(std::string_view v, int line, std::string_view key) {
  const std::string buf(v);
  char* end = nullptr;
  const long out = std::strtol(buf.c_str(), &end, 10);
  if (end != buf.c_str() + buf.size())
    throw ConfigError("line " + std::to_string(line) + ": field '" + std::string(key) +
                      "' is not an integer: '" + buf + "'");
  return out;
}

inline Observable parse_observable(std::string_view name, int line) {
  static const std::map<std::string_view, Observable> table = {
      {"inversion", Observable::Inversion},
      {"pnd", Observable::Pnd},
      {"pnd_t", Observable::PndT},
      {"pnd_t_approx", Observable::PndTApprox},
      {"purity", Observable::Purity},
      {"mandel_q", Observable::MandelQ},
      {"squeezing", Observable::Squeezing},
      {"wigner", Observable::Wigner},
      {"asymptotic_inversion", Observable::AsymptoticInversion}};
  const auto it = table.find(name);
  if (it == table.end())
    throw ConfigError("line " + std::to_string(line) + ": unknown observable '" +
                      std::string(name) + "'");
  return it->second;
}

inline const char* observable_stem(Observable obs) {
  switch (obs) {
    case Observable::Inversion: return "inversion";
    case Observable::Pnd: return "pnd";
    case Observable::PndT: return "pnd_t";
    case Observable::PndTApprox: return "pnd_t_approx";
    case Observable::Purity: return "purity";
    case Observable::MandelQ: return "mandel";
    case Observable::Squeezing: return "squeezing";
    case Observable::Wigner: return "wigner";
    case Observable::AsymptoticInversion: return "asymptotic";
  }
  return "unknown";
}

inline std::vector<std::string_view> split_list(std::string_view v) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    const auto comma = v.find(',', pos);
    const auto piece = trim(v.substr(pos, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - pos));
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

// Applies one key=value pair. Shared by the file parser and by command-line
// overrides (which win by being applied last).
inline void apply_config_entry(ScenarioConfig& cfg, std::string_view key,
                               std::string_view value, int line = 0) {
  using detail::parse_double;
  using detail::parse_int;
  if (key == "alpha") {
    cfg.state.alpha = parse_double(value, line, key);
  } else if (key == "r") {
    cfg.state.r = parse_double(value, line, key);
  } else if (key == "n") {
    const long n = parse_int(value, line, key);
    if (n < 0) throw ConfigError("line " + std::to_string(line) + ": n must be >= 0");
    cfg.state.n = static_cast<int>(n);
  } else if (key == "eps") {
    if (value == "0") {
      cfg.state.eps_mod = 0.0;
      cfg.state.eps_phase = 0.0;
    } else if (value == "1") {
      cfg.state.eps_mod = 1.0;
      cfg.state.eps_phase = 0.0;
    } else if (value == "-1") {
      cfg.state.eps_mod = 1.0;
      cfg.state.eps_phase = std::numbers::pi_v<double>;
    } else if (value == "i") {
      cfg.state.eps_mod = 1.0;
      cfg.state.eps_phase = std::numbers::pi_v<double> / 2.0;
    } else {
      throw ConfigError("line " + std::to_string(line) +
                        ": eps must be one of 0, 1, -1, i (use eps_mod/eps_phase "
                        "for other superpositions)");
    }
  } else if (key == "eps_mod") {
    const double v = parse_double(value, line, key);
    if (v < 0.0) throw ConfigError("line " + std::to_string(line) + ": eps_mod must be >= 0");
    cfg.state.eps_mod = v;
  } else if (key == "eps_phase") {
    cfg.state.eps_phase = parse_double(value, line, key);
  } else if (key == "k") {
    const long k = parse_int(value, line, key);
    if (k < 1) throw ConfigError("line " + std::to_string(line) + ": k must be >= 1");
    cfg.model.k = static_cast<int>(k);
  } else if (key == "dim") {
    const long d = parse_int(value, line, key);
    if (d < 2) throw ConfigError("line " + std::to_string(line) + ": dim must be >= 2");
    cfg.dim = static_cast<Eigen::Index>(d);
  } else if (key == "tol") {
    const double v = parse_double(value, line, key);
    if (v <= 0.0) throw ConfigError("line " + std::to_string(line) + ": tol must be > 0");
    cfg.tail_tol = v;
  } else if (key == "sweep") {
    if (value == "time") cfg.sweep = SweepKind::Time;
    else if (value == "alpha") cfg.sweep = SweepKind::Alpha;
    else if (value == "wigner") cfg.sweep = SweepKind::Wigner;
    else
      throw ConfigError("line " + std::to_string(line) +
                        ": sweep must be time, alpha or wigner");
  } else if (key == "t_min") {
    cfg.t_min = parse_double(value, line, key);
  } else if (key == "t_max") {
    cfg.t_max = parse_double(value, line, key);
  } else if (key == "dt") {
    cfg.dt = parse_double(value, line, key);
  } else if (key == "alpha_min") {
    cfg.alpha_min = parse_double(value, line, key);
  } else if (key == "alpha_max") {
    cfg.alpha_max = parse_double(value, line, key);
  } else if (key == "dalpha") {
    cfg.dalpha = parse_double(value, line, key);
  } else if (key == "t_fixed") {
    cfg.t_fixed = parse_double(value, line, key);
  } else if (key == "wigner_t") {
    cfg.wigner_t = parse_double(value, line, key);
  } else if (key == "nx") {
    cfg.nx = static_cast<Eigen::Index>(parse_int(value, line, key));
  } else if (key == "np") {
    cfg.np = static_cast<Eigen::Index>(parse_int(value, line, key));
  } else if (key == "range") {
    cfg.range = parse_double(value, line, key);
  } else if (key == "threads") {
    const long t = parse_int(value, line, key);
    if (t < 1) throw ConfigError("line " + std::to_string(line) + ": threads must be >= 1");
    cfg.threads = static_cast<unsigned>(t);
  } else if (key == "observables") {
    cfg.observables.clear();
    for (const auto piece : detail::split_list(value))
      cfg.observables.insert(detail::parse_observable(piece, line));
  } else if (key == "pnd_times") {
    cfg.pnd_times.clear();
    for (const auto piece : detail::split_list(value))
      cfg.pnd_times.push_back(parse_double(piece, line, key));
  } else {
    throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                      std::string(key) + "'");
  }
}

// Semantic validation after all entries (file plus overrides) are applied.
inline void validate_config(const ScenarioConfig& cfg) {
  if (cfg.observables.empty()) throw ConfigError("config requests no observables");
  switch (cfg.sweep) {
    case SweepKind::Time:
      if (!std::isnan(cfg.t_max) && !(cfg.t_min <= cfg.t_max))
        throw ConfigError("time sweep bounds out of order");
      if (!(cfg.dt > 0.0)) throw ConfigError("time sweep requires dt > 0");
      for (Observable obs : cfg.observables)
        if (obs == Observable::Wigner)
          throw ConfigError("wigner observable requires sweep=wigner");
      break;
    case SweepKind::Alpha:
      if (!(cfg.alpha_min <= cfg.alpha_max))
        throw ConfigError("alpha sweep bounds out of order");
      if (!(cfg.dalpha > 0.0)) throw ConfigError("alpha sweep requires dalpha > 0");
      for (Observable obs : cfg.observables)
        if (obs != Observable::MandelQ && obs != Observable::Squeezing)
          throw ConfigError("alpha sweeps support only mandel_q and squeezing");
      break;
    case SweepKind::Wigner:
      if (cfg.observables != std::set<Observable>{Observable::Wigner})
        throw ConfigError("wigner sweeps support exactly the wigner observable");
      if (cfg.nx < 2 || cfg.np < 2) throw ConfigError("wigner grid needs nx, np >= 2");
      break;
  }
  if (cfg.observables.contains(Observable::PndT) && cfg.pnd_times.empty())
    throw ConfigError("pnd_t requires pnd_times");
  if (cfg.observables.contains(Observable::PndTApprox) && cfg.model.k != 2)
    throw ConfigError("pnd_t_approx is the two-photon quarter-revival form; requires k=2");
}

inline ScenarioConfig parse_config_text(std::string_view text) {
  ScenarioConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
      apply_config_entry(cfg, detail::trim(line.substr(0, eq)),
                         detail::trim(line.substr(eq + 1)), line_no);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return cfg;
}

inline ScenarioConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace detail {

inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::string_view header) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
    out_ << header << '\n';
  }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ << ',';
      out_ << format_g12(v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

// Coefficients at the configured dimension; the auto-sized path doubles on
// tail failure per the truncation design, an explicit dim fails outright.
inline Eigen::VectorXcd scenario_coefficients(const ScenarioConfig& cfg,
                                              const SuperpositionParams& state,
                                              Eigen::Index& dim_out) {
  if (cfg.dim) {
    dim_out = *cfg.dim;
    Eigen::VectorXcd c = coefficients(state, dim_out);
    const double tail = tail_mass(c);
    if (tail >= cfg.tail_tol)
      throw TruncationError(tail, cfg.tail_tol, static_cast<std::size_t>(dim_out));
    return c;
  }
  Eigen::Index dim = suggest_dim(state, cfg.model.k);
  for (int attempt = 0;; ++attempt) {
    Eigen::VectorXcd c = coefficients(state, dim);
    const double tail = tail_mass(c);
    if (tail < cfg.tail_tol) {
      dim_out = dim;
      return c;
    }
    if (attempt >= 3) throw TruncationError(tail, cfg.tail_tol, static_cast<std::size_t>(dim));
    dim *= 2;
  }
}

inline std::vector<double> time_grid(const ScenarioConfig& cfg, double t_max) {
  const auto count =
      static_cast<std::size_t>(std::floor((t_max - cfg.t_min) / cfg.dt + 1e-9)) + 1;
  std::vector<double> ts(count);
  for (std::size_t i = 0; i < count; ++i) ts[i] = cfg.t_min + cfg.dt * static_cast<double>(i);
  return ts;
}

inline void run_time_sweep(const ScenarioConfig& cfg,
                           const std::filesystem::path& out_dir, std::string_view stem) {
  Eigen::Index dim = 0;
  const Eigen::VectorXcd c = scenario_coefficients(cfg, cfg.state, dim);
  const Eigen::VectorXd probs = c.cwiseAbs2();
  double t_max = cfg.t_max;
  if (std::isnan(t_max)) {
    if (cfg.model.k == 1) {
      double mean = 0.0;
      for (Eigen::Index m = 0; m < probs.size(); ++m)
        mean += static_cast<double>(m) * probs[m];
      t_max = 4.0 * std::numbers::pi_v<double> * std::sqrt(std::max(mean, 1.0));
    } else {
      t_max = 4.0 * std::numbers::pi_v<double>;
    }
    if (!(cfg.t_min <= t_max)) throw ConfigError("time sweep bounds out of order");
  }
  const std::vector<double> ts = time_grid(cfg, t_max);

  const auto path = [&](Observable obs) {
    return out_dir / (std::string(stem) + "_" + observable_stem(obs) + ".csv");
  };

  if (cfg.observables.contains(Observable::Pnd)) {
    CsvWriter csv(path(Observable::Pnd), "m,P");
    for (Eigen::Index m = 0; m < probs.size(); ++m)
      csv.row({static_cast<double>(m), probs[m]});
  }

  if (cfg.observables.contains(Observable::Inversion)) {
    std::vector<double> vals(ts.size());
    parallel_for_index(ts.size(), cfg.threads, [&](std::size_t i) {
      vals[i] = atomic_inversion(probs, cfg.model, ts[i]);
    });
    CsvWriter csv(path(Observable::Inversion), "T,sigma_z");
    for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], vals[i]});
  }

  if (cfg.observables.contains(Observable::AsymptoticInversion)) {
    double mean = 0.0;
    for (Eigen::Index m = 0; m < probs.size(); ++m) mean += static_cast<double>(m) * probs[m];
    const HarmonicApproxParams eta =
        cfg.model.k == 2 ? two_photon_params() : harmonic_params(mean);
    CsvWriter csv(path(Observable::AsymptoticInversion), "T,sigma_z_approx");
    for (double t : ts)
      csv.row({t, inversion_asymptotic(t, cfg.state.alpha, cfg.state.eps(), eta)});
  }

  const bool need_rho = cfg.observables.contains(Observable::Purity) ||
                        cfg.observables.contains(Observable::MandelQ) ||
                        cfg.observables.contains(Observable::Squeezing);
  if (need_rho) {
    struct Row {
      double purity = 0.0, q = 0.0, f = 0.0, s = 0.0;
    };
    std::vector<Row> rows(ts.size());
    const bool want_p = cfg.observables.contains(Observable::Purity);
    const bool want_q = cfg.observables.contains(Observable::MandelQ);
    const bool want_s = cfg.observables.contains(Observable::Squeezing);
    parallel_for_index(ts.size(), cfg.threads, [&](std::size_t i) {
      const JointState psi = evolve(c, cfg.model, ts[i], cfg.tail_tol);
      const FieldDensityMatrix rho = reduced_field_dm(psi);
      if (want_p) rows[i].purity = purity(rho);
      if (want_q) rows[i].q = mandel_q(rho);
      if (want_s) {
        const QuadratureReport rep = squeezing_factors(rho);
        rows[i].f = rep.F;
        rows[i].s = rep.S;
      }
    });
    if (want_p) {
      CsvWriter csv(path(Observable::Purity), "T,Tf");
      for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], rows[i].purity});
    }
    if (want_q) {
      CsvWriter csv(path(Observable::MandelQ), "T,Q");
      for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], rows[i].q});
    }
    if (want_s) {
      CsvWriter csv(path(Observable::Squeezing), "T,F,S");
      for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], rows[i].f, rows[i].s});
    }
  }

  if (cfg.observables.contains(Observable::PndT)) {
    CsvWriter csv(path(Observable::PndT), "T,m,P");
    for (double t : cfg.pnd_times) {
      const Eigen::VectorXd pt = photon_distribution_t(probs, cfg.model, t);
      for (Eigen::Index m = 0; m < pt.size(); ++m)
        csv.row({t, static_cast<double>(m), pt[m]});
    }
  }

  if (cfg.observables.contains(Observable::PndTApprox)) {
    const QuarterRevivalState approx = quarter_revival_state(c);
    const Eigen::VectorXd pa = approx.field.cwiseAbs2();
    CsvWriter csv(path(Observable::PndTApprox), "T,m,P");
    for (double t : cfg.pnd_times)
      for (Eigen::Index m = 0; m < pa.size(); ++m)
        csv.row({t, static_cast<double>(m), pa[m]});
  }
}

inline void run_alpha_sweep(const ScenarioConfig& cfg,
                            const std::filesystem::path& out_dir, std::string_view stem) {
  std::vector<double> alphas;
  for (double a = cfg.alpha_min; a <= cfg.alpha_max + 0.5 * cfg.dalpha; a += cfg.dalpha)
    alphas.push_back(a);

  struct Row {
    double q = 0.0, f = 0.0, s = 0.0;
  };
  std::vector<Row> rows(alphas.size());
  const bool want_q = cfg.observables.contains(Observable::MandelQ);
  const bool want_s = cfg.observables.contains(Observable::Squeezing);
  parallel_for_index(alphas.size(), cfg.threads, [&](std::size_t i) {
    SuperpositionParams state = cfg.state;
    state.alpha = alphas[i];
    Eigen::Index dim = 0;
    const Eigen::VectorXcd c = scenario_coefficients(cfg, state, dim);
    const JointState psi = evolve(c, cfg.model, cfg.t_fixed, cfg.tail_tol);
    const FieldDensityMatrix rho = reduced_field_dm(psi);
    if (want_q) rows[i].q = mandel_q(rho);
    if (want_s) {
      const QuadratureReport rep = squeezing_factors(rho);
      rows[i].f = rep.F;
      rows[i].s = rep.S;
    }
  });

  if (want_q) {
    CsvWriter csv(out_dir / (std::string(stem) + "_mandel.csv"), "alpha,Q");
    for (std::size_t i = 0; i < alphas.size(); ++i) csv.row({alphas[i], rows[i].q});
  }
  if (want_s) {
    CsvWriter csv(out_dir / (std::string(stem) + "_squeezing.csv"), "alpha,F,S");
    for (std::size_t i = 0; i < alphas.size(); ++i)
      csv.row({alphas[i], rows[i].f, rows[i].s});
  }
}

inline void run_wigner_sweep(const ScenarioConfig& cfg,
                             const std::filesystem::path& out_dir, std::string_view stem) {
  Eigen::Index dim = 0;
  const Eigen::VectorXcd c = scenario_coefficients(cfg, cfg.state, dim);
  const JointState psi = evolve(c, cfg.model, cfg.wigner_t, cfg.tail_tol);
  const double range = cfg.range > 0.0 ? cfg.range : std::abs(cfg.state.beta()) + 6.0;
  const WignerGrid grid =
      wigner_grid(psi, -range, range, -range, range, cfg.nx, cfg.np, cfg.threads);
  CsvWriter csv(out_dir / (std::string(stem) + "_wigner.csv"), "x,p,W");
  for (Eigen::Index ix = 0; ix < grid.x_axis.size(); ++ix)
    for (Eigen::Index ip = 0; ip < grid.p_axis.size(); ++ip)
      csv.row({grid.x_axis[ix], grid.p_axis[ip], grid.values(ix, ip)});
}

}  // namespace detail

// Runs one scenario, writing one CSV per observable named
// <out_dir>/<stem>_<observable>.csv. Identical config and build produce
// byte-identical files.
inline void run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                         std::string_view stem) {
  validate_config(cfg);
  std::filesystem::create_directories(out_dir);
  switch (cfg.sweep) {
    case SweepKind::Time: detail::run_time_sweep(cfg, out_dir, stem); break;
    case SweepKind::Alpha: detail::run_alpha_sweep(cfg, out_dir, stem); break;
    case SweepKind::Wigner: detail::run_wigner_sweep(cfg, out_dir, stem); break;
  }
}

struct PresetScenario {
  std::string stem;
  ScenarioConfig config;
};

// Named scenario bundles so sweeps can be reproduced without hand-written
// configs; each bundle may expand to several variants.
inline std::vector<PresetScenario> preset_scenarios(std::string_view name) {
  const double pi = std::numbers::pi_v<double>;
  const auto state = [](double alpha, double r, int n, Complex eps) {
    return SuperpositionParams::with_eps(alpha, r, n, eps);
  };
  const Complex eps_i{0.0, 1.0};
  const Complex eps_even{1.0, 0.0};
  const Complex eps_odd{-1.0, 0.0};
  const Complex eps_none{0.0, 0.0};

  std::vector<PresetScenario> out;
  const auto time_cfg = [&](SuperpositionParams s, int k, double t_max, double dt,
                            std::set<Observable> obs) {
    ScenarioConfig cfg;
    cfg.state = s;
    cfg.model.k = k;
    cfg.sweep = SweepKind::Time;
    cfg.t_min = 0.0;
    cfg.t_max = t_max;
    cfg.dt = dt;
    cfg.observables = std::move(obs);
    return cfg;
  };

  if (name == "fig1") {
    for (int n : {0, 1, 2, 3})
      out.push_back({"fig1_n" + std::to_string(n),
                     time_cfg(state(5.0, 0.0, n, eps_i), 1, 50.0, 0.02,
                              {Observable::Inversion, Observable::Pnd})});
    out.push_back({"fig1_even", time_cfg(state(5.0, 0.0, 1, eps_even), 1, 50.0, 0.02,
                                         {Observable::Inversion, Observable::Pnd})});
  } else if (name == "fig2") {
    out.push_back({"fig2", time_cfg(state(16.0, 0.0, 1, eps_even), 1, 202.0, 0.02,
                                    {Observable::Inversion,
                                     Observable::AsymptoticInversion})});
  } else if (name == "fig3") {
    out.push_back({"fig3_even", time_cfg(state(5.0, 0.0, 1, eps_even), 2, 4.0 * pi, 0.01,
                                         {Observable::Inversion})});
    out.push_back({"fig3_odd", time_cfg(state(5.0, 0.0, 1, eps_odd), 2, 4.0 * pi, 0.01,
                                        {Observable::Inversion})});
  } else if (name == "fig4") {
    out.push_back({"fig4_r0", time_cfg(state(3.0, 0.0, 1, eps_i), 1, 30.0, 0.02,
                                       {Observable::Inversion, Observable::Pnd})});
    out.push_back({"fig4_r12", time_cfg(state(3.0, 1.2, 1, eps_i), 1, 30.0, 0.02,
                                        {Observable::Inversion, Observable::Pnd})});
  } else if (name == "fig5") {
    ScenarioConfig cfg = time_cfg(state(7.0, 0.0, 1, eps_none), 1, 50.0, 0.05,
                                  {Observable::PndT});
    cfg.pnd_times = {22.21, 20.64};
    out.push_back({"fig5", cfg});
  } else if (name == "fig6") {
    ScenarioConfig cfg = time_cfg(state(7.0, 0.0, 1, eps_none), 2, pi, 0.01,
                                  {Observable::PndT, Observable::PndTApprox});
    cfg.pnd_times = {0.25 * pi};
    out.push_back({"fig6", cfg});
  } else if (name == "fig7a") {
    for (int n : {0, 1})
      out.push_back({"fig7a_n" + std::to_string(n),
                     time_cfg(state(7.0, 0.0, n, eps_none), 1, 50.0, 0.02,
                              {Observable::Purity})});
  } else if (name == "fig7b") {
    for (int k : {2, 3, 4})
      out.push_back({"fig7b_k" + std::to_string(k),
                     time_cfg(state(7.0, 0.0, 1, eps_none), k, 2.0 * pi, 0.005,
                              {Observable::Purity})});
  } else if (name == "fig8a" || name == "fig8b") {
    const SuperpositionParams base = name == "fig8a" ? state(0.0, 0.0, 1, eps_none)
                                                     : state(0.0, 0.0, 0, eps_even);
    const auto alpha_cfg = [&](int k, double t_fixed) {
      ScenarioConfig cfg;
      cfg.state = base;
      cfg.model.k = k;
      cfg.sweep = SweepKind::Alpha;
      cfg.alpha_min = 0.1;
      cfg.alpha_max = 6.0;
      cfg.dalpha = 0.05;
      cfg.t_fixed = t_fixed;
      cfg.observables = {Observable::MandelQ};
      return cfg;
    };
    for (int k : {1, 2, 3, 4})
      out.push_back({std::string(name) + "_k" + std::to_string(k), alpha_cfg(k, 1.578)});
    if (name == "fig8a") out.push_back({"fig8a_t0", alpha_cfg(1, 0.0)});
  } else if (name == "fig9a") {
    const std::vector<std::pair<int, double>> cases = {
        {1, 12.65}, {2, 4.5}, {3, 7.7}, {4, 9.6}};
    for (auto [k, t] : cases) {
      ScenarioConfig cfg;
      cfg.state = state(0.0, 0.0, 0, eps_even);
      cfg.model.k = k;
      cfg.sweep = SweepKind::Alpha;
      cfg.alpha_min = 0.1;
      cfg.alpha_max = 6.0;
      cfg.dalpha = 0.05;
      cfg.t_fixed = t;
      cfg.observables = {Observable::Squeezing};
      out.push_back({"fig9a_k" + std::to_string(k), cfg});
    }
  } else if (name == "fig9b") {
    out.push_back({"fig9b", time_cfg(state(6.0, 0.0, 0, eps_even), 3, 40.0, 0.002,
                                     {Observable::Squeezing})});
    out.push_back({"fig9b_inset", time_cfg(state(6.0, 0.0, 0, eps_even), 1, 120.0, 0.01,
                                           {Observable::Inversion})});
  } else if (name == "fig10a" || name == "fig10b") {
    ScenarioConfig cfg;
    cfg.state = state(3.0, 0.0, 1, eps_even);
    cfg.model.k = 1;
    cfg.sweep = SweepKind::Wigner;
    cfg.wigner_t = name == "fig10a" ? 4.599998 : 12.60001;
    cfg.nx = 201;
    cfg.np = 201;
    cfg.range = 9.0;
    cfg.observables = {Observable::Wigner};
    out.push_back({std::string(name), cfg});
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return out;
}

inline std::vector<std::string> preset_names() {
  return {"fig1", "fig2",  "fig3",  "fig4",  "fig5",  "fig6",   "fig7a",
          "fig7b", "fig8a", "fig8b", "fig9a", "fig9b", "fig10a", "fig10b"};
}

}  // namespace mpjcm

#endif  // MPJCM_SCENARIO_HPP
