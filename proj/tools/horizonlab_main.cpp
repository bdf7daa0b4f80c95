// horizonlab command-line front end.
//
//   horizonlab fig1      --a 1 --out fig1.csv
//   horizonlab infall    --R0 1 --r0 2 --out eternal.csv
//   horizonlab infall    --R0 1 --tau-evap 100 --r0 3 --out evaporating.csv
//   horizonlab transform --a 1 < events.txt
//
// Flags override values from --config <file.json>. Exit codes: 0 success,
// 1 configuration or validation error, 2 numerical or I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "horizonlab/errors.hpp"
#include "horizonlab/scenario.hpp"

namespace {

using horizonlab::ScenarioConfig;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw horizonlab::ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct FlagValues {
  std::optional<double> a, r0, R0, k, tau_evap, rel_tol, abs_tol, epsilon_horizon, ur;
  std::optional<int> samples;
  std::optional<std::string> format, out, units;
  bool include_dtau = false;
  bool inverse = false;
  std::string config_path;

  void apply(ScenarioConfig& cfg) const {
    if (a) cfg.a = *a;
    if (r0) cfg.r0 = *r0;
    if (R0) cfg.R0 = *R0;
    if (k) {
      cfg.k = *k;
      cfg.submode = ScenarioConfig::SubMode::Evaporating;
    }
    if (tau_evap) {
      cfg.tau_evap = *tau_evap;
      cfg.submode = ScenarioConfig::SubMode::Evaporating;
    }
    if (rel_tol) cfg.integrator.rel_tol = *rel_tol;
    if (abs_tol) cfg.integrator.abs_tol = *abs_tol;
    if (epsilon_horizon) cfg.integrator.epsilon_horizon = *epsilon_horizon;
    if (ur) cfg.initial_ur = *ur;
    if (samples) cfg.sample_count = *samples;
    if (format) {
      if (*format == "csv") cfg.format = horizonlab::TableFormat::Csv;
      else if (*format == "json") cfg.format = horizonlab::TableFormat::Json;
      else throw horizonlab::ConfigError("format: expected csv or json");
    }
    if (units) {
      if (*units == "geometric") cfg.units = ScenarioConfig::Units::Geometric;
      else if (*units == "si") cfg.units = ScenarioConfig::Units::Si;
      else throw horizonlab::ConfigError("units: expected geometric or si");
    }
    if (out) cfg.output_path = *out;
    if (include_dtau) cfg.integrator.include_dtau_metric_terms = true;
    if (inverse) cfg.inverse_transform = true;
  }
};

void add_common_flags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--config", v.config_path, "JSON config file; flags override its values");
  cmd->add_option("--a", v.a, "proper acceleration of the fiducial observer");
  cmd->add_option("--r0", v.r0, "initial areal radius of the infaller");
  cmd->add_option("--R0", v.R0, "initial Schwarzschild radius");
  cmd->add_option("--k", v.k, "evaporation constant (implies evaporating)");
  cmd->add_option("--tau-evap", v.tau_evap, "evaporation time; calibrates k");
  cmd->add_option("--rel-tol", v.rel_tol, "integrator relative tolerance");
  cmd->add_option("--abs-tol", v.abs_tol, "integrator absolute tolerance");
  cmd->add_option("--epsilon-horizon", v.epsilon_horizon,
                  "exterior cutoff as fraction of R0");
  cmd->add_option("--ur", v.ur, "initial radial velocity dr/dlambda");
  cmd->add_option("--samples", v.samples, "output grid sample count");
  cmd->add_option("--format", v.format, "csv or json");
  cmd->add_option("--out", v.out, "output path (default stdout)");
  cmd->add_option("--units", v.units, "geometric or si");
  cmd->add_flag("--include-dtau-metric-terms", v.include_dtau,
                "keep the df/dtau pieces of the connection");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial free fall toward Rindler and Schwarzschild horizons"};
  app.require_subcommand(1);

  FlagValues flags;
  CLI::App* fig1 = app.add_subcommand("fig1", "accelerated-observer worldline geometry");
  CLI::App* infall = app.add_subcommand("infall", "radial infall trajectory table");
  CLI::App* transform =
      app.add_subcommand("transform", "stdin/stdout coordinate transform filter");
  add_common_flags(fig1, flags);
  add_common_flags(infall, flags);
  add_common_flags(transform, flags);
  transform->add_flag("--inverse", flags.inverse, "read (tau, chi), write (ct, x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    ScenarioConfig cfg;
    if (!flags.config_path.empty()) {
      cfg = horizonlab::load_scenario(read_file(flags.config_path));
    }
    if (fig1->parsed()) cfg.mode = ScenarioConfig::Mode::Fig1;
    if (infall->parsed()) cfg.mode = ScenarioConfig::Mode::Infall;
    if (transform->parsed()) cfg.mode = ScenarioConfig::Mode::Transform;
    flags.apply(cfg);
    cfg.validate_and_finalize();

    if (cfg.mode == ScenarioConfig::Mode::Transform) {
      horizonlab::run_transform(cfg, std::cin, std::cout);
      return 0;
    }
    const horizonlab::OutputTable table = cfg.mode == ScenarioConfig::Mode::Fig1
                                              ? horizonlab::run_fig1(cfg)
                                              : horizonlab::run_infall(cfg);
    horizonlab::emit_table(table, cfg.output_path, cfg.format);
    return 0;
  } catch (const horizonlab::ConfigError& e) {
    std::cerr << "horizonlab: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "horizonlab: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "horizonlab: " << e.what() << "\n";
    return 2;
  }
}
