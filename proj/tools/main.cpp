#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_io.hpp"

using namespace elastosurf::cli;

int main(int argc, char** argv) {
  CLI::App app{"Residually stressed spherical shells with eigenstrained elastic surfaces"};
  app.fallthrough();
  app.set_version_flag("--version", std::string(es_version()));

  std::optional<std::string> config_path, out_path, format;
  std::vector<double> bracket;
  std::optional<int> scan;
  std::optional<double> tol;
  app.add_option("--config", config_path, "Scenario file (TOML subset)");
  app.add_option("--out", out_path, "Write the payload here instead of stdout");
  app.add_option("--format", format, "Payload format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--bracket", bracket, "Root search bracket lo,hi")->delimiter(',')->expected(2);
  app.add_option("--scan", scan, "Number of scan samples")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto* relax = app.add_subcommand("relax", "Zero-pressure equilibrium");
  auto* solve = app.add_subcommand("solve", "Equilibrium at a given outer pressure");
  double p_hat_o = 0.0;
  solve->add_option("--p-hat-o", p_hat_o, "Outer pressure over mu")->required();
  auto* sweep = app.add_subcommand("sweep", "Pressure sweep relative to the relaxed state");
  std::optional<double> from, to;
  std::optional<int> count;
  sweep->add_option("--from", from, "First p_hat_o");
  sweep->add_option("--to", to, "Last p_hat_o");
  sweep->add_option("--count", count, "Number of grid points (>= 2)");
  auto* profile = app.add_subcommand("stress-profile", "Radial and hoop stress through the shell");
  std::optional<int> samples;
  profile->add_option("--samples", samples, "Number of radii (>= 2)");
  auto* geometry = app.add_subcommand("geometry-check", "Gauss, Codazzi and Nanson residuals on fixtures");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  const auto start = std::chrono::steady_clock::now();
  ScenarioConfig cfg;
  try {
    if (config_path) {
      cfg = parse_config(read_file(*config_path));
    } else {
      cfg = default_config();
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << (config_path ? *config_path + ": " : "") << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }

  if (*relax) cfg.mode = Mode::relax;
  if (*solve) {
    cfg.mode = Mode::solve;
    cfg.nd.p_hat_o = p_hat_o;
    if (cfg.dimensional) cfg.dim.p_o = p_hat_o * cfg.dim.mu;
  }
  if (*sweep) cfg.mode = Mode::sweep;
  if (*profile) cfg.mode = Mode::stress_profile;
  if (*geometry) cfg.mode = Mode::geometry_check;
  if (from) cfg.sweep.from = from;
  if (to) cfg.sweep.to = to;
  if (count) cfg.sweep.count = count;
  if (samples) cfg.samples = *samples;
  if (out_path) cfg.out_path = out_path;
  if (format) cfg.format = *format == "json" ? Format::json : Format::csv;
  if (bracket.size() == 2) {
    cfg.solver.bracket_lo = bracket[0];
    cfg.solver.bracket_hi = bracket[1];
  }
  if (scan) cfg.solver.scan_points = *scan;
  if (tol) cfg.solver.tolerance = *tol;

  const RunResult result = run(cfg);
  for (const auto& line : result.diagnostics) std::cerr << line << "\n";
  if (result.exit_code != kExitOk) return result.exit_code;

  try {
    if (cfg.out_path) {
      write_file(*cfg.out_path, result.payload);
    } else {
      std::cout << result.payload;
      std::cout.flush();
      if (!std::cout) throw IoError("failed writing to stdout");
    }
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }

  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "wall-clock: %.6f s\n", wall.count());
  return kExitOk;
}
