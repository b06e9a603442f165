// Scenario configuration, execution and deterministic CSV/JSON emission for
// the elastosurf command-line tool. Talks to the library only through the C API.
#ifndef ELASTOSURF_TOOLS_CLI_IO_HPP
#define ELASTOSURF_TOOLS_CLI_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elastosurf/elastosurf.h"

namespace elastosurf::cli {

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitBracketing = 3, kExitIo = 4, kExitSolver = 5 };

enum class Mode { relax, solve, sweep, stress_profile, geometry_check };
enum class Format { csv, json };

const char* to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

/// Raised for malformed or inconsistent configuration. The message starts
/// with the offending key path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> count;
};

struct ScenarioConfig {
  std::optional<Mode> mode;
  bool has_problem = false;
  bool dimensional = false;
  es_dimensional_params dim{};      // meaningful when dimensional
  es_nondimensional_params nd{};    // always filled once has_problem
  es_solver_options solver{};
  double fd_step = 1e-4;
  SweepSpec sweep;
  int samples = 50;
  std::optional<std::string> out_path;
  Format format = Format::csv;
};

/// Parses the TOML-style scenario file. Sections: [problem] (dimensional),
/// [problem.nondimensional], [solver], [sweep], [output]; an optional
/// top-level `mode`. Unknown keys, duplicate keys and both/neither parameter
/// blocks are rejected.
ScenarioConfig parse_config(const std::string& text);

/// Defaults only; used for geometry-check runs without a config file.
ScenarioConfig default_config();

/// Cross-field checks that depend on the final mode (after CLI overrides).
void finalize(ScenarioConfig& cfg);

/// Formats a double with 17 significant digits in scientific notation.
std::string format_number(double v);

struct RunResult {
  int exit_code = kExitOk;
  std::string payload;                 // CSV or JSON, deterministic
  std::vector<std::string> diagnostics;  // warnings and errors for stderr
};

/// Executes the scenario. Never throws for solver failures; they map onto
/// exit codes with diagnostics (bracketing failures include the scan table).
RunResult run(const ScenarioConfig& cfg);

/// Writes `payload` to `path`, throwing IoError on failure.
void write_file(const std::string& path, const std::string& payload);

/// Reads a whole file, throwing IoError on failure.
std::string read_file(const std::string& path);

}  // namespace elastosurf::cli

#endif  // ELASTOSURF_TOOLS_CLI_IO_HPP
