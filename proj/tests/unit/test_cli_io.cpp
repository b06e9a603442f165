#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_io.hpp"
#include "json.hpp"

using namespace elastosurf::cli;

namespace {

const char* kDryRelax = R"(# minimal dry relaxation
mode = "relax"

[problem.nondimensional]
alpha = 3
xi = 1
eta = 2
omega_s = 0.2
)";

std::string expect_config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return "";
}

ScenarioConfig nd_config(const std::string& body, Mode mode) {
  ScenarioConfig c = parse_config("[problem.nondimensional]\n" + body);
  c.mode = mode;
  return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST(ParseConfig, MinimalDryRelax) {
  const ScenarioConfig c = parse_config(kDryRelax);
  ASSERT_TRUE(c.mode.has_value());
  EXPECT_EQ(*c.mode, Mode::relax);
  EXPECT_TRUE(c.has_problem);
  EXPECT_FALSE(c.dimensional);
  EXPECT_EQ(c.nd.alpha, 3.0);
  EXPECT_EQ(c.nd.xi, 1.0);
  EXPECT_EQ(c.nd.eta, 2.0);
  EXPECT_EQ(c.nd.omega_s, 0.2);
  EXPECT_EQ(c.nd.wet, 0);
  EXPECT_EQ(c.solver.scan_points, 4000);
  EXPECT_EQ(c.solver.bracket_lo, 0.2);
  EXPECT_EQ(c.format, Format::csv);
}

TEST(ParseConfig, BothBlocksRejected) {
  const std::string msg = expect_config_error("[problem]\nR_i = 1\nR_o = 2\nmu = 1\n[problem.nondimensional]\nalpha = 2\n");
  EXPECT_NE(msg.find("both"), std::string::npos) << msg;
}

TEST(ParseConfig, NeitherBlockRejected) {
  EXPECT_NE(expect_config_error("mode = \"relax\"\n").find("problem"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem]\nomega_s = 0.1\n").find("problem"), std::string::npos);
}

TEST(ParseConfig, DimensionalBlockIsNondimensionalized) {
  // alpha = 3 um / 1 um, xi = 1 mN/m / (1 um * 1 kPa), eta = 2 mN/m / (1 um * 1 kPa),
  // eta_f = 20 kPa / 1 kPa, p_hat_o = 300 Pa / 1 kPa.
  const ScenarioConfig c = parse_config(R"([problem]
R_i = 1e-6
R_o = 3e-6
mu = 1e3
mu_s = 1e-3
kappa_s = 2e-3
kappa_f = 2e4
p_o = 300
omega_s = 0.1
omega_l = 0.05
wet = true
)");
  EXPECT_TRUE(c.dimensional);
  EXPECT_NEAR(c.nd.alpha, 3.0, 1e-15);
  EXPECT_NEAR(c.nd.xi, 1.0, 1e-15);
  EXPECT_NEAR(c.nd.eta, 2.0, 1e-15);
  EXPECT_NEAR(c.nd.eta_f, 20.0, 1e-15);
  EXPECT_NEAR(c.nd.p_hat_o, 0.3, 1e-15);
  EXPECT_EQ(c.nd.omega_s, 0.1);
  EXPECT_EQ(c.nd.omega_l, 0.05);
  EXPECT_EQ(c.nd.wet, 1);
}

TEST(ParseConfig, ErrorsNameKeyPath) {
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\nbeta = 1\n").find("problem.nondimensional.beta"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = three\n").find("problem.nondimensional.alpha"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nxi = 1\n").find("problem.nondimensional.alpha: missing"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem]\nR_i = 1\nmu = 1\n").find("problem.R_o"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\nwet = true\n").find("eta_f"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\nwet = 1\n").find("problem.nondimensional.wet"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\nalpha = 4\n").find("duplicate"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\n[plots]\n").find("[plots]"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem]\nomega_s = 0.1\n[problem.nondimensional]\nalpha = 3\nomega_s = 0.2\n")
                .find("problem.nondimensional.omega_s"),
            std::string::npos);
  EXPECT_NE(expect_config_error("mode = \"fly\"\n[problem.nondimensional]\nalpha = 3\n").find("mode"), std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\n[solver]\nbracket = [1]\n").find("solver.bracket"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 3\n[sweep]\ncount = 2.5\n").find("sweep.count"),
            std::string::npos);
  EXPECT_NE(expect_config_error("[problem.nondimensional]\nalpha = 0.5\n").find("alpha"), std::string::npos);
}

TEST(ParseConfig, SharedKeysInProblemSection) {
  const ScenarioConfig c = parse_config("[problem]\nomega_s = 0.3\n[problem.nondimensional]\nalpha = 2\n");
  EXPECT_FALSE(c.dimensional);
  EXPECT_EQ(c.nd.omega_s, 0.3);
}

TEST(ParseConfig, SolverSweepOutputSections) {
  const ScenarioConfig c = parse_config(R"(
[problem.nondimensional]
alpha = 1.5  # thick shell
[solver]
bracket = [0.5, 2.0]
scan = 300
tol = 1e-13
fd_step = 1e-3
[sweep]
from = 0
to = 0.3
count = 31
[output]
path = "out.csv"
format = "json"
samples = 7
)");
  EXPECT_EQ(c.solver.bracket_lo, 0.5);
  EXPECT_EQ(c.solver.bracket_hi, 2.0);
  EXPECT_EQ(c.solver.scan_points, 300);
  EXPECT_EQ(c.solver.tolerance, 1e-13);
  EXPECT_EQ(c.fd_step, 1e-3);
  EXPECT_EQ(*c.sweep.count, 31);
  EXPECT_EQ(*c.out_path, "out.csv");
  EXPECT_EQ(c.format, Format::json);
  EXPECT_EQ(c.samples, 7);
}

TEST(Finalize, SweepNeedsGrid) {
  ScenarioConfig c = nd_config("alpha = 2\n", Mode::sweep);
  EXPECT_THROW(finalize(c), ConfigError);
  c.sweep = {0.0, 0.3, 1};
  try {
    finalize(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("sweep.count"), std::string::npos);
  }
  c.sweep.count = 2;
  EXPECT_NO_THROW(finalize(c));
}

TEST(Finalize, MissingModeOrProblem) {
  ScenarioConfig c = parse_config("[problem.nondimensional]\nalpha = 2\n");
  EXPECT_THROW(finalize(c), ConfigError);
  ScenarioConfig g = default_config();
  g.mode = Mode::geometry_check;
  EXPECT_NO_THROW(finalize(g));
  g.mode = Mode::relax;
  EXPECT_THROW(finalize(g), ConfigError);
}

TEST(Run, TrivialRelaxJson) {
  ScenarioConfig c = nd_config("alpha = 3\n", Mode::relax);
  c.format = Format::json;
  const RunResult r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.payload.find("\"x\": 1.0000000000000000e+00"), std::string::npos) << r.payload;
  EXPECT_NE(r.payload.find("\"mode\": \"relax\""), std::string::npos);
  EXPECT_EQ(r.payload.find("wall"), std::string::npos);
}

TEST(Run, SweepCsvColumns) {
  ScenarioConfig c = nd_config("alpha = 1.5\nxi = 0.1\neta = 0.2\nomega_s = 0.1\n", Mode::sweep);
  c.sweep = {0.0, 0.3, 4};
  const RunResult r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto lines = split(r.payload, '\n');
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "p_hat_o,x,lambda_o,strain,gamma0_over_mu_Ri,e_c,p_f_over_mu,residual");
  const auto first = split(lines[1], ',');
  ASSERT_EQ(first.size(), 8u);
  EXPECT_EQ(std::strtod(first[3].c_str(), nullptr), 0.0);
  const auto last = split(lines[4], ',');
  EXPECT_NEAR(std::strtod(last[3].c_str(), nullptr), -0.014736, 1e-6);
}

TEST(Run, ProfileAndSolutionHeaders) {
  ScenarioConfig c = nd_config("alpha = 3\nxi = 1\neta = 2\nomega_s = 0.2\n", Mode::stress_profile);
  c.samples = 5;
  RunResult r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  auto lines = split(r.payload, '\n');
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "radius_ratio,sigma_rr_over_mu,sigma_tt_over_mu,p_over_mu");
  EXPECT_EQ(lines[5].substr(0, lines[5].find(',', 24)), "3.0000000000000000e+00,0.0000000000000000e+00");

  c.mode = Mode::solve;
  c.nd.p_hat_o = 0.5;
  r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  lines = split(r.payload, '\n');
  EXPECT_EQ(lines[0], "x,lambda_o,residual,gamma0_over_mu_Ri,p_f_over_mu,sigma_i_over_mu,j0,e_c,e_c_hat");
}

TEST(Run, GeometryCheckBelowThreshold) {
  ScenarioConfig c = default_config();
  c.mode = Mode::geometry_check;
  const RunResult r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto lines = split(r.payload, '\n');
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], "fixture,check,residual,fd_step");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto f = split(lines[k], ',');
    ASSERT_EQ(f.size(), 4u);
    EXPECT_LT(std::fabs(std::strtod(f[2].c_str(), nullptr)), 1e-6) << lines[k];
  }
}

TEST(Run, BracketingFailureReportsScan) {
  ScenarioConfig c = nd_config("alpha = 3\nxi = 1\neta = 2\nomega_s = 0.2\n", Mode::relax);
  c.solver.bracket_lo = 2.0;
  c.solver.bracket_hi = 5.0;
  c.solver.scan_points = 7;
  const RunResult r = run(c);
  EXPECT_EQ(r.exit_code, kExitBracketing);
  EXPECT_TRUE(r.payload.empty());
  ASSERT_EQ(r.diagnostics.size(), 9u);
  EXPECT_EQ(r.diagnostics[2].substr(0, 23), "2.0000000000000000e+00,");
}

TEST(Run, InvalidOverrideIsConfigError) {
  ScenarioConfig c = nd_config("alpha = 3\n", Mode::relax);
  c.solver.scan_points = 1;
  EXPECT_EQ(run(c).exit_code, kExitConfig);
  c.solver.scan_points = 100;
  c.nd.alpha = 1.0;
  EXPECT_EQ(run(c).exit_code, kExitConfig);
}

TEST(Determinism, IdenticalConfigsGiveIdenticalBytes) {
  const std::string text = R"([problem.nondimensional]
alpha = 3
eta_f = 20
omega_l = 0.05
wet = true
[sweep]
from = 0
to = 0.3
count = 11
)";
  for (Mode m : {Mode::relax, Mode::solve, Mode::sweep, Mode::stress_profile, Mode::geometry_check})
    for (Format f : {Format::csv, Format::json}) {
      ScenarioConfig a = parse_config(text), b = parse_config(text);
      a.mode = b.mode = m;
      a.format = b.format = f;
      const RunResult ra = run(a), rb = run(b);
      ASSERT_EQ(ra.exit_code, kExitOk) << to_string(m);
      EXPECT_EQ(ra.payload, rb.payload) << to_string(m);
      EXPECT_FALSE(ra.payload.empty());
    }
}

TEST(Json, EveryModeParsesAndMatchesCsv) {
  const std::string text = R"([problem.nondimensional]
alpha = 1.5
xi = 0.1
eta = 0.2
omega_s = 0.1
p_hat_o = 0.2
[sweep]
from = 0
to = 0.3
count = 7
)";
  for (Mode m : {Mode::relax, Mode::solve, Mode::sweep, Mode::stress_profile, Mode::geometry_check}) {
    ScenarioConfig c = parse_config(text);
    c.mode = m;
    c.format = Format::json;
    const RunResult r = run(c);
    ASSERT_EQ(r.exit_code, kExitOk);
    const auto doc = nlohmann::json::parse(r.payload);
    EXPECT_EQ(doc.at("artifact"), "elastosurf");
    EXPECT_EQ(doc.at("config").at("mode"), to_string(m));
    EXPECT_TRUE(doc.contains("result"));
    EXPECT_FALSE(doc.at("config").at("output").contains("path"));
  }

  ScenarioConfig c = parse_config(text);
  c.mode = Mode::sweep;
  const std::string csv = run(c).payload;
  c.format = Format::json;
  const auto rows = nlohmann::json::parse(run(c).payload).at("result").at("rows");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> names;
  std::istringstream header(line);
  for (std::string f; std::getline(header, f, ',');) names.push_back(f);
  std::size_t k = 0;
  for (; std::getline(in, line); ++k) {
    std::istringstream fields(line);
    std::size_t col = 0;
    for (std::string f; std::getline(fields, f, ','); ++col)
      EXPECT_EQ(std::strtod(f.c_str(), nullptr), rows.at(k).at(names.at(col)).get<double>()) << names[col];
  }
  EXPECT_EQ(k, 7u);
}

TEST(RoundTrip, SeventeenDigitsReparseExactly) {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> ex(-300, 300);
  for (int k = 0; k < 20000; ++k) {
    const double v = std::ldexp(mant(rng), ex(rng));
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  }
  for (double v : {0.1, 1.0 / 3.0, 0.849731204758898791, 5e-324, 1.7976931348623157e308})
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  EXPECT_EQ(format_number(0.1), "1.0000000000000001e-01");
}

TEST(RoundTrip, SweepPayloadReparses) {
  ScenarioConfig c = nd_config("alpha = 2\nxi = 0.5\neta = 0.5\nomega_s = 0.1\n", Mode::sweep);
  c.sweep = {-0.2, 0.4, 9};
  const RunResult r = run(c);
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto lines = split(r.payload, '\n');
  for (std::size_t k = 1; k < lines.size(); ++k)
    for (const auto& field : split(lines[k], ','))
      EXPECT_EQ(format_number(std::strtod(field.c_str(), nullptr)), field);
}

TEST(Files, ReadWriteErrors) {
  EXPECT_THROW(read_file("/nonexistent/dir/config.toml"), IoError);
  EXPECT_THROW(write_file("/nonexistent/dir/out.csv", "x\n"), IoError);
  const std::string path = ::testing::TempDir() + "elastosurf_cli_io_roundtrip.csv";
  write_file(path, "a,b\n1,2\n");
  EXPECT_EQ(read_file(path), "a,b\n1,2\n");
  std::remove(path.c_str());
}
