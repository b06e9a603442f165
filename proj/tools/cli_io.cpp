#include "cli_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace elastosurf::cli {

namespace {

// -- config document ---------------------------------------------------------------

struct Value {
  enum Kind { number, boolean, string, array } kind = number;
  std::string raw;  // as written, for error messages
  double num = 0.0;
  bool flag = false;
  std::string text;
  std::vector<double> items;
};

struct Entry {
  std::string path;
  Value value;
  int line;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') quoted = !quoted;
    if (line[k] == '#' && !quoted) return line.substr(0, k);
  }
  return line;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno == 0 && std::isfinite(out);
}

std::string at_line(const std::string& path, int line) {
  return path + " (line " + std::to_string(line) + ")";
}

Value parse_value(const std::string& raw, const std::string& path, int line) {
  Value v;
  v.kind = Value::number;
  v.raw = raw;
  if (raw.empty()) throw ConfigError(at_line(path, line) + ": missing value");
  if (raw == "true" || raw == "false") {
    v.kind = Value::boolean;
    v.flag = raw == "true";
    return v;
  }
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') throw ConfigError(at_line(path, line) + ": unterminated string " + raw);
    v.kind = Value::string;
    v.text = raw.substr(1, raw.size() - 2);
    return v;
  }
  if (raw.front() == '[') {
    if (raw.back() != ']') throw ConfigError(at_line(path, line) + ": unterminated array " + raw);
    v.kind = Value::array;
    std::stringstream ss(raw.substr(1, raw.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      double d;
      if (!parse_double(trim(item), d))
        throw ConfigError(at_line(path, line) + ": non-numeric array element '" + trim(item) + "'");
      v.items.push_back(d);
    }
    return v;
  }
  if (!parse_double(raw, v.num)) throw ConfigError(at_line(path, line) + ": expected a number, got '" + raw + "'");
  return v;
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"", {"mode"}},
      {"problem", {"R_i", "R_o", "mu", "mu_s", "kappa_s", "kappa_f", "p_o", "omega_s", "omega_l", "wet"}},
      {"problem.nondimensional", {"alpha", "xi", "eta", "eta_f", "p_hat_o", "omega_s", "omega_l", "wet"}},
      {"solver", {"bracket", "scan", "tol", "fd_step"}},
      {"sweep", {"from", "to", "count"}},
      {"output", {"path", "format", "samples"}},
  };
  return s;
}

const std::set<std::string>& dimensional_keys() {
  static const std::set<std::string> k = {"R_i", "R_o", "mu", "mu_s", "kappa_s", "kappa_f", "p_o"};
  return k;
}

struct Document {
  std::vector<Entry> entries;
  std::set<std::string> sections;

  const Entry* find(const std::string& path) const {
    for (const auto& e : entries)
      if (e.path == path) return &e;
    return nullptr;
  }
};

Document tokenize(const std::string& text) {
  Document doc;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!schema().count(section) || section.empty())
        throw ConfigError("[" + section + "] (line " + std::to_string(lineno) + "): unknown section");
      if (!doc.sections.insert(section).second)
        throw ConfigError("[" + section + "] (line " + std::to_string(lineno) + "): duplicate section");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string path = section.empty() ? key : section + "." + key;
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!schema().at(section).count(key)) throw ConfigError(at_line(path, lineno) + ": unknown key");
    if (doc.find(path)) throw ConfigError(at_line(path, lineno) + ": duplicate key");
    doc.entries.push_back({path, parse_value(trim(line.substr(eq + 1)), path, lineno), lineno});
  }
  return doc;
}

double get_number(const Entry& e) {
  if (e.value.kind != Value::number)
    throw ConfigError(at_line(e.path, e.line) + ": expected a number, got '" + e.value.raw + "'");
  return e.value.num;
}

int get_int(const Entry& e) {
  const double d = get_number(e);
  if (d != std::floor(d) || std::fabs(d) > 1e9)
    throw ConfigError(at_line(e.path, e.line) + ": expected an integer, got '" + e.value.raw + "'");
  return static_cast<int>(d);
}

bool get_bool(const Entry& e) {
  if (e.value.kind != Value::boolean)
    throw ConfigError(at_line(e.path, e.line) + ": expected true or false, got '" + e.value.raw + "'");
  return e.value.flag;
}

std::string get_string(const Entry& e) {
  if (e.value.kind != Value::string)
    throw ConfigError(at_line(e.path, e.line) + ": expected a quoted string, got '" + e.value.raw + "'");
  return e.value.text;
}

// -- emission --------------------------------------------------------------------------

class Json {
 public:
  Json& open(const char* key, char bracket) {
    prefix(key);
    out_ += bracket;
    first_.push_back(true);
    return *this;
  }
  Json& close(char bracket) {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) newline();
    out_ += bracket;
    return *this;
  }
  Json& num(const char* key, double v) {
    prefix(key);
    out_ += std::isfinite(v) ? format_number(v) : "null";
    return *this;
  }
  Json& integer(const char* key, long long v) {
    prefix(key);
    out_ += std::to_string(v);
    return *this;
  }
  Json& boolean(const char* key, bool v) {
    prefix(key);
    out_ += v ? "true" : "false";
    return *this;
  }
  Json& str(const char* key, const std::string& v) {
    prefix(key);
    out_ += quote(v);
    return *this;
  }
  std::string done() { return out_ + "\n"; }

 private:
  static std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') {
        q += '\\';
        q += c;
      } else if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\u%04x", c);
        q += buf;
      } else {
        q += c;
      }
    }
    return q + "\"";
  }
  void newline() {
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
  }
  void prefix(const char* key) {
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
      newline();
    }
    if (key) out_ += quote(key) + ": ";
  }
  std::string out_;
  std::vector<bool> first_;
};

std::string csv_line(std::initializer_list<double> values) {
  std::string s;
  for (double v : values) {
    if (!s.empty()) s += ',';
    s += format_number(v);
  }
  return s + "\n";
}

const char* format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

void echo_config(Json& j, const ScenarioConfig& c, Mode mode) {
  j.open("config", '{');
  j.str("mode", to_string(mode));
  if (c.has_problem) {
    if (c.dimensional) {
      j.open("problem", '{');
      j.num("R_i", c.dim.R_i).num("R_o", c.dim.R_o).num("mu", c.dim.mu).num("mu_s", c.dim.mu_s);
      j.num("kappa_s", c.dim.kappa_s).num("kappa_f", c.dim.kappa_f).num("p_o", c.dim.p_o);
      j.num("omega_s", c.dim.omega_s).num("omega_l", c.dim.omega_l).boolean("wet", c.dim.wet != 0);
      j.close('}');
    }
    j.open("problem.nondimensional", '{');
    j.num("alpha", c.nd.alpha).num("xi", c.nd.xi).num("eta", c.nd.eta).num("eta_f", c.nd.eta_f);
    j.num("p_hat_o", c.nd.p_hat_o).num("omega_s", c.nd.omega_s).num("omega_l", c.nd.omega_l);
    j.boolean("wet", c.nd.wet != 0);
    j.close('}');
  }
  j.open("solver", '{');
  j.open("bracket", '[').num(nullptr, c.solver.bracket_lo).num(nullptr, c.solver.bracket_hi).close(']');
  j.integer("scan", c.solver.scan_points).num("tol", c.solver.tolerance).num("fd_step", c.fd_step);
  j.close('}');
  if (mode == Mode::sweep) {
    j.open("sweep", '{').num("from", *c.sweep.from).num("to", *c.sweep.to).integer("count", *c.sweep.count).close('}');
  }
  j.open("output", '{').str("format", format_name(c.format)).integer("samples", c.samples).close('}');
  j.close('}');
}

void solution_json(Json& j, const char* key, const es_cavity_solution& s, const std::vector<std::string>& warnings) {
  j.open(key, '{');
  j.num("x", s.x).num("lambda_o", s.lambda_o).num("residual", s.residual);
  j.num("gamma0_over_mu_Ri", s.gamma0_over_mu_Ri).num("p_f_over_mu", s.p_f_over_mu);
  j.num("sigma_i_over_mu", s.sigma_i_over_mu).num("j0", s.j0).num("e_c", s.e_c).num("e_c_hat", s.e_c_hat);
  j.open("roots", '[');
  for (std::size_t k = 0; k < s.root_count && k < ES_MAX_ROOTS; ++k) j.num(nullptr, s.roots[k]);
  j.close(']');
  j.open("warnings", '[');
  for (const auto& w : warnings) j.str(nullptr, w);
  j.close(']');
  j.close('}');
}

std::vector<std::string> take_warnings() {
  std::vector<std::string> w;
  for (std::size_t k = 0; k < es_last_warning_count(); ++k) w.emplace_back(es_last_warning(k));
  return w;
}

// Maps a failing status onto an exit code and diagnostics.
RunResult failure(es_status st) {
  RunResult r;
  r.diagnostics.push_back(std::string("error: ") + es_status_string(st) + ": " + es_last_error());
  if (st == ES_ERR_BRACKETING) {
    r.exit_code = kExitBracketing;
    r.diagnostics.emplace_back("scan table (x,residual):");
    for (std::size_t k = 0; k < es_last_scan_size(); ++k) {
      double x, g;
      es_last_scan_row(k, &x, &g);
      r.diagnostics.push_back(format_number(x) + "," + format_number(g));
    }
  } else if (st == ES_ERR_INVALID_ARGUMENT) {
    r.exit_code = kExitConfig;
  } else {
    r.exit_code = kExitSolver;
  }
  return r;
}

RunResult run_solution(const ScenarioConfig& c, Mode mode) {
  es_cavity_solution s;
  const es_status st = mode == Mode::relax ? es_relax(&c.nd, &c.solver, &s) : es_solve(&c.nd, c.nd.p_hat_o, &c.solver, &s);
  if (st != ES_OK) return failure(st);
  RunResult r;
  const auto warnings = take_warnings();
  for (const auto& w : warnings) r.diagnostics.push_back("warning: " + w);
  if (c.format == Format::csv) {
    r.payload = "x,lambda_o,residual,gamma0_over_mu_Ri,p_f_over_mu,sigma_i_over_mu,j0,e_c,e_c_hat\n" +
                csv_line({s.x, s.lambda_o, s.residual, s.gamma0_over_mu_Ri, s.p_f_over_mu, s.sigma_i_over_mu, s.j0, s.e_c,
                          s.e_c_hat});
    return r;
  }
  Json j;
  j.open(nullptr, '{').str("artifact", "elastosurf").str("version", es_version());
  echo_config(j, c, mode);
  solution_json(j, "result", s, warnings);
  r.payload = j.close('}').done();
  return r;
}

RunResult run_sweep(const ScenarioConfig& c) {
  std::vector<double> grid(static_cast<std::size_t>(*c.sweep.count));
  es_status st = es_linear_grid(*c.sweep.from, *c.sweep.to, *c.sweep.count, grid.data());
  if (st != ES_OK) return failure(st);
  es_cavity_solution rest;
  st = es_relax(&c.nd, &c.solver, &rest);
  if (st != ES_OK) return failure(st);
  es_sweep* sw = nullptr;
  st = es_sweep_run(&c.nd, grid.data(), grid.size(), &c.solver, &sw);
  if (st != ES_OK) return failure(st);
  RunResult r;
  const auto warnings = take_warnings();
  for (const auto& w : warnings) r.diagnostics.push_back("warning: " + w);
  std::vector<es_sweep_row> rows(es_sweep_size(sw));
  for (std::size_t k = 0; k < rows.size(); ++k) es_sweep_get(sw, k, &rows[k]);
  es_sweep_destroy(sw);

  if (c.format == Format::csv) {
    r.payload = "p_hat_o,x,lambda_o,strain,gamma0_over_mu_Ri,e_c,p_f_over_mu,residual\n";
    for (const auto& w : rows)
      r.payload += csv_line({w.p_hat_o, w.x, w.lambda_o, w.strain, w.gamma0_over_mu_Ri, w.e_c, w.p_f_over_mu, w.residual});
    return r;
  }
  Json j;
  j.open(nullptr, '{').str("artifact", "elastosurf").str("version", es_version());
  echo_config(j, c, Mode::sweep);
  j.open("result", '{');
  solution_json(j, "relaxed", rest, warnings);
  j.open("rows", '[');
  for (const auto& w : rows) {
    j.open(nullptr, '{');
    j.num("p_hat_o", w.p_hat_o).num("x", w.x).num("lambda_o", w.lambda_o).num("strain", w.strain);
    j.num("gamma0_over_mu_Ri", w.gamma0_over_mu_Ri).num("e_c", w.e_c).num("p_f_over_mu", w.p_f_over_mu);
    j.num("residual", w.residual);
    j.close('}');
  }
  j.close(']').close('}');
  r.payload = j.close('}').done();
  return r;
}

RunResult run_profile(const ScenarioConfig& c) {
  es_profile* pr = nullptr;
  const es_status st = es_profile_run(&c.nd, c.nd.p_hat_o, c.samples, &c.solver, &pr);
  if (st != ES_OK) return failure(st);
  RunResult r;
  for (const auto& w : take_warnings()) r.diagnostics.push_back("warning: " + w);
  std::vector<es_profile_sample> rows(es_profile_size(pr));
  for (std::size_t k = 0; k < rows.size(); ++k) es_profile_get(pr, k, &rows[k]);
  es_profile_destroy(pr);

  if (c.format == Format::csv) {
    r.payload = "radius_ratio,sigma_rr_over_mu,sigma_tt_over_mu,p_over_mu\n";
    for (const auto& s : rows) r.payload += csv_line({s.radius_ratio, s.sigma_rr_over_mu, s.sigma_tt_over_mu, s.p_over_mu});
    return r;
  }
  Json j;
  j.open(nullptr, '{').str("artifact", "elastosurf").str("version", es_version());
  echo_config(j, c, Mode::stress_profile);
  j.open("result", '[');
  for (const auto& s : rows) {
    j.open(nullptr, '{');
    j.num("radius_ratio", s.radius_ratio).num("sigma_rr_over_mu", s.sigma_rr_over_mu);
    j.num("sigma_tt_over_mu", s.sigma_tt_over_mu).num("p_over_mu", s.p_over_mu);
    j.close('}');
  }
  j.close(']');
  r.payload = j.close('}').done();
  return r;
}

RunResult run_geometry(const ScenarioConfig& c) {
  es_geometry_report* rep = nullptr;
  const es_status st = es_geometry_check_run(c.fd_step, &rep);
  if (st != ES_OK) return failure(st);
  std::vector<es_geometry_row> rows(es_geometry_report_size(rep));
  for (std::size_t k = 0; k < rows.size(); ++k) es_geometry_report_get(rep, k, &rows[k]);

  RunResult r;
  if (c.format == Format::csv) {
    r.payload = "fixture,check,residual,fd_step\n";
    for (const auto& g : rows)
      r.payload += std::string(g.fixture) + "," + g.check + "," + format_number(g.residual) + "," + format_number(g.fd_step) + "\n";
  } else {
    Json j;
    j.open(nullptr, '{').str("artifact", "elastosurf").str("version", es_version());
    echo_config(j, c, Mode::geometry_check);
    j.open("result", '[');
    for (const auto& g : rows) {
      j.open(nullptr, '{').str("fixture", g.fixture).str("check", g.check).num("residual", g.residual);
      j.num("fd_step", g.fd_step).close('}');
    }
    j.close(']');
    r.payload = j.close('}').done();
  }
  es_geometry_report_destroy(rep);
  return r;
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::relax:
      return "relax";
    case Mode::solve:
      return "solve";
    case Mode::sweep:
      return "sweep";
    case Mode::stress_profile:
      return "stress-profile";
    case Mode::geometry_check:
      return "geometry-check";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
  for (Mode m : {Mode::relax, Mode::solve, Mode::sweep, Mode::stress_profile, Mode::geometry_check})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

ScenarioConfig default_config() {
  ScenarioConfig c;
  es_solver_options_default(&c.solver);
  return c;
}

ScenarioConfig parse_config(const std::string& text) {
  const Document doc = tokenize(text);
  ScenarioConfig c = default_config();

  if (const Entry* e = doc.find("mode")) {
    const auto m = parse_mode(get_string(*e));
    if (!m) throw ConfigError(at_line("mode", e->line) + ": unknown mode '" + e->value.text + "'");
    c.mode = m;
  }

  bool has_dim = false;
  for (const auto& k : dimensional_keys()) has_dim = has_dim || doc.find("problem." + k);
  const bool has_nd = doc.sections.count("problem.nondimensional") > 0;
  if (has_dim && has_nd)
    throw ConfigError("problem: both a dimensional [problem] block and a [problem.nondimensional] block are given");
  for (const char* shared : {"omega_s", "omega_l", "wet"}) {
    const Entry* a = doc.find(std::string("problem.") + shared);
    const Entry* b = doc.find(std::string("problem.nondimensional.") + shared);
    if (a && b) throw ConfigError(at_line(b->path, b->line) + ": also given as problem." + shared);
    if (a && !has_dim && !has_nd)
      throw ConfigError("problem: no parameter block; give R_i, R_o, mu under [problem] or use [problem.nondimensional]");
  }

  auto number_or = [&](const std::string& path, double fallback) {
    const Entry* e = doc.find(path);
    return e ? get_number(*e) : fallback;
  };
  auto required = [&](const std::string& path) {
    const Entry* e = doc.find(path);
    if (!e) throw ConfigError(path + ": missing required key");
    return get_number(*e);
  };
  // Shared keys may sit in either problem section.
  auto shared_number = [&](const char* key) {
    return number_or(std::string("problem.") + key, number_or(std::string("problem.nondimensional.") + key, 0.0));
  };
  auto shared_wet = [&]() {
    for (const char* p : {"problem.wet", "problem.nondimensional.wet"})
      if (const Entry* e = doc.find(p)) return get_bool(*e);
    return false;
  };

  if (has_dim) {
    c.has_problem = true;
    c.dimensional = true;
    c.dim.R_i = required("problem.R_i");
    c.dim.R_o = required("problem.R_o");
    c.dim.mu = required("problem.mu");
    c.dim.mu_s = number_or("problem.mu_s", 0.0);
    c.dim.kappa_s = number_or("problem.kappa_s", 0.0);
    c.dim.wet = shared_wet() ? 1 : 0;
    c.dim.kappa_f = c.dim.wet ? required("problem.kappa_f") : number_or("problem.kappa_f", 0.0);
    c.dim.p_o = number_or("problem.p_o", 0.0);
    c.dim.omega_s = shared_number("omega_s");
    c.dim.omega_l = shared_number("omega_l");
    if (es_nondimensionalize(&c.dim, &c.nd) != ES_OK) throw ConfigError(std::string("problem: ") + es_last_error());
  } else if (has_nd) {
    c.has_problem = true;
    const std::string s = "problem.nondimensional.";
    c.nd.alpha = required(s + "alpha");
    c.nd.xi = number_or(s + "xi", 0.0);
    c.nd.eta = number_or(s + "eta", 0.0);
    c.nd.wet = shared_wet() ? 1 : 0;
    c.nd.eta_f = c.nd.wet ? required(s + "eta_f") : number_or(s + "eta_f", 0.0);
    c.nd.p_hat_o = number_or(s + "p_hat_o", 0.0);
    c.nd.omega_s = shared_number("omega_s");
    c.nd.omega_l = shared_number("omega_l");
  } else {
    throw ConfigError("problem: no parameter block; give R_i, R_o, mu under [problem] or use [problem.nondimensional]");
  }
  if (es_validate(&c.nd) != ES_OK) throw ConfigError(std::string("problem: ") + es_last_error());

  if (const Entry* e = doc.find("solver.bracket")) {
    if (e->value.kind != Value::array || e->value.items.size() != 2)
      throw ConfigError(at_line(e->path, e->line) + ": expected [lo, hi], got '" + e->value.raw + "'");
    c.solver.bracket_lo = e->value.items[0];
    c.solver.bracket_hi = e->value.items[1];
  }
  if (const Entry* e = doc.find("solver.scan")) c.solver.scan_points = get_int(*e);
  c.solver.tolerance = number_or("solver.tol", c.solver.tolerance);
  c.fd_step = number_or("solver.fd_step", c.fd_step);

  if (const Entry* e = doc.find("sweep.from")) c.sweep.from = get_number(*e);
  if (const Entry* e = doc.find("sweep.to")) c.sweep.to = get_number(*e);
  if (const Entry* e = doc.find("sweep.count")) c.sweep.count = get_int(*e);

  if (const Entry* e = doc.find("output.path")) c.out_path = get_string(*e);
  if (const Entry* e = doc.find("output.format")) {
    const std::string f = get_string(*e);
    if (f == "csv") c.format = Format::csv;
    else if (f == "json") c.format = Format::json;
    else throw ConfigError(at_line(e->path, e->line) + ": format must be \"csv\" or \"json\"");
  }
  if (const Entry* e = doc.find("output.samples")) c.samples = get_int(*e);
  return c;
}

void finalize(ScenarioConfig& c) {
  if (!c.mode) throw ConfigError("mode: missing; give a subcommand or a top-level mode key");
  if (*c.mode != Mode::geometry_check && !c.has_problem)
    throw ConfigError("problem: missing; mode " + std::string(to_string(*c.mode)) + " needs a config with a parameter block");
  if (!(c.solver.bracket_lo > 0.0) || !(c.solver.bracket_hi > c.solver.bracket_lo))
    throw ConfigError("solver.bracket: need 0 < lo < hi");
  if (c.solver.scan_points < 2) throw ConfigError("solver.scan: need at least 2 points");
  if (!(c.solver.tolerance > 0.0)) throw ConfigError("solver.tol: must be positive");
  if (!(c.fd_step > 0.0)) throw ConfigError("solver.fd_step: must be positive");
  if (*c.mode == Mode::sweep) {
    if (!c.sweep.from) throw ConfigError("sweep.from: missing required key for mode sweep");
    if (!c.sweep.to) throw ConfigError("sweep.to: missing required key for mode sweep");
    if (!c.sweep.count) throw ConfigError("sweep.count: missing required key for mode sweep");
    if (*c.sweep.count < 2) throw ConfigError("sweep.count: must be at least 2");
  }
  if (*c.mode == Mode::stress_profile && c.samples < 2) throw ConfigError("output.samples: must be at least 2");
}

RunResult run(const ScenarioConfig& cfg) {
  ScenarioConfig c = cfg;
  try {
    finalize(c);
  } catch (const ConfigError& e) {
    RunResult r;
    r.exit_code = kExitConfig;
    r.diagnostics.push_back(std::string("error: ") + e.what());
    return r;
  }
  switch (*c.mode) {
    case Mode::relax:
    case Mode::solve:
      return run_solution(c, *c.mode);
    case Mode::sweep:
      return run_sweep(c);
    case Mode::stress_profile:
      return run_profile(c);
    case Mode::geometry_check:
      return run_geometry(c);
  }
  return {};
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << payload;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace elastosurf::cli
