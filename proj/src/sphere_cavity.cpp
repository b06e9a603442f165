#include "elastosurf/sphere_cavity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "elastosurf/errors.hpp"
#include "elastosurf/quadrature.hpp"

namespace elastosurf {

namespace {

constexpr double kMinAlpha = 1.0 + 1e-6;
constexpr double kThinShellAlpha = 1.01;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, std::string(name) + " must be finite");
}

void require_non_negative(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0) fail(ErrorKind::invalid_argument, std::string(name) + " must be non-negative");
}

// rho^3 + x^3 - 1, the cube of the current radius in units of R_i.
double radicand(double rho, double x) {
  const double s = rho * rho * rho + x * x * x - 1.0;
  if (!(s > 0.0)) fail(ErrorKind::domain, "radial map radicand is not positive");
  return s;
}

double current_radius(double rho, double x) { return std::cbrt(radicand(rho, x)); }

double h_closed(double rho, double x) {
  const double s = radicand(rho, x);
  return rho * (5.0 * rho * rho * rho + 4.0 * x * x * x - 4.0) / (2.0 * s * std::cbrt(s));
}

double gamma_hat(double x, double omega_s, double xi, double eta) {
  const double e2 = std::exp(2.0 * omega_s);
  return eta * (x * x * e2 - 1.0) + xi * (1.0 - 1.0 / (x * x * e2));
}

double lambda_outer(double x, double alpha) { return std::cbrt(alpha * alpha * alpha + x * x * x - 1.0) / alpha; }

std::string scan_message(double lo, double hi, int n) {
  std::ostringstream os;
  os << "no sign change of the equilibrium residual on [" << lo << ", " << hi << "] with " << n << " samples";
  return os.str();
}

// Bisect until the interval cannot shrink further; return the endpoint with
// the smaller residual.
double bisect(const std::function<double(double)>& g, double a, double ga, double b, double gb, double tol) {
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
      gb = gm;
    }
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(m) && std::min(std::fabs(ga), std::fabs(gb)) <= tol)
      break;
  }
  return std::fabs(ga) <= std::fabs(gb) ? a : b;
}

std::vector<double> find_roots(const std::function<double(double)>& g, const SolverOptions& opts) {
  if (!(opts.bracket_lo > 0.0) || !(opts.bracket_hi > opts.bracket_lo) || !std::isfinite(opts.bracket_hi))
    fail(ErrorKind::invalid_argument, "bracket must satisfy 0 < lo < hi");
  if (opts.scan_points < 2) fail(ErrorKind::invalid_argument, "scan needs at least 2 points");
  if (!(opts.tolerance > 0.0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");

  const int n = opts.scan_points;
  std::vector<ScanSample> scan;
  scan.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = k + 1 == n ? opts.bracket_hi
                                : opts.bracket_lo + (opts.bracket_hi - opts.bracket_lo) * k / static_cast<double>(n - 1);
    double r;
    try {
      r = g(x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::domain) throw;
      r = std::numeric_limits<double>::quiet_NaN();
    }
    scan.push_back({x, r});
  }

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < scan.size(); ++k) {
    const auto& a = scan[k];
    const auto& b = scan[k + 1];
    if (!std::isfinite(a.residual) || !std::isfinite(b.residual)) continue;
    if (a.residual == 0.0) {
      roots.push_back(a.x);
      continue;
    }
    if ((a.residual < 0.0) != (b.residual < 0.0) && b.residual != 0.0)
      roots.push_back(bisect(g, a.x, a.residual, b.x, b.residual, opts.tolerance));
  }
  if (scan.back().residual == 0.0) roots.push_back(scan.back().x);
  if (roots.empty()) throw BracketingError(scan_message(opts.bracket_lo, opts.bracket_hi, n), std::move(scan));
  return roots;
}

double nearest_to_one(const std::vector<double>& roots) {
  return *std::min_element(roots.begin(), roots.end(),
                           [](double a, double b) { return std::fabs(a - 1.0) < std::fabs(b - 1.0); });
}

}  // namespace

std::vector<std::string> NondimensionalProblem::validate() const {
  require_finite(alpha, "alpha");
  if (alpha < kMinAlpha) fail(ErrorKind::invalid_argument, "alpha must be at least 1 + 1e-6");
  require_non_negative(xi, "xi");
  require_non_negative(eta, "eta");
  require_non_negative(omega_s, "omega_s");
  require_non_negative(omega_l, "omega_l");
  require_finite(p_hat_o, "p_hat_o");
  if (wet) require_non_negative(eta_f, "eta_f");
  std::vector<std::string> warnings;
  if (alpha < kThinShellAlpha) warnings.emplace_back("alpha below 1.01: very thin shell, results are ill-conditioned");
  return warnings;
}

NondimensionalProblem SphereProblem::nondimensionalize() const {
  require_finite(R_i, "R_i");
  require_finite(R_o, "R_o");
  require_finite(mu, "mu");
  if (!(R_i > 0.0)) fail(ErrorKind::invalid_argument, "R_i must be positive");
  if (!(mu > 0.0)) fail(ErrorKind::invalid_argument, "mu must be positive");
  require_non_negative(mu_s, "mu_s");
  require_non_negative(kappa_s, "kappa_s");
  if (wet) require_non_negative(kappa_f, "kappa_f");
  NondimensionalProblem nd;
  nd.alpha = R_o / R_i;
  nd.xi = mu_s / (R_i * mu);
  nd.eta = kappa_s / (R_i * mu);
  nd.eta_f = wet ? kappa_f / mu : 0.0;
  nd.p_hat_o = p_o / mu;
  nd.omega_s = omega_s;
  nd.omega_l = omega_l;
  nd.wet = wet;
  return nd;
}

// -- kinematics -------------------------------------------------------------------

double shell_map(double big_r, double r_i, double big_r_i) {
  const double s = big_r * big_r * big_r + r_i * r_i * r_i - big_r_i * big_r_i * big_r_i;
  if (!(s > 0.0)) fail(ErrorKind::domain, "shell map radicand is not positive");
  return std::cbrt(s);
}

double fluid_map(double big_r, double x) { return x * big_r; }

FluidState fluid_state(double x, double omega_l, double kappa_f) {
  const double j0 = x * x * x * std::exp(-3.0 * omega_l);
  return {j0, kappa_f * (j0 - 1.0)};
}

double integrand_f(double big_r, double r, double w1, double w2) {
  const double r2 = r * r;
  const double r6 = r2 * r2 * r2;
  const double rr2 = big_r * big_r;
  const double rr6 = rr2 * rr2 * rr2;
  return 4.0 * (r6 - rr6) / (r6 / r) * (w1 / r2 + w2 / rr2);
}

// -- shell stresses -----------------------------------------------------------------

double radial_stress_closed_form(double rho, double x, double alpha, double p_hat_o) {
  if (rho == alpha) return 0.0 - p_hat_o;  // +0 rather than -0 when unloaded
  return -p_hat_o + (h_closed(rho, x) - h_closed(alpha, x));
}

double radial_stress_closed_form(double big_r, double r_i, const SphereProblem& problem) {
  const double ri = problem.R_i;
  return problem.mu * radial_stress_closed_form(big_r / ri, r_i / ri, problem.R_o / ri, problem.p_o / problem.mu);
}

std::pair<double, double> shell_derivatives(const BulkMaterial& shell, double rho, double x) {
  if (shell.model != BulkModel::incompressible_isotropic)
    fail(ErrorKind::unsupported_model, "radial shell solution needs an incompressible isotropic material");
  const double r = current_radius(rho, x);
  const double lt2 = (r / rho) * (r / rho);
  const double lr2 = 1.0 / (lt2 * lt2);
  BulkInvariants inv;
  inv.i1 = lr2 + 2.0 * lt2;
  inv.i2 = lt2 * lt2 + 2.0 * lr2 * lt2;
  inv.i3 = 1.0;
  const EnergyDerivatives d = shell.derivatives(inv);
  return {d.w1, d.w2};
}

double radial_stress_quadrature(double rho, double x, double alpha, double p_hat_o, const BulkMaterial& shell) {
  if (shell.model != BulkModel::incompressible_isotropic)
    fail(ErrorKind::unsupported_model, "radial shell solution needs an incompressible isotropic material");
  // Integrate in u = ln r (rho^2 drho = r^2 dr): for small x the integrand is
  // sharply peaked at the wall in rho but smooth in u.
  const double x3 = x * x * x;
  auto f = [&](double u) {
    const double r = std::exp(u);
    const double r3 = r * r * r;
    const double s = std::cbrt(r3 - x3 + 1.0);
    const auto [w1, w2] = shell_derivatives(shell, s, x);
    return integrand_f(s, r, w1, w2) * r3 / (s * s);
  };
  if (rho == alpha) return 0.0 - p_hat_o;  // +0 rather than -0 when unloaded
  return -p_hat_o - adaptive_simpson(f, std::log(current_radius(rho, x)), std::log(current_radius(alpha, x)), 1e-12, 40);
}

double hoop_stress(double rho, double x, double sigma_rr, double w1, double w2) {
  const double q = current_radius(rho, x) / rho;
  const double q2 = q * q;
  const double q4 = q2 * q2;
  return sigma_rr + 2.0 * w1 * (q2 - 1.0 / q4) + 2.0 * w2 * (q4 - 1.0 / q2);
}

double shell_pressure(double rho, double x, double sigma_rr, double w1, double w2) {
  const double q = current_radius(rho, x) / rho;
  const double q4 = q * q * q * q;
  return -sigma_rr + 2.0 * w1 / q4 - 2.0 * w2 * q4;
}

// -- interface ----------------------------------------------------------------------

double surface_tension(double x, double omega_s, double mu_s, double kappa_s) {
  const double j = x * x * std::exp(2.0 * omega_s);
  return (j - 1.0) * kappa_s + (1.0 - 1.0 / j) * mu_s;
}

double surface_tension(double x, double omega_s, const SurfaceMaterial& surface) {
  if (surface.model != SurfaceModel::compressible_isotropic)
    fail(ErrorKind::unsupported_model, "surface tension of an incompressible surface depends on pbar");
  const double j = x * x * std::exp(2.0 * omega_s);
  const SurfaceDerivatives d = surface.derivatives(SurfaceInvariants{2.0 * j, j * j});
  return 2.0 * (d.w1 + j * d.w2);
}

double elasto_capillary(double x, double omega_s, double xi, double eta) {
  return 0.5 * gamma_hat(x, omega_s, xi, eta);
}

double initial_elasto_capillary(double omega_s, double xi, double eta) {
  return elasto_capillary(1.0, omega_s, xi, eta);
}

double equilibrium_residual(double x, const NondimensionalProblem& nd) {
  if (!(x > 0.0)) fail(ErrorKind::domain, "interface stretch must be positive");
  const double a = nd.alpha;
  const double x3 = x * x * x;
  const double a3 = a * a * a;
  const double s = x3 + a3 - 1.0;
  if (!(s > 0.0)) fail(ErrorKind::domain, "outer radius radicand is not positive");
  const double e2 = std::exp(2.0 * nd.omega_s);
  double g = 1.0 / (x3 * x) + 4.0 / x + a * (4.0 - 4.0 * x3 - 5.0 * a3) / (s * std::cbrt(s)) -
             (4.0 / x) * (e2 * x * x - 1.0) * (nd.xi / (x * x) + nd.eta * e2) - 2.0 * nd.p_hat_o;
  if (nd.wet)
    g += 2.0 * std::exp(-7.0 * nd.omega_l) * (std::exp(3.0 * nd.omega_l) - x3) * nd.eta_f;
  return g;
}

double laplace_residual(const CavitySolution& s, const NondimensionalProblem& nd) {
  return s.sigma_i_over_mu - std::exp(-4.0 * nd.omega_l) * s.p_f_over_mu -
         std::exp(2.0 * nd.omega_s) * 2.0 * s.gamma0_over_mu_Ri / s.x;
}

double laplace_classical_check(double p_in, double p_out, double gamma, double r_i) {
  if (!(r_i > 0.0)) fail(ErrorKind::invalid_argument, "radius must be positive");
  return p_in - p_out - 2.0 * gamma / r_i;
}

std::pair<double, double> tangential_surface_equilibrium(double gamma, double r, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  if (std::fabs(s) < 1e-8) fail(ErrorKind::chart, "spherical chart is singular at the poles");
  // Christoffels of r^2 (dtheta^2 + sin^2 dphi^2), index order [a][b][c] = Gamma^a_bc.
  double gam[2][2][2] = {};
  gam[0][1][1] = -s * c;
  gam[1][0][1] = gam[1][1][0] = c / s;
  const double sig[2][2] = {{gamma / (r * r), 0.0}, {0.0, gamma / (r * r * s * s)}};
  // sigma depends on theta only through sin^2 in sigma^phiphi, which never
  // enters a d_b sigma^ab term with b = theta, so the partials vanish.
  double div[2] = {0.0, 0.0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) div[a] += gam[a][b][k] * sig[k][b] + gam[b][b][k] * sig[a][k];
  return {div[0], div[1]};
}

// -- solving ------------------------------------------------------------------------

CavitySolution solve_stretch(const NondimensionalProblem& nd, double p_hat_o, const SolverOptions& opts) {
  NondimensionalProblem p = nd;
  p.p_hat_o = p_hat_o;
  CavitySolution sol;
  sol.warnings = p.validate();
  const auto g = [&p](double x) { return equilibrium_residual(x, p); };
  sol.roots = find_roots(g, opts);
  sol.x = nearest_to_one(sol.roots);
  if (sol.roots.size() > 1) {
    std::ostringstream os;
    os.precision(17);
    os << sol.roots.size() << " roots found; reporting the one nearest 1 (x = " << sol.x << ")";
    sol.warnings.push_back(os.str());
  }
  const double x = sol.x;
  sol.residual = g(x);
  sol.lambda_o = lambda_outer(x, p.alpha);
  sol.gamma0_over_mu_Ri = gamma_hat(x, p.omega_s, p.xi, p.eta);
  sol.e_c = 0.5 * sol.gamma0_over_mu_Ri;
  sol.e_c_hat = initial_elasto_capillary(p.omega_s, p.xi, p.eta);
  if (p.wet) {
    const FluidState fs = fluid_state(x, p.omega_l, p.eta_f);
    sol.j0 = fs.j0;
    sol.p_f_over_mu = fs.p_f;
  }
  sol.sigma_i_over_mu = radial_stress_closed_form(1.0, x, p.alpha, p.p_hat_o);
  return sol;
}

CavitySolution relax(const NondimensionalProblem& nd, const SolverOptions& opts) { return solve_stretch(nd, 0.0, opts); }

std::vector<double> linear_grid(double from, double to, int count) {
  if (count < 2) fail(ErrorKind::invalid_argument, "grid needs at least 2 points");
  if (!std::isfinite(from) || !std::isfinite(to)) fail(ErrorKind::invalid_argument, "grid bounds must be finite");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) grid[k] = from + (to - from) * k / static_cast<double>(count - 1);
  grid.back() = to;
  return grid;
}

std::vector<SweepRow> pressure_sweep(const NondimensionalProblem& nd, const std::vector<double>& p_hat_grid,
                                     const SolverOptions& opts) {
  const CavitySolution rest = relax(nd, opts);
  std::vector<SweepRow> rows;
  rows.reserve(p_hat_grid.size());
  for (double ph : p_hat_grid) {
    const CavitySolution s = solve_stretch(nd, ph, opts);
    rows.push_back({ph, s.x, s.lambda_o, s.lambda_o - rest.lambda_o, s.gamma0_over_mu_Ri, s.e_c, s.p_f_over_mu,
                    s.residual});
  }
  return rows;
}

std::vector<ProfileSample> stress_profile(const NondimensionalProblem& nd, double p_hat_o, int n_samples,
                                          const SolverOptions& opts) {
  if (n_samples < 2) fail(ErrorKind::invalid_argument, "profile needs at least 2 samples");
  const CavitySolution s = solve_stretch(nd, p_hat_o, opts);
  const std::vector<double> radii = linear_grid(1.0, nd.alpha, n_samples);
  std::vector<ProfileSample> out;
  out.reserve(radii.size());
  for (double rho : radii) {
    const double srr = radial_stress_closed_form(rho, s.x, nd.alpha, p_hat_o);
    out.push_back({rho, srr, hoop_stress(rho, s.x, srr, 0.5, 0.0), shell_pressure(rho, s.x, srr, 0.5, 0.0)});
  }
  return out;
}

// -- general constitutive models ----------------------------------------------------

double equilibrium_residual(double x, const GeneralCavityModel& m) {
  if (!(x > 0.0)) fail(ErrorKind::domain, "interface stretch must be positive");
  const double sigma_i = radial_stress_quadrature(1.0, x, m.alpha, m.p_hat_o, m.shell);
  double p_f = 0.0;
  if (m.fluid) {
    if (m.fluid->model != BulkModel::hyperelastic_fluid)
      fail(ErrorKind::unsupported_model, "cavity filling must be a hyperelastic fluid");
    const double j0 = x * x * x * std::exp(-3.0 * m.omega_l);
    p_f = m.fluid->fluid_dw(j0);
  }
  const double gamma0 = surface_tension(x, m.omega_s, m.surface);
  return 2.0 * (sigma_i - std::exp(-4.0 * m.omega_l) * p_f - std::exp(2.0 * m.omega_s) * 2.0 * gamma0 / x);
}

double solve_stretch(const GeneralCavityModel& model, const SolverOptions& opts) {
  if (!(model.alpha >= kMinAlpha)) fail(ErrorKind::invalid_argument, "alpha must be at least 1 + 1e-6");
  const auto g = [&model](double x) { return equilibrium_residual(x, model); };
  return nearest_to_one(find_roots(g, opts));
}

}  // namespace elastosurf
