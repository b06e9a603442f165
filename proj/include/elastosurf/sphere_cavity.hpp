/**
 * @file sphere_cavity.hpp
 * @brief Incompressible isotropic spherical shell around a dry or
 *        fluid-filled cavity whose boundary is an eigenstrained elastic
 *        surface.
 *
 * The shell occupies R_i <= R <= R_o and deforms radially,
 * r(R) = (R^3 + r_i^3 - R_i^3)^{1/3}. The cavity is either empty (dry) or
 * filled with a hyperelastic fluid whose natural volume is set by the bulk
 * eigenstrain Omega_l. The interface carries a neo-Hookean surface with
 * dilatational eigenstrain Omega_s. Everything below is nondimensional:
 * lengths in R_i, stresses in mu, surface stresses in mu R_i. The unknown is
 * the interface stretch x = r_i / R_i.
 */
#ifndef ELASTOSURF_SPHERE_CAVITY_HPP
#define ELASTOSURF_SPHERE_CAVITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elastosurf/constitutive.hpp"

namespace elastosurf {

struct NondimensionalProblem {
  double alpha = 3.0;  // R_o / R_i
  double xi = 0.0;     // mu_s / (R_i mu)
  double eta = 0.0;    // kappa_s / (R_i mu)
  double eta_f = 0.0;  // kappa_f / mu, ignored unless wet
  double p_hat_o = 0.0;
  double omega_s = 0.0;
  double omega_l = 0.0;
  bool wet = false;

  /// Throws ErrorKind::invalid_argument on alpha < 1 + 1e-6, negative moduli
  /// or eigenstrains, or non-finite values. Returns warnings (thin shells).
  std::vector<std::string> validate() const;
};

/// Dimensional parameters (SI): R_i, R_o [m], mu, kappa_f, p_o [Pa],
/// mu_s, kappa_s [N/m], eigenstrains dimensionless.
struct SphereProblem {
  double R_i = 1.0;
  double R_o = 3.0;
  double mu = 1.0;
  double mu_s = 0.0;
  double kappa_s = 0.0;
  double kappa_f = 0.0;
  double p_o = 0.0;
  double omega_s = 0.0;
  double omega_l = 0.0;
  bool wet = false;

  NondimensionalProblem nondimensionalize() const;
};

struct SolverOptions {
  double bracket_lo = 0.2;
  double bracket_hi = 5.0;
  int scan_points = 4000;
  double tolerance = 1e-12;
};

struct CavitySolution {
  double x = 1.0;
  double lambda_o = 1.0;
  double residual = 0.0;
  double gamma0_over_mu_Ri = 0.0;
  double p_f_over_mu = 0.0;  // W_f'(J0) / mu; zero for a dry cavity
  double sigma_i_over_mu = 0.0;
  double j0 = 0.0;  // fluid volume ratio; zero for a dry cavity
  double e_c = 0.0;
  double e_c_hat = 0.0;
  std::vector<double> roots;  // every sign change found by the scan, ascending
  std::vector<std::string> warnings;
};

struct SweepRow {
  double p_hat_o;
  double x;
  double lambda_o;
  double strain;  // lambda_o - lambda_o*
  double gamma0_over_mu_Ri;
  double e_c;
  double p_f_over_mu;
  double residual;
};

struct ProfileSample {
  double radius_ratio;  // R / R_i
  double sigma_rr_over_mu;
  double sigma_tt_over_mu;  // physical hoop component
  double p_over_mu;         // Lagrange multiplier
};

// -- kinematics -------------------------------------------------------------------

/// r(R) = (R^3 + r_i^3 - R_i^3)^{1/3}. Throws ErrorKind::domain if the radicand
/// is not positive.
double shell_map(double big_r, double r_i, double big_r_i);

/// r(R) = x R inside the inclusion.
double fluid_map(double big_r, double x);

struct FluidState {
  double j0;
  double p_f;
};

/// J0 = x^3 e^{-3 Omega_l}, p_f = kappa_f (J0 - 1).
FluidState fluid_state(double x, double omega_l, double kappa_f);

/// f(R) = 4 (r^6 - R^6) / r^5 [W1 / r^2 + W2 / R^2].
double integrand_f(double big_r, double r, double w1, double w2);

// -- shell stresses (nondimensional, rho = R / R_i) ---------------------------------

/// Neo-Hookean shell: sigma_rr / mu = -p_hat_o + h(rho) - h(alpha),
/// h(s) = s (5 s^3 + 4 x^3 - 4) / (2 (s^3 + x^3 - 1)^{4/3}). Exact -p_hat_o at rho = alpha.
double radial_stress_closed_form(double rho, double x, double alpha, double p_hat_o);

/// Dimensional closed form for a neo-Hookean shell of modulus mu.
double radial_stress_closed_form(double big_r, double r_i, const SphereProblem& problem);

/// sigma_rr / mu = -p_hat_o - int_rho^alpha f, with W1, W2 from `shell` (scaled
/// by mu) evaluated on the radial stretches. Adaptive Simpson, tol 1e-12, depth 40.
/// Throws ErrorKind::unsupported_model for non-incompressible-isotropic shells.
double radial_stress_quadrature(double rho, double x, double alpha, double p_hat_o, const BulkMaterial& shell);

/// Physical hoop stress sigma_tt = sigma_rr + 2 W1 (r^2/R^2 - R^4/r^4) + 2 W2 (r^4/R^4 - R^2/r^2).
double hoop_stress(double rho, double x, double sigma_rr, double w1, double w2);

/// Lagrange multiplier p = -sigma_rr + 2 W1 R^4/r^4 - 2 W2 r^4/R^4.
double shell_pressure(double rho, double x, double sigma_rr, double w1, double w2);

/// (W1, W2) of an incompressible isotropic shell at the radial state (rho, x).
std::pair<double, double> shell_derivatives(const BulkMaterial& shell, double rho, double x);

// -- interface ----------------------------------------------------------------------

/// gamma0 = (-1 + x^2 e^{2 Omega_s}) kappa_s + (1 - x^-2 e^{-2 Omega_s}) mu_s.
double surface_tension(double x, double omega_s, double mu_s, double kappa_s);

/// gamma0 = 2 (Wbar1 + x^2 e^{2 Omega_s} Wbar2) for any isotropic surface model.
double surface_tension(double x, double omega_s, const SurfaceMaterial& surface);

/// e_c = (eta/2)(e^{2 Omega_s} x^2 - 1) + (xi/2)(1 - e^{-2 Omega_s} x^-2).
double elasto_capillary(double x, double omega_s, double xi, double eta);
double initial_elasto_capillary(double omega_s, double xi, double eta);

/// g(x), zero iff the generalized Laplace law holds at the interface.
/// Throws ErrorKind::domain unless x > 0 and x^3 > 1 - alpha^3.
double equilibrium_residual(double x, const NondimensionalProblem& nd);

/// sigma_i - e^{-4 Omega_l} p_f - e^{2 Omega_s} 2 gamma0 / x, reassembled from
/// the parts of a solution (all over mu).
double laplace_residual(const CavitySolution& s, const NondimensionalProblem& nd);

/// p_in - p_out - 2 gamma / r_i.
double laplace_classical_check(double p_in, double p_out, double gamma, double r_i);

/// Surface divergence (theta, phi components) of a uniform tension gamma on a
/// sphere of radius r, built from the sphere's Christoffel symbols.
std::pair<double, double> tangential_surface_equilibrium(double gamma, double r, double theta);

// -- solving ------------------------------------------------------------------------

/// Scan [lo, hi] with `scan_points` samples, bisect every sign change, return
/// the root nearest 1 with all roots listed. Throws BracketingError (carrying
/// the scan) when no sign change exists.
CavitySolution solve_stretch(const NondimensionalProblem& nd, double p_hat_o, const SolverOptions& opts = {});
CavitySolution relax(const NondimensionalProblem& nd, const SolverOptions& opts = {});

/// Rows in grid order. lambda_o* comes from a fresh relax call.
std::vector<SweepRow> pressure_sweep(const NondimensionalProblem& nd, const std::vector<double>& p_hat_grid,
                                     const SolverOptions& opts = {});

/// count >= 2 evenly spaced values, endpoints exact.
std::vector<double> linear_grid(double from, double to, int count);

/// Neo-Hookean shell profile at n_samples >= 2 radii from R_i to R_o (last exactly R_o).
std::vector<ProfileSample> stress_profile(const NondimensionalProblem& nd, double p_hat_o, int n_samples,
                                          const SolverOptions& opts = {});

// -- general constitutive models ----------------------------------------------------

/// Same boundary-value problem with arbitrary incompressible isotropic shell,
/// isotropic surface and optional fluid. Stresses scaled by mu, surface
/// stresses by mu R_i.
struct GeneralCavityModel {
  BulkMaterial shell;
  SurfaceMaterial surface;
  std::optional<BulkMaterial> fluid;
  double alpha = 3.0;
  double p_hat_o = 0.0;
  double omega_s = 0.0;
  double omega_l = 0.0;
};

/// (2)(sigma_i - e^{-4 Omega_l} p_f - e^{2 Omega_s} 2 gamma0 / x), sigma_i by quadrature.
/// Equals equilibrium_residual for the neo-Hookean instance.
double equilibrium_residual(double x, const GeneralCavityModel& model);

/// Root of the general residual (same scan-and-bisect policy).
double solve_stretch(const GeneralCavityModel& model, const SolverOptions& opts = {});

}  // namespace elastosurf

#endif  // ELASTOSURF_SPHERE_CAVITY_HPP
