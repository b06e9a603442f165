/**
 * @file constitutive.hpp
 * @brief Hyperelastic bulk and surface Cauchy stress with eigenstrain carried
 *        by the material metric.
 *
 * Materials are described by energy-derivative callables. Eigenstrain never
 * appears explicitly: it lives in the material metric G (or Gbar) handed to
 * the kinematics, and every invariant is measured against it.
 *
 * Incompressible models take the Lagrange multiplier p (or pbar) as an input.
 * The compressible representation carries an extra (2 I2 W2) g# term that the
 * incompressible one folds into -p, so comparing the two at J = 1 requires
 * p = -2 I2 W2.
 */
#ifndef ELASTOSURF_CONSTITUTIVE_HPP
#define ELASTOSURF_CONSTITUTIVE_HPP

#include <functional>
#include <optional>
#include <string>

#include "elastosurf/tensor.hpp"

namespace elastosurf {

inline constexpr double kIncompressibilityTol = 1e-10;

// -- kinematics ---------------------------------------------------------------

/// Bulk deformation measures for F : (B, G) -> (S, g) at a point.
struct Kinematics {
  Mat3 f;
  Metric3 material;
  Metric3 spatial;
  SymTensor3 c_flat;   // C_AB = F^a_A g_ab F^b_B
  SymTensor3 b_sharp;  // b^ab = F^a_A G^AB F^b_B
  SymTensor3 c_sharp;  // c^ab = g^am c_mn g^nb, c_flat = F^-* G F^-1
  PrincipalInvariants inv;
  double j;

  /// Throws ErrorKind::singularity when det F <= 0.
  static Kinematics make(const Mat3& f, const Metric3& material, const Metric3& spatial);
};

/// Surface measures for Fbar between two-dimensional surface charts.
struct SurfaceKinematics {
  Mat2 f;
  Metric2 material;  // Gbar, the surface material metric
  Metric2 spatial;   // gbar, the current first fundamental form
  SymTensor2 c_flat;
  SymTensor2 b_sharp;
  SurfaceInvariants inv;
  double jbar;  // sqrt(Ibar2)

  static SurfaceKinematics make(const Mat2& f, const Metric2& material, const Metric2& spatial);
};

/// G = e^{2 Omega} Gring (bulk dilatational eigenstrain).
Metric3 bulk_material_metric(const Metric3& reference, double omega);
/// Gbar = e^{-2 Omega_s} Gring_bar (surface dilatational eigenstrain).
Metric2 surface_material_metric(const Metric2& reference, double omega_s);

// -- materials ----------------------------------------------------------------

enum class BulkModel {
  incompressible_isotropic,
  compressible_isotropic,
  transversely_isotropic_compressible,
  transversely_isotropic_incompressible,
  hyperelastic_fluid,
};

const char* to_string(BulkModel m) noexcept;

struct BulkInvariants {
  double i1 = 3.0, i2 = 3.0, i3 = 1.0, i4 = 1.0, i5 = 1.0;
};

/// W_k = dW/dI_k. Unused entries stay zero.
struct EnergyDerivatives {
  double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0, w5 = 0.0;
};

struct BulkMaterial {
  BulkModel model = BulkModel::compressible_isotropic;
  std::string name;
  std::function<EnergyDerivatives(const BulkInvariants&)> derivatives;
  std::function<double(const BulkInvariants&)> energy;  // optional, enables energy_fd_check
  Vec<3> fiber{1.0, 0.0, 0.0};                           // G-unit preferred direction N

  // Fluid response W(J), W'(J), W''(J).
  std::function<double(double)> fluid_energy;
  std::function<double(double)> fluid_dw;
  std::function<double(double)> fluid_d2w;

  bool incompressible() const noexcept {
    return model == BulkModel::incompressible_isotropic || model == BulkModel::transversely_isotropic_incompressible;
  }
};

enum class SurfaceModel { compressible_isotropic, incompressible_isotropic };

const char* to_string(SurfaceModel m) noexcept;

struct SurfaceDerivatives {
  double w1 = 0.0, w2 = 0.0;
};

struct SurfaceMaterial {
  SurfaceModel model = SurfaceModel::compressible_isotropic;
  std::string name;
  std::function<SurfaceDerivatives(const SurfaceInvariants&)> derivatives;
  std::function<double(const SurfaceInvariants&)> energy;  // optional
  double mu_s = 0.0;
  double kappa_s = 0.0;
  double omega_s = 0.0;
};

/// W = mu/2 (I1 - 3).
BulkMaterial neo_hookean_incompressible(double mu);
/// W = mu/2 (I1 - 3 - ln I3) + kappa/2 (sqrt(I3) - 1)^2.
BulkMaterial neo_hookean_compressible(double mu, double kappa);
/// W = c1 (I1 - 3) + c2 (I2 - 3).
BulkMaterial mooney_rivlin_incompressible(double c1, double c2);
/// W = c1 (I1 - 3) + c2 (I2 - 3) - (c1 + 2 c2) ln I3 + kappa/2 (sqrt(I3) - 1)^2.
BulkMaterial mooney_rivlin_compressible(double c1, double c2, double kappa);
/// Isotropic base plus w4 (I4 - 1) + w5 (I5 - 1), fiber N.
BulkMaterial transversely_isotropic(const BulkMaterial& base, double w4, double w5, const Vec<3>& fiber);
/// W(J) = kappa_f (J - 1)^2 / 2.
BulkMaterial quadratic_fluid(double kappa_f);

/// Wbar = mu_s/2 (Ibar1 - 2 - ln Ibar2) + kappa_s/2 (sqrt(Ibar2) - 1)^2, so
/// Wbar1 = mu_s/2 and Wbar2 = kappa_s/2 (1 - 1/Jbar) - mu_s / (2 Jbar^2).
SurfaceMaterial neo_hookean_surface(double mu_s, double kappa_s, double omega_s = 0.0);
/// Wbar = mu_bar/2 (Ibar1 - 2).
SurfaceMaterial neo_hookean_surface_incompressible(double mu_bar, double omega_s = 0.0);
/// Wbar = gamma sqrt(Ibar2): constant isotropic tension gamma.
SurfaceMaterial constant_tension_surface(double gamma);

// -- stresses -------------------------------------------------------------------

struct StressState {
  SymTensor3 sigma;  // (2,0)
  std::optional<double> pressure;
};

struct SurfaceStressState {
  SymTensor2 sigma;  // (2,0)
  std::optional<double> pressure;
};

BulkInvariants bulk_invariants(const Kinematics& k, const Vec<3>& fiber);

/// sigma = -p g# + 2 W1 b# - 2 W2 c#. Throws ErrorKind::incompressibility if
/// |J - 1| > 1e-10.
StressState cauchy_incompressible_isotropic(const BulkMaterial& mat, const Kinematics& k, double p);

/// sigma = (2 / sqrt(I3)) [(I2 W2 + I3 W3) g# + W1 b# - I3 W2 c#].
StressState cauchy_compressible_isotropic(const BulkMaterial& mat, const Kinematics& k);

/// Adds W4 n (x) n + W5 l to the isotropic bracket, n = F N and
/// l^ab = n^a b^bc n_c + n^b b^ac n_c. The incompressible variant uses
/// -p g# + 2 W1 b# - 2 W2 c# + 2 W4 n n + 2 W5 l and ignores W3; `p` is only
/// read there.
StressState cauchy_transversely_isotropic(const BulkMaterial& mat, const Kinematics& k, double p = 0.0);

/// sigma = W'(J) g#. Throws ErrorKind::domain for J <= 0.
StressState fluid_stress(const BulkMaterial& mat, double j, const Metric3& spatial);

/// Dispatch on mat.model.
StressState cauchy_stress(const BulkMaterial& mat, const Kinematics& k, double p = 0.0);

/// sigmabar = (2 / sqrt(Ibar2)) [Ibar2 Wbar2 gbar# + Wbar1 bbar#].
SurfaceStressState surface_cauchy_isotropic(const SurfaceMaterial& mat, const SurfaceKinematics& k);

/// sigmabar = -pbar gbar# + 2 Wbar1 bbar#. Throws ErrorKind::incompressibility
/// if |Jbar - 1| > 1e-10.
SurfaceStressState surface_cauchy_incompressible(const SurfaceMaterial& mat, const SurfaceKinematics& k, double pbar);

/// P^aA = J sigma^ab (F^-1)^A_b.
TwoPointMap3 first_pk(const SymTensor3& sigma, const Mat3& f, const Metric3& material, const Metric3& spatial);

/// S^AB = (F^-1)^A_a P^aB.
SymTensor3 second_pk(const TwoPointMap3& p, const Mat3& f);

/// Traction P N contracted on the material vector components N^A.
Vec<3> traction(const TwoPointMap3& p, const Vec<3>& normal);

// -- finite-difference validation ----------------------------------------------

/// max |sigma - J^-1 F S_fd F^T| / max |J^-1 F S_fd F^T| where S_fd = 2 dW/dC_flat
/// by central differences with the given step. Incompressible models are
/// compared with p = -2 I2 W2. Needs mat.energy.
double energy_fd_check(const BulkMaterial& mat, const Kinematics& k, double step = 1e-5);

/// Surface analogue; incompressible surfaces compared with pbar = -2 Ibar2 Wbar2.
double energy_fd_check(const SurfaceMaterial& mat, const SurfaceKinematics& k, double step = 1e-5);

/// |W'(J) - (W(J + h) - W(J - h)) / 2h|.
double fluid_fd_check(const BulkMaterial& mat, double j, double step = 1e-5);

}  // namespace elastosurf

#endif  // ELASTOSURF_CONSTITUTIVE_HPP
