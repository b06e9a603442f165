#include "elastosurf/constitutive.hpp"

#include <cmath>

namespace elastosurf {

Kinematics Kinematics::make(const Mat3& f, const Metric3& material, const Metric3& spatial) {
  require_orientation_preserving(f);
  const Mat3 g = spatial.covariant().matrix();
  const Mat3 ginv = spatial.inverse().matrix();
  const Mat3 finv = inverse(f);
  const SymTensor3 c_flat(transpose(f) * g * f, Variance::covariant);
  const SymTensor3 b_sharp(f * material.inverse().matrix() * transpose(f), Variance::contravariant);
  const Mat3 c_spatial = transpose(finv) * material.covariant().matrix() * finv;
  const SymTensor3 c_sharp(ginv * c_spatial * ginv, Variance::contravariant);
  const PrincipalInvariants inv = principal_invariants(c_flat, material);
  const double j = std::sqrt(spatial.det() / material.det()) * determinant(f);
  return {f, material, spatial, c_flat, b_sharp, c_sharp, inv, j};
}

SurfaceKinematics SurfaceKinematics::make(const Mat2& f, const Metric2& material, const Metric2& spatial) {
  require_orientation_preserving(f);
  const SymTensor2 c_flat(transpose(f) * spatial.covariant().matrix() * f, Variance::covariant);
  const SymTensor2 b_sharp(f * material.inverse().matrix() * transpose(f), Variance::contravariant);
  const SurfaceInvariants inv = surface_invariants(c_flat, material);
  return {f, material, spatial, c_flat, b_sharp, inv, std::sqrt(inv.i2)};
}

Metric3 bulk_material_metric(const Metric3& reference, double omega) { return reference.conformal(std::exp(2.0 * omega)); }

Metric2 surface_material_metric(const Metric2& reference, double omega_s) {
  return reference.conformal(std::exp(-2.0 * omega_s));
}

const char* to_string(BulkModel m) noexcept {
  switch (m) {
    case BulkModel::incompressible_isotropic: return "incompressible-isotropic";
    case BulkModel::compressible_isotropic: return "compressible-isotropic";
    case BulkModel::transversely_isotropic_compressible: return "transversely-isotropic-compressible";
    case BulkModel::transversely_isotropic_incompressible: return "transversely-isotropic-incompressible";
    case BulkModel::hyperelastic_fluid: return "hyperelastic-fluid";
  }
  return "?";
}

const char* to_string(SurfaceModel m) noexcept {
  switch (m) {
    case SurfaceModel::compressible_isotropic: return "compressible-isotropic";
    case SurfaceModel::incompressible_isotropic: return "incompressible-isotropic";
  }
  return "?";
}

// -- factories ----------------------------------------------------------------

BulkMaterial neo_hookean_incompressible(double mu) {
  BulkMaterial m;
  m.model = BulkModel::incompressible_isotropic;
  m.name = "neo-hookean";
  m.derivatives = [mu](const BulkInvariants&) { return EnergyDerivatives{0.5 * mu}; };
  m.energy = [mu](const BulkInvariants& i) { return 0.5 * mu * (i.i1 - 3.0); };
  return m;
}

BulkMaterial neo_hookean_compressible(double mu, double kappa) {
  BulkMaterial m;
  m.model = BulkModel::compressible_isotropic;
  m.name = "neo-hookean-compressible";
  m.derivatives = [mu, kappa](const BulkInvariants& i) {
    const double j = std::sqrt(i.i3);
    EnergyDerivatives d;
    d.w1 = 0.5 * mu;
    d.w3 = -0.5 * mu / i.i3 + 0.5 * kappa * (j - 1.0) / j;
    return d;
  };
  m.energy = [mu, kappa](const BulkInvariants& i) {
    const double j = std::sqrt(i.i3);
    return 0.5 * mu * (i.i1 - 3.0 - std::log(i.i3)) + 0.5 * kappa * (j - 1.0) * (j - 1.0);
  };
  return m;
}

BulkMaterial mooney_rivlin_incompressible(double c1, double c2) {
  BulkMaterial m;
  m.model = BulkModel::incompressible_isotropic;
  m.name = "mooney-rivlin";
  m.derivatives = [c1, c2](const BulkInvariants&) { return EnergyDerivatives{c1, c2}; };
  m.energy = [c1, c2](const BulkInvariants& i) { return c1 * (i.i1 - 3.0) + c2 * (i.i2 - 3.0); };
  return m;
}

BulkMaterial mooney_rivlin_compressible(double c1, double c2, double kappa) {
  BulkMaterial m;
  m.model = BulkModel::compressible_isotropic;
  m.name = "mooney-rivlin-compressible";
  m.derivatives = [c1, c2, kappa](const BulkInvariants& i) {
    const double j = std::sqrt(i.i3);
    EnergyDerivatives d;
    d.w1 = c1;
    d.w2 = c2;
    d.w3 = -(c1 + 2.0 * c2) / i.i3 + 0.5 * kappa * (j - 1.0) / j;
    return d;
  };
  m.energy = [c1, c2, kappa](const BulkInvariants& i) {
    const double j = std::sqrt(i.i3);
    return c1 * (i.i1 - 3.0) + c2 * (i.i2 - 3.0) - (c1 + 2.0 * c2) * std::log(i.i3) +
           0.5 * kappa * (j - 1.0) * (j - 1.0);
  };
  return m;
}

BulkMaterial transversely_isotropic(const BulkMaterial& base, double w4, double w5, const Vec<3>& fiber) {
  if (base.model != BulkModel::incompressible_isotropic && base.model != BulkModel::compressible_isotropic)
    fail(ErrorKind::unsupported_model, "transversely_isotropic needs an isotropic base model");
  BulkMaterial m = base;
  m.model = base.incompressible() ? BulkModel::transversely_isotropic_incompressible
                                  : BulkModel::transversely_isotropic_compressible;
  m.name = base.name + "+fiber";
  m.fiber = fiber;
  m.derivatives = [d0 = base.derivatives, w4, w5](const BulkInvariants& i) {
    EnergyDerivatives d = d0(i);
    d.w4 = w4;
    d.w5 = w5;
    return d;
  };
  if (base.energy)
    m.energy = [e0 = base.energy, w4, w5](const BulkInvariants& i) {
      return e0(i) + w4 * (i.i4 - 1.0) + w5 * (i.i5 - 1.0);
    };
  return m;
}

BulkMaterial quadratic_fluid(double kappa_f) {
  if (!(kappa_f > 0.0)) fail(ErrorKind::invalid_argument, "fluid bulk modulus must be positive");
  BulkMaterial m;
  m.model = BulkModel::hyperelastic_fluid;
  m.name = "quadratic-fluid";
  m.fluid_energy = [kappa_f](double j) { return 0.5 * kappa_f * (j - 1.0) * (j - 1.0); };
  m.fluid_dw = [kappa_f](double j) { return kappa_f * (j - 1.0); };
  m.fluid_d2w = [kappa_f](double) { return kappa_f; };
  return m;
}

SurfaceMaterial neo_hookean_surface(double mu_s, double kappa_s, double omega_s) {
  if (mu_s < 0.0 || kappa_s < 0.0) fail(ErrorKind::invalid_argument, "surface moduli must be non-negative");
  SurfaceMaterial m;
  m.model = SurfaceModel::compressible_isotropic;
  m.name = "neo-hookean-surface";
  m.mu_s = mu_s;
  m.kappa_s = kappa_s;
  m.omega_s = omega_s;
  m.derivatives = [mu_s, kappa_s](const SurfaceInvariants& i) {
    const double jb = std::sqrt(i.i2);
    return SurfaceDerivatives{0.5 * mu_s, 0.5 * kappa_s * (1.0 - 1.0 / jb) - 0.5 * mu_s / i.i2};
  };
  m.energy = [mu_s, kappa_s](const SurfaceInvariants& i) {
    const double jb = std::sqrt(i.i2);
    return 0.5 * mu_s * (i.i1 - 2.0 - std::log(i.i2)) + 0.5 * kappa_s * (jb - 1.0) * (jb - 1.0);
  };
  return m;
}

SurfaceMaterial neo_hookean_surface_incompressible(double mu_bar, double omega_s) {
  if (mu_bar < 0.0) fail(ErrorKind::invalid_argument, "surface modulus must be non-negative");
  SurfaceMaterial m;
  m.model = SurfaceModel::incompressible_isotropic;
  m.name = "neo-hookean-surface-incompressible";
  m.mu_s = mu_bar;
  m.omega_s = omega_s;
  m.derivatives = [mu_bar](const SurfaceInvariants&) { return SurfaceDerivatives{0.5 * mu_bar, 0.0}; };
  m.energy = [mu_bar](const SurfaceInvariants& i) { return 0.5 * mu_bar * (i.i1 - 2.0); };
  return m;
}

SurfaceMaterial constant_tension_surface(double gamma) {
  SurfaceMaterial m;
  m.model = SurfaceModel::compressible_isotropic;
  m.name = "constant-tension";
  m.derivatives = [gamma](const SurfaceInvariants& i) { return SurfaceDerivatives{0.0, 0.5 * gamma / std::sqrt(i.i2)}; };
  m.energy = [gamma](const SurfaceInvariants& i) { return gamma * std::sqrt(i.i2); };
  return m;
}

// -- stresses -------------------------------------------------------------------

BulkInvariants bulk_invariants(const Kinematics& k, const Vec<3>& fiber) {
  const Mat3 c = k.c_flat.matrix();
  const Vec<3> cn = c * fiber;
  BulkInvariants i;
  i.i1 = k.inv.i1;
  i.i2 = k.inv.i2;
  i.i3 = k.inv.i3;
  i.i4 = dot(fiber, cn);
  i.i5 = dot(cn, k.material.inverse().matrix() * cn);
  return i;
}

namespace {

void require_material(const BulkMaterial& mat) {
  if (!mat.derivatives) fail(ErrorKind::invalid_argument, "material '" + mat.name + "' has no energy derivatives");
}

void require_incompressible(double j, const char* what) {
  if (std::fabs(j - 1.0) > kIncompressibilityTol)
    fail(ErrorKind::incompressibility, std::string(what) + ": |J - 1| = " + std::to_string(std::fabs(j - 1.0)) +
                                           " exceeds tolerance");
}

Mat3 isotropic_incompressible_part(const EnergyDerivatives& d, const Kinematics& k, double p) {
  return (-p) * k.spatial.inverse().matrix() + (2.0 * d.w1) * k.b_sharp.matrix() -
         (2.0 * d.w2) * k.c_sharp.matrix();
}

Mat3 isotropic_compressible_bracket(const EnergyDerivatives& d, const Kinematics& k) {
  const auto& inv = k.inv;
  return (inv.i2 * d.w2 + inv.i3 * d.w3) * k.spatial.inverse().matrix() + d.w1 * k.b_sharp.matrix() -
         (inv.i3 * d.w2) * k.c_sharp.matrix();
}

/// n (x) n and l = n (x) (b g n) + (b g n) (x) n.
std::pair<Mat3, Mat3> fiber_terms(const Kinematics& k, const Vec<3>& fiber) {
  const Vec<3> n = k.f * fiber;
  const Vec<3> bn = k.b_sharp.matrix() * k.spatial.flat(n);
  return {outer(n, n), outer(n, bn) + outer(bn, n)};
}

}  // namespace

StressState cauchy_incompressible_isotropic(const BulkMaterial& mat, const Kinematics& k, double p) {
  require_material(mat);
  require_incompressible(k.j, "cauchy_incompressible_isotropic");
  const EnergyDerivatives d = mat.derivatives(bulk_invariants(k, mat.fiber));
  return {SymTensor3(isotropic_incompressible_part(d, k, p), Variance::contravariant), p};
}

StressState cauchy_compressible_isotropic(const BulkMaterial& mat, const Kinematics& k) {
  require_material(mat);
  if (!(k.inv.i3 > 0.0)) fail(ErrorKind::domain, "cauchy_compressible_isotropic: I3 <= 0");
  const EnergyDerivatives d = mat.derivatives(bulk_invariants(k, mat.fiber));
  return {SymTensor3((2.0 / std::sqrt(k.inv.i3)) * isotropic_compressible_bracket(d, k), Variance::contravariant),
          std::nullopt};
}

StressState cauchy_transversely_isotropic(const BulkMaterial& mat, const Kinematics& k, double p) {
  require_material(mat);
  const double nn = k.material.inner(mat.fiber, mat.fiber);
  if (std::fabs(nn - 1.0) > 1e-12) fail(ErrorKind::normalization, "fiber direction is not G-unit");
  const EnergyDerivatives d = mat.derivatives(bulk_invariants(k, mat.fiber));
  const bool incompressible = mat.model == BulkModel::transversely_isotropic_incompressible ||
                              mat.model == BulkModel::incompressible_isotropic;
  if (incompressible) {
    require_incompressible(k.j, "cauchy_transversely_isotropic");
    Mat3 s = isotropic_incompressible_part(d, k, p);
    if (d.w4 != 0.0 || d.w5 != 0.0) {
      const auto [nn_t, ell] = fiber_terms(k, mat.fiber);
      s = s + (2.0 * d.w4) * nn_t + (2.0 * d.w5) * ell;
    }
    return {SymTensor3(s, Variance::contravariant), p};
  }
  if (!(k.inv.i3 > 0.0)) fail(ErrorKind::domain, "cauchy_transversely_isotropic: I3 <= 0");
  Mat3 bracket = isotropic_compressible_bracket(d, k);
  if (d.w4 != 0.0 || d.w5 != 0.0) {
    const auto [nn_t, ell] = fiber_terms(k, mat.fiber);
    bracket = bracket + d.w4 * nn_t + d.w5 * ell;
  }
  return {SymTensor3((2.0 / std::sqrt(k.inv.i3)) * bracket, Variance::contravariant), std::nullopt};
}

StressState fluid_stress(const BulkMaterial& mat, double j, const Metric3& spatial) {
  if (mat.model != BulkModel::hyperelastic_fluid || !mat.fluid_dw)
    fail(ErrorKind::unsupported_model, "fluid_stress needs a hyperelastic fluid");
  if (!(j > 0.0)) fail(ErrorKind::domain, "fluid_stress: J <= 0");
  const double dw = mat.fluid_dw(j);
  return {spatial.inverse().scaled(dw), dw};
}

StressState cauchy_stress(const BulkMaterial& mat, const Kinematics& k, double p) {
  switch (mat.model) {
    case BulkModel::incompressible_isotropic: return cauchy_incompressible_isotropic(mat, k, p);
    case BulkModel::compressible_isotropic: return cauchy_compressible_isotropic(mat, k);
    case BulkModel::transversely_isotropic_compressible:
    case BulkModel::transversely_isotropic_incompressible: return cauchy_transversely_isotropic(mat, k, p);
    case BulkModel::hyperelastic_fluid: return fluid_stress(mat, k.j, k.spatial);
  }
  fail(ErrorKind::unsupported_model, "unknown bulk model");
}

SurfaceStressState surface_cauchy_isotropic(const SurfaceMaterial& mat, const SurfaceKinematics& k) {
  if (!mat.derivatives) fail(ErrorKind::invalid_argument, "surface material '" + mat.name + "' has no derivatives");
  if (!(k.inv.i2 > 0.0)) fail(ErrorKind::domain, "surface_cauchy_isotropic: Ibar2 <= 0");
  const SurfaceDerivatives d = mat.derivatives(k.inv);
  const Mat2 s = (k.inv.i2 * d.w2) * k.spatial.inverse().matrix() + d.w1 * k.b_sharp.matrix();
  return {SymTensor2((2.0 / std::sqrt(k.inv.i2)) * s, Variance::contravariant), std::nullopt};
}

SurfaceStressState surface_cauchy_incompressible(const SurfaceMaterial& mat, const SurfaceKinematics& k, double pbar) {
  if (!mat.derivatives) fail(ErrorKind::invalid_argument, "surface material '" + mat.name + "' has no derivatives");
  require_incompressible(k.jbar, "surface_cauchy_incompressible");
  const SurfaceDerivatives d = mat.derivatives(k.inv);
  const Mat2 s = (-pbar) * k.spatial.inverse().matrix() + (2.0 * d.w1) * k.b_sharp.matrix();
  return {SymTensor2(s, Variance::contravariant), pbar};
}

TwoPointMap3 first_pk(const SymTensor3& sigma, const Mat3& f, const Metric3& material, const Metric3& spatial) {
  if (sigma.variance() != Variance::contravariant) fail(ErrorKind::invalid_argument, "first_pk expects sigma as (2,0)");
  require_orientation_preserving(f);
  const double j = std::sqrt(spatial.det() / material.det()) * determinant(f);
  return {j * (sigma.matrix() * transpose(inverse(f))), "reference", "current"};
}

SymTensor3 second_pk(const TwoPointMap3& p, const Mat3& f) {
  return SymTensor3(inverse(f) * p.m, Variance::contravariant);
}

Vec<3> traction(const TwoPointMap3& p, const Vec<3>& normal) { return p.m * normal; }

// -- finite-difference validation ----------------------------------------------

namespace {

template <std::size_t N, typename EnergyOfC>
Mat<N> fd_second_pk(const Mat<N>& c, double step, EnergyOfC&& energy) {
  Mat<N> s;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      Mat<N> cp = c, cm = c;
      cp(a, b) += step;
      cm(a, b) -= step;
      if (a != b) {
        cp(b, a) += step;
        cm(b, a) -= step;
      }
      const double dw = (energy(cp) - energy(cm)) / (2.0 * step);
      // Off-diagonal perturbations move both C_ab and C_ba.
      s(a, b) = s(b, a) = a == b ? 2.0 * dw : dw;
    }
  return s;
}

}  // namespace

double energy_fd_check(const BulkMaterial& mat, const Kinematics& k, double step) {
  if (!mat.energy) fail(ErrorKind::unsupported_model, "energy_fd_check needs an energy callable");
  const Metric3& gm = k.material;
  auto energy = [&](const Mat3& c) {
    const SymTensor3 cs(c, Variance::covariant);
    const PrincipalInvariants p = principal_invariants(cs, gm);
    const Vec<3> cn = c * mat.fiber;
    return mat.energy({p.i1, p.i2, p.i3, dot(mat.fiber, cn), dot(cn, gm.inverse().matrix() * cn)});
  };
  const Mat3 s = fd_second_pk<3>(k.c_flat.matrix(), step, energy);
  const Mat3 sigma_fd = (1.0 / k.j) * (k.f * s * transpose(k.f));

  double p = 0.0;
  if (mat.incompressible()) p = -2.0 * k.inv.i2 * mat.derivatives(bulk_invariants(k, mat.fiber)).w2;
  const Mat3 sigma = cauchy_stress(mat, k, p).sigma.matrix();
  return max_abs(sigma - sigma_fd) / std::fmax(max_abs(sigma_fd), 1e-300);
}

double energy_fd_check(const SurfaceMaterial& mat, const SurfaceKinematics& k, double step) {
  if (!mat.energy) fail(ErrorKind::unsupported_model, "energy_fd_check needs an energy callable");
  auto energy = [&](const Mat2& c) { return mat.energy(surface_invariants(SymTensor2(c, Variance::covariant), k.material)); };
  const Mat2 s = fd_second_pk<2>(k.c_flat.matrix(), step, energy);
  const Mat2 sigma_fd = (1.0 / k.jbar) * (k.f * s * transpose(k.f));

  Mat2 sigma;
  if (mat.model == SurfaceModel::incompressible_isotropic) {
    const double pbar = -2.0 * k.inv.i2 * mat.derivatives(k.inv).w2;
    sigma = surface_cauchy_incompressible(mat, k, pbar).sigma.matrix();
  } else {
    sigma = surface_cauchy_isotropic(mat, k).sigma.matrix();
  }
  return max_abs(sigma - sigma_fd) / std::fmax(max_abs(sigma_fd), 1e-300);
}

double fluid_fd_check(const BulkMaterial& mat, double j, double step) {
  if (mat.model != BulkModel::hyperelastic_fluid || !mat.fluid_energy || !mat.fluid_dw)
    fail(ErrorKind::unsupported_model, "fluid_fd_check needs a hyperelastic fluid with an energy");
  if (!(j - step > 0.0)) fail(ErrorKind::domain, "fluid_fd_check: stencil reaches J <= 0");
  const double fd = (mat.fluid_energy(j + step) - mat.fluid_energy(j - step)) / (2.0 * step);
  return std::fabs(mat.fluid_dw(j) - fd);
}

}  // namespace elastosurf
