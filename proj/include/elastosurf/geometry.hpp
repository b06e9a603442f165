/**
 * @file geometry.hpp
 * @brief Finite-difference differential geometry of metric fields and of
 *        surfaces sitting as coordinate slices of foliation charts.
 *
 * Sign conventions:
 *   Gamma^C_AB = 1/2 G^CK (G_KA,B + G_KB,A - G_AB,K)
 *   R^K_BCD    = d_C Gamma^K_DB - d_D Gamma^K_CB + Gamma^K_CM Gamma^M_DB - Gamma^K_DM Gamma^M_CB
 *   R_ABCD     = G_AK R^K_BCD            (round sphere: Rbar_1212 = r^2 sin^2 theta > 0)
 *   K_AB       = +1/2 dG_AB/dX^n on the slice, X^n the normal coordinate, so
 *                a sphere of radius r in (r, theta, phi) has K = +gbar / r.
 *
 * All derivatives are second-order central differences. Nested quantities
 * (Riemann components, covariant derivatives of K) difference already
 * differenced values, so round-off grows like eps / h^2.
 */
#ifndef ELASTOSURF_GEOMETRY_HPP
#define ELASTOSURF_GEOMETRY_HPP

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "elastosurf/tensor.hpp"

namespace elastosurf {

inline constexpr double kDefaultFdStep = 1e-5;

/// Metric-valued function on an N-dimensional chart. With `foliation` set,
/// coordinate `normal_axis` is the unit-normal direction of the slices
/// X^normal_axis = const, i.e. G_nA = 0 (A != n) and G_nn = 1 on each slice.
template <std::size_t N>
struct MetricField {
  std::function<Mat<N>(const Vec<N>&)> components;
  std::string chart;
  bool foliation = false;
  std::size_t normal_axis = N - 1;

  Metric<N> operator()(const Vec<N>& p) const { return Metric<N>(components(p)); }

  /// The two (N=3) tangent coordinate indices, in increasing order.
  std::array<std::size_t, N - 1> tangent_axes() const {
    std::array<std::size_t, N - 1> t{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (i != normal_axis) t[k++] = i;
    return t;
  }
};

using MetricField2 = MetricField<2>;
using MetricField3 = MetricField<3>;

/// Gamma^C_AB at a point, stored as symbols[C](A, B).
template <std::size_t N>
struct ChristoffelSymbols {
  std::array<Mat<N>, N> symbols{};

  double operator()(std::size_t c, std::size_t a, std::size_t b) const { return symbols[c](a, b); }
};

template <std::size_t N>
ChristoffelSymbols<N> christoffel(const MetricField<N>& field, const Vec<N>& point, double fd_step = kDefaultFdStep);

/// Lowered Riemann component R_abcd (convention in the file header).
template <std::size_t N>
double riemann(const MetricField<N>& field, const Vec<N>& point, std::array<std::size_t, 4> idx,
               double fd_step = kDefaultFdStep);

/// First fundamental form of the slice through `slice_point`: the tangent
/// block of the ambient metric as a field over the two tangent coordinates.
MetricField2 first_fundamental_form(const MetricField3& field, const Vec<3>& slice_point);

/// K_AB = 1/2 dG_AB/dX^n restricted to the slice, A, B tangent.
/// Throws ErrorKind::chart unless the field is a foliation chart at the point.
SymTensor2 second_fundamental_form(const MetricField3& field, const Vec<3>& surface_point,
                                   double fd_step = kDefaultFdStep);

/// R_1212 - (Rbar_1212 + K_12^2 - K_11 K_22), indices 1, 2 tangent.
double gauss_residual(const MetricField3& field, const Vec<3>& surface_point, double fd_step = kDefaultFdStep);

/// (R_1213 + K_11|2 - K_12|1, R_2123 + K_22|1 - K_12|2), 3 = normal.
/// With R_ABCD lowered on the first slot (the ordering that makes the Gauss
/// form above hold with Rbar_1212 > 0 on a sphere) the Codazzi equations read
/// R_1213 = K_12|1 - K_11|2; the often-quoted opposite sign belongs to the
/// <R(d_A, d_B) d_C, d_D> ordering.
std::pair<double, double> codazzi_residual(const MetricField3& field, const Vec<3>& surface_point,
                                           double fd_step = kDefaultFdStep);

/// pi^A_B = delta^A_B - N^A N_B. Throws ErrorKind::normalization unless
/// <N, N>_G = 1 to 1e-12.
MixedTensor3 projector(const Vec<3>& normal, const Metric3& metric);

/// G_par = G - N_flat (x) N_flat; degenerate along N.
SymTensor3 projected_metric(const Vec<3>& normal, const Metric3& metric);

/// J = sqrt(det g / det G) det F.
double jacobian(const Mat3& f, const Metric3& material, const Metric3& spatial);

/// Jbar = J ||F^-T N||_g, with F^-T N the spatial vector g^-1 F^-* N_flat.
double surface_jacobian(const Mat3& f, const Vec<3>& normal, const Metric3& material, const Metric3& spatial);

/// Jbar = J sqrt(N_flat . C_flat^-1 . N_flat); equal to surface_jacobian.
double surface_jacobian_via_cauchy_green(const Mat3& f, const Vec<3>& normal, const Metric3& material,
                                         const Metric3& spatial);

/// Deformed unit normal n = J F^-T N / Jbar.
Vec<3> deformed_normal(const Mat3& f, const Vec<3>& normal, const Metric3& material, const Metric3& spatial);

/// lambda_n = <F N, n>_g.
double normal_stretch(const Mat3& f, const Vec<3>& normal, const Vec<3>& deformed_unit_normal, const Metric3& spatial);

/// ||Jbar n - J F^-T N||_g.
double nanson_residual(const Mat3& f, const Vec<3>& normal, const Vec<3>& deformed_unit_normal,
                       const Metric3& material, const Metric3& spatial);

/// Analytic metric fields used as fixtures by the geometry diagnostics.
namespace charts {

MetricField3 euclidean_cartesian();
/// (r, theta, phi) with G = diag(1, r^2, r^2 sin^2 theta); slices r = const.
/// Points with |sin theta| < 1e-8 raise ErrorKind::chart.
MetricField3 euclidean_spherical();
/// (rho, phi, z) with G = diag(1, rho^2, 1); slices rho = const.
MetricField3 euclidean_cylindrical();
/// Warped product (r, theta, phi) with G = diag(1, f^2, f^2 sin^2 theta),
/// f(r) = r + a r^3. Curved for a != 0 while r stays a unit-speed normal.
MetricField3 warped_spherical(double a);
/// (theta, phi) with gbar = diag(r^2, r^2 sin^2 theta).
MetricField2 sphere_surface(double radius);

}  // namespace charts

struct GeometryCheckRow {
  std::string fixture;
  std::string check;
  double value;
};

/// Gauss, Codazzi, second-fundamental-form and Nanson residuals for the round
/// sphere (r = 1) and a cylinder (a = 1) in Euclidean space.
std::vector<GeometryCheckRow> geometry_check(double fd_step);

}  // namespace elastosurf

#endif  // ELASTOSURF_GEOMETRY_HPP
