#include "elastosurf/geometry.hpp"

#include <cmath>

namespace elastosurf {

namespace {

template <std::size_t N>
Vec<N> shifted(Vec<N> p, std::size_t axis, double h) {
  p[axis] += h;
  return p;
}

template <std::size_t N>
void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorKind::invalid_argument, "finite-difference step must be positive");
}

/// Metric components at a stencil point, SPD-checked.
template <std::size_t N>
Mat<N> checked(const MetricField<N>& field, const Vec<N>& p) {
  return field(p).covariant().matrix();
}

/// dG[k] = dG/dX^k by central differences.
template <std::size_t N>
std::array<Mat<N>, N> metric_gradient(const MetricField<N>& field, const Vec<N>& p, double h) {
  std::array<Mat<N>, N> dg{};
  for (std::size_t k = 0; k < N; ++k)
    dg[k] = (0.5 / h) * (checked(field, shifted(p, k, h)) - checked(field, shifted(p, k, -h)));
  return dg;
}

Vec<3> embed(const MetricField3& field, const Vec<3>& slice_point, const Vec<2>& q) {
  const auto t = field.tangent_axes();
  Vec<3> p = slice_point;
  p[t[0]] = q[0];
  p[t[1]] = q[1];
  return p;
}

void require_foliation(const MetricField3& field, const Vec<3>& p) {
  if (!field.foliation)
    fail(ErrorKind::chart, "chart '" + field.chart + "' is not a foliation chart; second fundamental form undefined");
  const Mat3 g = field.components(p);
  const std::size_t n = field.normal_axis;
  for (std::size_t a = 0; a < 3; ++a) {
    if (a == n) continue;
    if (std::fabs(g(n, a)) > 1e-10 * std::fmax(1.0, std::fabs(g(a, a))))
      fail(ErrorKind::chart, "chart '" + field.chart + "': normal coordinate is not orthogonal to the slice");
  }
  if (std::fabs(g(n, n) - 1.0) > 1e-10)
    fail(ErrorKind::chart, "chart '" + field.chart + "': normal coordinate is not unit speed");
}

}  // namespace

template <std::size_t N>
ChristoffelSymbols<N> christoffel(const MetricField<N>& field, const Vec<N>& point, double fd_step) {
  require_step<N>(fd_step);
  const Mat<N> ginv = field(point).inverse().matrix();
  const auto dg = metric_gradient(field, point, fd_step);
  ChristoffelSymbols<N> out;
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a; b < N; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < N; ++k) s += ginv(c, k) * (dg[b](k, a) + dg[a](k, b) - dg[k](a, b));
        out.symbols[c](a, b) = out.symbols[c](b, a) = 0.5 * s;
      }
  return out;
}

template <std::size_t N>
double riemann(const MetricField<N>& field, const Vec<N>& point, std::array<std::size_t, 4> idx, double fd_step) {
  require_step<N>(fd_step);
  const auto [a, b, c, d] = idx;
  if (a >= N || b >= N || c >= N || d >= N) fail(ErrorKind::invalid_argument, "riemann: index out of range");
  const auto gamma = christoffel(field, point, fd_step);
  const auto gc_plus = christoffel(field, shifted(point, c, fd_step), fd_step);
  const auto gc_minus = christoffel(field, shifted(point, c, -fd_step), fd_step);
  const auto gd_plus = christoffel(field, shifted(point, d, fd_step), fd_step);
  const auto gd_minus = christoffel(field, shifted(point, d, -fd_step), fd_step);
  const Mat<N> g = field.components(point);

  double out = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    double r = (gc_plus(k, d, b) - gc_minus(k, d, b) - gd_plus(k, c, b) + gd_minus(k, c, b)) / (2.0 * fd_step);
    for (std::size_t m = 0; m < N; ++m) r += gamma(k, c, m) * gamma(m, d, b) - gamma(k, d, m) * gamma(m, c, b);
    out += g(a, k) * r;
  }
  return out;
}

template ChristoffelSymbols<2> christoffel(const MetricField<2>&, const Vec<2>&, double);
template ChristoffelSymbols<3> christoffel(const MetricField<3>&, const Vec<3>&, double);
template double riemann(const MetricField<2>&, const Vec<2>&, std::array<std::size_t, 4>, double);
template double riemann(const MetricField<3>&, const Vec<3>&, std::array<std::size_t, 4>, double);

MetricField2 first_fundamental_form(const MetricField3& field, const Vec<3>& slice_point) {
  MetricField2 surface;
  surface.chart = field.chart + "|slice";
  const auto t = field.tangent_axes();
  surface.components = [field, slice_point, t](const Vec<2>& q) {
    const Mat3 g = field.components(embed(field, slice_point, q));
    Mat2 gbar;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) gbar(i, j) = g(t[i], t[j]);
    return gbar;
  };
  return surface;
}

SymTensor2 second_fundamental_form(const MetricField3& field, const Vec<3>& surface_point, double fd_step) {
  require_step<3>(fd_step);
  require_foliation(field, surface_point);
  const std::size_t n = field.normal_axis;
  const auto t = field.tangent_axes();
  const Mat3 dg = (0.5 / fd_step) * (field.components(shifted(surface_point, n, fd_step)) -
                                     field.components(shifted(surface_point, n, -fd_step)));
  Mat2 k;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) k(i, j) = 0.5 * dg(t[i], t[j]);
  return SymTensor2(k, Variance::covariant);
}

double gauss_residual(const MetricField3& field, const Vec<3>& surface_point, double fd_step) {
  const auto t = field.tangent_axes();
  const SymTensor2 k = second_fundamental_form(field, surface_point, fd_step);
  const double r_ambient = riemann(field, surface_point, {t[0], t[1], t[0], t[1]}, fd_step);
  const MetricField2 surface = first_fundamental_form(field, surface_point);
  const Vec<2> q{surface_point[t[0]], surface_point[t[1]]};
  const double r_surface = riemann(surface, q, {0, 1, 0, 1}, fd_step);
  return r_ambient - (r_surface + k(0, 1) * k(0, 1) - k(0, 0) * k(1, 1));
}

std::pair<double, double> codazzi_residual(const MetricField3& field, const Vec<3>& surface_point, double fd_step) {
  const auto t = field.tangent_axes();
  const std::size_t n = field.normal_axis;
  const SymTensor2 k = second_fundamental_form(field, surface_point, fd_step);
  std::array<SymTensor2, 2> dk;  // dk[c] = dK/dX^{t[c]}
  for (std::size_t c = 0; c < 2; ++c) {
    const Mat2 kp = second_fundamental_form(field, shifted(surface_point, t[c], fd_step), fd_step).matrix();
    const Mat2 km = second_fundamental_form(field, shifted(surface_point, t[c], -fd_step), fd_step).matrix();
    dk[c] = SymTensor2((0.5 / fd_step) * (kp - km), Variance::covariant);
  }
  const MetricField2 surface = first_fundamental_form(field, surface_point);
  const auto gbar = christoffel(surface, Vec<2>{surface_point[t[0]], surface_point[t[1]]}, fd_step);

  // K_ab|c = K_ab,c - Gbar^m_ac K_mb - Gbar^m_bc K_am
  auto cov = [&](std::size_t a, std::size_t b, std::size_t c) {
    double v = dk[c](a, b);
    for (std::size_t m = 0; m < 2; ++m) v -= gbar(m, a, c) * k(m, b) + gbar(m, b, c) * k(a, m);
    return v;
  };
  const double r1213 = riemann(field, surface_point, {t[0], t[1], t[0], n}, fd_step);
  const double r2123 = riemann(field, surface_point, {t[1], t[0], t[1], n}, fd_step);
  return {r1213 + (cov(0, 0, 1) - cov(0, 1, 0)), r2123 + (cov(1, 1, 0) - cov(0, 1, 1))};
}

namespace {

void require_unit(const Vec<3>& normal, const Metric3& metric) {
  const double nn = metric.inner(normal, normal);
  if (std::fabs(nn - 1.0) > 1e-12)
    fail(ErrorKind::normalization, "normal is not unit in its metric (<N,N> = " + std::to_string(nn) + ")");
}

}  // namespace

MixedTensor3 projector(const Vec<3>& normal, const Metric3& metric) {
  require_unit(normal, metric);
  return {Mat3::identity() - outer(normal, metric.flat(normal))};
}

SymTensor3 projected_metric(const Vec<3>& normal, const Metric3& metric) {
  require_unit(normal, metric);
  const Vec<3> nf = metric.flat(normal);
  return SymTensor3(metric.covariant().matrix() - outer(nf, nf), Variance::covariant);
}

double jacobian(const Mat3& f, const Metric3& material, const Metric3& spatial) {
  require_orientation_preserving(f);
  return std::sqrt(spatial.det() / material.det()) * determinant(f);
}

namespace {

/// Spatial vector g^-1 F^-* N_flat.
Vec<3> inverse_transpose_image(const Mat3& f, const Vec<3>& normal, const Metric3& material, const Metric3& spatial) {
  return spatial.sharp(transpose(inverse(f)) * material.flat(normal));
}

}  // namespace

double surface_jacobian(const Mat3& f, const Vec<3>& normal, const Metric3& material, const Metric3& spatial) {
  require_unit(normal, material);
  return jacobian(f, material, spatial) * spatial.norm(inverse_transpose_image(f, normal, material, spatial));
}

double surface_jacobian_via_cauchy_green(const Mat3& f, const Vec<3>& normal, const Metric3& material,
                                         const Metric3& spatial) {
  require_unit(normal, material);
  const Mat3 c_flat = transpose(f) * spatial.covariant().matrix() * f;
  const Vec<3> nf = material.flat(normal);
  return jacobian(f, material, spatial) * std::sqrt(dot(nf, inverse(c_flat) * nf));
}

Vec<3> deformed_normal(const Mat3& f, const Vec<3>& normal, const Metric3& material, const Metric3& spatial) {
  const Vec<3> v = inverse_transpose_image(f, normal, material, spatial);
  const double len = spatial.norm(v);
  return {v[0] / len, v[1] / len, v[2] / len};
}

double normal_stretch(const Mat3& f, const Vec<3>& normal, const Vec<3>& deformed_unit_normal, const Metric3& spatial) {
  return spatial.inner(f * normal, deformed_unit_normal);
}

double nanson_residual(const Mat3& f, const Vec<3>& normal, const Vec<3>& deformed_unit_normal,
                       const Metric3& material, const Metric3& spatial) {
  require_unit(deformed_unit_normal, spatial);
  const double j = jacobian(f, material, spatial);
  const double jbar = surface_jacobian(f, normal, material, spatial);
  const Vec<3> v = inverse_transpose_image(f, normal, material, spatial);
  Vec<3> diff;
  for (std::size_t i = 0; i < 3; ++i) diff[i] = jbar * deformed_unit_normal[i] - j * v[i];
  return spatial.norm(diff);
}

namespace charts {

namespace {

double checked_sin(double theta, const char* chart) {
  const double s = std::sin(theta);
  if (std::fabs(s) < 1e-8) fail(ErrorKind::chart, std::string(chart) + ": polar singularity (sin theta ~ 0)");
  return s;
}

}  // namespace

MetricField3 euclidean_cartesian() {
  MetricField3 f;
  f.chart = "cartesian";
  f.foliation = true;
  f.normal_axis = 2;
  f.components = [](const Vec<3>&) { return Mat3::identity(); };
  return f;
}

MetricField3 euclidean_spherical() {
  MetricField3 f;
  f.chart = "spherical";
  f.foliation = true;
  f.normal_axis = 0;
  f.components = [](const Vec<3>& p) {
    const double s = checked_sin(p[1], "spherical");
    return Mat3::diagonal({1.0, p[0] * p[0], p[0] * p[0] * s * s});
  };
  return f;
}

MetricField3 euclidean_cylindrical() {
  MetricField3 f;
  f.chart = "cylindrical";
  f.foliation = true;
  f.normal_axis = 0;
  f.components = [](const Vec<3>& p) { return Mat3::diagonal({1.0, p[0] * p[0], 1.0}); };
  return f;
}

MetricField3 warped_spherical(double a) {
  MetricField3 f;
  f.chart = "warped-spherical";
  f.foliation = true;
  f.normal_axis = 0;
  f.components = [a](const Vec<3>& p) {
    const double s = checked_sin(p[1], "warped-spherical");
    const double w = p[0] + a * p[0] * p[0] * p[0];
    return Mat3::diagonal({1.0, w * w, w * w * s * s});
  };
  return f;
}

MetricField2 sphere_surface(double radius) {
  if (!(radius > 0.0)) fail(ErrorKind::invalid_argument, "sphere radius must be positive");
  MetricField2 f;
  f.chart = "sphere";
  f.components = [radius](const Vec<2>& q) {
    const double s = checked_sin(q[0], "sphere");
    return Mat2::diagonal({radius * radius, radius * radius * s * s});
  };
  return f;
}

}  // namespace charts

std::vector<GeometryCheckRow> geometry_check(double fd_step) {
  std::vector<GeometryCheckRow> rows;

  const MetricField3 sph = charts::euclidean_spherical();
  const Vec<3> on_sphere{1.0, 0.9, 0.4};
  rows.push_back({"sphere", "gauss", gauss_residual(sph, on_sphere, fd_step)});
  const auto [s1, s2] = codazzi_residual(sph, on_sphere, fd_step);
  rows.push_back({"sphere", "codazzi_1", s1});
  rows.push_back({"sphere", "codazzi_2", s2});
  {
    // K should equal gbar / r on a sphere of radius r.
    const SymTensor2 k = second_fundamental_form(sph, on_sphere, fd_step);
    const Mat2 gbar = first_fundamental_form(sph, on_sphere).components({on_sphere[1], on_sphere[2]});
    rows.push_back({"sphere", "k_minus_g_over_r", max_abs(k.matrix() - (1.0 / on_sphere[0]) * gbar)});
  }
  {
    // Radial shell map r^3 = R^3 + c, F = diag(R^2 / r^2, 1, 1).
    const double big_r = 1.0, r = std::cbrt(big_r * big_r * big_r + 0.7);
    const double s = std::sin(on_sphere[1]);
    const Metric3 material = Metric3::diagonal({1.0, big_r * big_r, big_r * big_r * s * s});
    const Metric3 spatial = Metric3::diagonal({1.0, r * r, r * r * s * s});
    const Mat3 f = Mat3::diagonal({big_r * big_r / (r * r), 1.0, 1.0});
    const Vec<3> n0{1.0, 0.0, 0.0};
    rows.push_back({"sphere", "nanson", nanson_residual(f, n0, deformed_normal(f, n0, material, spatial), material,
                                                        spatial)});
  }

  const MetricField3 cyl = charts::euclidean_cylindrical();
  const Vec<3> on_cylinder{1.0, 0.3, 0.2};
  rows.push_back({"cylinder", "gauss", gauss_residual(cyl, on_cylinder, fd_step)});
  const auto [c1, c2] = codazzi_residual(cyl, on_cylinder, fd_step);
  rows.push_back({"cylinder", "codazzi_1", c1});
  rows.push_back({"cylinder", "codazzi_2", c2});
  {
    // K = diag(a, 0) in (phi, z) on the cylinder rho = a.
    const Mat2 k = second_fundamental_form(cyl, on_cylinder, fd_step).matrix();
    rows.push_back({"cylinder", "k_minus_diag_a_0", max_abs(k - Mat2::diagonal({on_cylinder[0], 0.0}))});
  }
  {
    // Inflation rho -> lambda rho with axial stretch; F = diag(lambda, 1, lz).
    const double lambda = 1.3, lz = 0.8;
    const Metric3 material = Metric3::diagonal({1.0, 1.0, 1.0});
    const Metric3 spatial = Metric3::diagonal({1.0, lambda * lambda, 1.0});
    const Mat3 f = Mat3::diagonal({lambda, 1.0, lz});
    const Vec<3> n0{1.0, 0.0, 0.0};
    rows.push_back({"cylinder", "nanson", nanson_residual(f, n0, deformed_normal(f, n0, material, spatial), material,
                                                          spatial)});
  }
  return rows;
}

}  // namespace elastosurf
