#include "elastosurf/tensor.hpp"

#include <algorithm>
#include <numbers>

namespace elastosurf {

const char* to_string(Variance v) noexcept {
  switch (v) {
    case Variance::covariant: return "(0,2)";
    case Variance::contravariant: return "(2,0)";
    case Variance::mixed: return "(1,1)";
  }
  return "?";
}

Mat2 inverse(const Mat2& m) {
  const double d = determinant(m);
  if (d == 0.0 || !std::isfinite(d)) fail(ErrorKind::singularity, "inverse: singular 2x2 matrix");
  Mat2 r;
  r(0, 0) = m(1, 1) / d;
  r(0, 1) = -m(0, 1) / d;
  r(1, 0) = -m(1, 0) / d;
  r(1, 1) = m(0, 0) / d;
  return r;
}

Mat3 inverse(const Mat3& m) {
  const double d = determinant(m);
  if (d == 0.0 || !std::isfinite(d)) fail(ErrorKind::singularity, "inverse: singular 3x3 matrix");
  Mat3 r;
  r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
  r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
  r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
  r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
  r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
  r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
  r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
  r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
  r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
  return r;
}

void require_orientation_preserving(const Mat3& f) {
  const double d = determinant(f);
  if (!(d > 0.0)) fail(ErrorKind::singularity, "deformation gradient has det F <= 0");
}

void require_orientation_preserving(const Mat2& f) {
  const double d = determinant(f);
  if (!(d > 0.0)) fail(ErrorKind::singularity, "surface deformation gradient has det <= 0");
}

namespace {

template <std::size_t N>
double leading_minor(const Mat<N>& m, std::size_t k) {
  if (k == 1) return m(0, 0);
  if (k == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if constexpr (N == 3) return determinant(m);
  return 0.0;
}

}  // namespace

template <std::size_t N>
Metric<N>::Metric(const SymTensor<N>& g) : g_(g) {
  if (g.variance() != Variance::covariant) fail(ErrorKind::invalid_argument, "Metric expects a (0,2) tensor");
  const Mat<N> m = g.matrix();
  double scale = 0.0;
  for (std::size_t i = 0; i < N; ++i) scale = std::fmax(scale, std::fabs(m(i, i)));
  if (!std::isfinite(scale)) fail(ErrorKind::definiteness, "metric has non-finite components");
  double scale_k = 1.0;
  for (std::size_t k = 1; k <= N; ++k) {
    scale_k *= scale;
    const double minor = leading_minor(m, k);
    if (!(minor > 1e-14 * scale_k))
      fail(ErrorKind::definiteness, "metric is not positive definite (leading minor " + std::to_string(k) +
                                        " = " + std::to_string(minor) + ")");
  }
  det_ = determinant(m);
  inv_ = SymTensor<N>(elastosurf::inverse(m), Variance::contravariant);
}

template <std::size_t N>
Metric<N> Metric<N>::conformal(double factor) const {
  if (!(factor > 0.0)) fail(ErrorKind::definiteness, "conformal factor must be positive");
  return Metric(g_.scaled(factor));
}

template class Metric<2>;
template class Metric<3>;

PrincipalInvariants principal_invariants(const SymTensor3& c, const Metric3& g) {
  if (c.variance() != Variance::covariant) fail(ErrorKind::invalid_argument, "principal_invariants expects C as (0,2)");
  const Mat3 mixed = g.inverse().matrix() * c.matrix();
  const double i1 = trace(mixed);
  const double i2 = 0.5 * (i1 * i1 - trace(mixed * mixed));
  const double i3 = determinant(c.matrix()) / g.det();
  return {i1, i2, i3};
}

SurfaceInvariants surface_invariants(const SymTensor2& c, const Metric2& g) {
  if (c.variance() != Variance::covariant) fail(ErrorKind::invalid_argument, "surface_invariants expects Cbar as (0,2)");
  const Mat2 mixed = g.inverse().matrix() * c.matrix();
  return {trace(mixed), determinant(c.matrix()) / g.det()};
}

Vec<3> real_eigenvalues(const MixedTensor3& t) {
  const double mean = trace(t.m) / 3.0;
  Mat3 dev = t.m;
  for (std::size_t i = 0; i < 3; ++i) dev(i, i) -= mean;
  // mu^3 - 3p mu - 2q = 0 for the deviator, p = tr(dev^2)/6, q = det(dev)/2.
  const double p = trace(dev * dev) / 6.0;
  if (!(p > 1e-30 * std::fmax(1.0, mean * mean))) return {mean, mean, mean};
  const double q = 0.5 * determinant(dev);
  const double sp = std::sqrt(p);
  const double ratio = std::clamp(q / (p * sp), -1.0, 1.0);
  const double phi = std::acos(ratio) / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  Vec<3> ev{mean + 2.0 * sp * std::cos(phi), mean + 2.0 * sp * std::cos(phi + third_turn),
            mean + 2.0 * sp * std::cos(phi - third_turn)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

Vec<2> real_eigenvalues(const MixedTensor2& t) {
  const double half_tr = 0.5 * trace(t.m);
  const double a = 0.5 * (t.m(0, 0) - t.m(1, 1));
  const double disc = a * a + t.m(0, 1) * t.m(1, 0);
  if (disc < 0.0) fail(ErrorKind::domain, "2x2 tensor has complex eigenvalues");
  const double r = std::sqrt(disc);
  // Larger-magnitude root first, then the product for the other (no cancellation).
  const double big = half_tr >= 0.0 ? half_tr + r : half_tr - r;
  const double small = big != 0.0 ? determinant(t.m) / big : 0.0;
  Vec<2> ev{big, small};
  std::sort(ev.begin(), ev.end());
  return ev;
}

MixedTensor3 spd_sqrt(const MixedTensor3& t) {
  const Vec<3> ev = real_eigenvalues(t);
  if (!(ev[0] > 0.0)) fail(ErrorKind::domain, "spd_sqrt: tensor has a non-positive eigenvalue");
  const double s0 = std::sqrt(ev[0]), s1 = std::sqrt(ev[1]), s2 = std::sqrt(ev[2]);
  const double i1 = s0 + s1 + s2;
  const double i2 = s0 * s1 + s0 * s2 + s1 * s2;
  const double i3 = s0 * s1 * s2;
  const Mat3 id = Mat3::identity();
  return {inverse(t.m + i2 * id) * (i1 * t.m + i3 * id)};
}

MixedTensor2 spd_sqrt(const MixedTensor2& t) {
  const Vec<2> ev = real_eigenvalues(t);
  if (!(ev[0] > 0.0)) fail(ErrorKind::domain, "spd_sqrt: tensor has a non-positive eigenvalue");
  const double root_det = std::sqrt(ev[0] * ev[1]);
  const double denom = std::sqrt(ev[0] + ev[1] + 2.0 * root_det);
  return {(1.0 / denom) * (t.m + root_det * Mat2::identity())};
}

}  // namespace elastosurf
