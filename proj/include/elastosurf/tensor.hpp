/**
 * @file tensor.hpp
 * @brief Fixed-size 2x2 / 3x3 tensor kernel with explicit metrics.
 *
 * Components are always coordinate components in some chart. Index position
 * is tracked by a variance tag; raising and lowering go through an explicit
 * Metric rather than assuming an orthonormal basis. Mixed (1,1) tensors are
 * stored as full matrices t^A_B with the first index up.
 */
#ifndef ELASTOSURF_TENSOR_HPP
#define ELASTOSURF_TENSOR_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "elastosurf/errors.hpp"

namespace elastosurf {

template <std::size_t N>
using Vec = std::array<double, N>;

/// Dense row-major R x C matrix of components.
template <std::size_t R, std::size_t C = R>
struct Mat {
  std::array<double, R * C> a{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return a[i * C + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a[i * C + j]; }

  static constexpr Mat identity()
    requires(R == C)
  {
    Mat m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Mat diagonal(const Vec<R>& d)
    requires(R == C)
  {
    Mat m;
    for (std::size_t i = 0; i < R; ++i) m(i, i) = d[i];
    return m;
  }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

template <std::size_t R, std::size_t C>
constexpr Mat<R, C> operator+(const Mat<R, C>& x, const Mat<R, C>& y) {
  Mat<R, C> z;
  for (std::size_t k = 0; k < R * C; ++k) z.a[k] = x.a[k] + y.a[k];
  return z;
}

template <std::size_t R, std::size_t C>
constexpr Mat<R, C> operator-(const Mat<R, C>& x, const Mat<R, C>& y) {
  Mat<R, C> z;
  for (std::size_t k = 0; k < R * C; ++k) z.a[k] = x.a[k] - y.a[k];
  return z;
}

template <std::size_t R, std::size_t C>
constexpr Mat<R, C> operator*(double s, const Mat<R, C>& x) {
  Mat<R, C> z;
  for (std::size_t k = 0; k < R * C; ++k) z.a[k] = s * x.a[k];
  return z;
}

template <std::size_t R, std::size_t K, std::size_t C>
constexpr Mat<R, C> operator*(const Mat<R, K>& x, const Mat<K, C>& y) {
  Mat<R, C> z;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < K; ++k) s += x(i, k) * y(k, j);
      z(i, j) = s;
    }
  return z;
}

template <std::size_t R, std::size_t C>
constexpr Vec<R> operator*(const Mat<R, C>& x, const Vec<C>& v) {
  Vec<R> out{};
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out[i] += x(i, j) * v[j];
  return out;
}

template <std::size_t R, std::size_t C>
constexpr Mat<C, R> transpose(const Mat<R, C>& x) {
  Mat<C, R> t;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) t(j, i) = x(i, j);
  return t;
}

template <std::size_t N>
constexpr double trace(const Mat<N>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += x(i, i);
  return s;
}

template <std::size_t R, std::size_t C>
double max_abs(const Mat<R, C>& x) {
  double m = 0.0;
  for (double v : x.a) m = std::fmax(m, std::fabs(v));
  return m;
}

template <std::size_t N>
constexpr double dot(const Vec<N>& u, const Vec<N>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += u[i] * v[i];
  return s;
}

template <std::size_t N>
constexpr Mat<N> outer(const Vec<N>& u, const Vec<N>& v) {
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = u[i] * v[j];
  return m;
}

constexpr double determinant(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

constexpr double determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Cofactor inverse. Throws ErrorKind::singularity on a zero determinant.
Mat2 inverse(const Mat2& m);
Mat3 inverse(const Mat3& m);

enum class Variance { covariant, contravariant, mixed };

const char* to_string(Variance v) noexcept;

/// Symmetric (0,2) or (2,0) tensor in packed upper-triangular storage.
template <std::size_t N>
class SymTensor {
 public:
  static constexpr std::size_t packed_size = N * (N + 1) / 2;

  SymTensor() = default;

  /// Symmetrizes `m`; components that differ by more than 1e-12 relative to
  /// the largest entry are rejected.
  SymTensor(const Mat<N>& m, Variance v) : variance_(v) {
    if (v == Variance::mixed) fail(ErrorKind::invalid_argument, "SymTensor cannot carry mixed variance");
    const double scale = std::fmax(max_abs(m), 1e-300);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) {
        if (std::fabs(m(i, j) - m(j, i)) > 1e-12 * scale)
          fail(ErrorKind::invalid_argument, "SymTensor: components are not symmetric");
        c_[index(i, j)] = 0.5 * (m(i, j) + m(j, i));
      }
  }

  static SymTensor diagonal(const Vec<N>& d, Variance v) { return SymTensor(Mat<N>::diagonal(d), v); }
  static SymTensor identity(Variance v) { return SymTensor(Mat<N>::identity(), v); }

  double operator()(std::size_t i, std::size_t j) const { return c_[index(i, j)]; }
  Variance variance() const noexcept { return variance_; }
  const std::array<double, packed_size>& packed() const noexcept { return c_; }

  Mat<N> matrix() const {
    Mat<N> m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  SymTensor scaled(double s) const {
    SymTensor t = *this;
    for (double& v : t.c_) v *= s;
    return t;
  }

 private:
  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * N - i * (i + 1) / 2 + j;
  }

  std::array<double, packed_size> c_{};
  Variance variance_ = Variance::covariant;
};

using SymTensor2 = SymTensor<2>;
using SymTensor3 = SymTensor<3>;

/// (1,1) tensor with components t^A_B (row = upper index).
template <std::size_t N>
struct MixedTensor {
  Mat<N> m;

  double operator()(std::size_t i, std::size_t j) const { return m(i, j); }
  static MixedTensor identity() { return {Mat<N>::identity()}; }
};

using MixedTensor2 = MixedTensor<2>;
using MixedTensor3 = MixedTensor<3>;

template <std::size_t N>
double trace(const MixedTensor<N>& t) {
  return trace(t.m);
}

/// Symmetric positive-definite (0,2) tensor with its cached inverse and
/// determinant.
template <std::size_t N>
class Metric {
 public:
  /// Rejects tensors whose leading principal minors are not all above
  /// 1e-14 * scale^k, scale being the largest diagonal magnitude.
  explicit Metric(const SymTensor<N>& g);
  explicit Metric(const Mat<N>& g) : Metric(SymTensor<N>(g, Variance::covariant)) {}

  static Metric identity() { return Metric(Mat<N>::identity()); }
  static Metric diagonal(const Vec<N>& d) { return Metric(Mat<N>::diagonal(d)); }

  const SymTensor<N>& covariant() const noexcept { return g_; }
  const SymTensor<N>& inverse() const noexcept { return inv_; }
  double det() const noexcept { return det_; }

  double operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

  /// Metric scaled by a positive conformal factor.
  Metric conformal(double factor) const;

  double inner(const Vec<N>& u, const Vec<N>& v) const { return dot(u, g_.matrix() * v); }
  double norm(const Vec<N>& u) const { return std::sqrt(inner(u, u)); }
  Vec<N> flat(const Vec<N>& u) const { return g_.matrix() * u; }
  Vec<N> sharp(const Vec<N>& w) const { return inv_.matrix() * w; }

 private:
  SymTensor<N> g_;
  SymTensor<N> inv_;
  double det_ = 1.0;
};

using Metric2 = Metric<2>;
using Metric3 = Metric<3>;

/// Two-point map F^a_A between tangent spaces of two charts.
template <std::size_t R, std::size_t C = R>
struct TwoPointMap {
  Mat<R, C> m;
  std::string source = "reference";
  std::string target = "current";

  double operator()(std::size_t a, std::size_t A) const { return m(a, A); }
};

using TwoPointMap3 = TwoPointMap<3>;
using TwoPointMap2 = TwoPointMap<2>;

/// Throws ErrorKind::singularity when det F <= 0.
void require_orientation_preserving(const Mat3& f);
void require_orientation_preserving(const Mat2& f);

// -- index gymnastics -------------------------------------------------------

/// t^A_B = G^AM t_MB.
template <std::size_t N>
MixedTensor<N> raise_index(const SymTensor<N>& t, const Metric<N>& g) {
  if (t.variance() != Variance::covariant) fail(ErrorKind::invalid_argument, "raise_index expects a (0,2) tensor");
  return {g.inverse().matrix() * t.matrix()};
}

/// t^AB = t^A_M G^MB.
template <std::size_t N>
SymTensor<N> raise_index(const MixedTensor<N>& t, const Metric<N>& g) {
  return SymTensor<N>(t.m * g.inverse().matrix(), Variance::contravariant);
}

/// t^A_B = t^AM G_MB.
template <std::size_t N>
MixedTensor<N> lower_index(const SymTensor<N>& t, const Metric<N>& g) {
  if (t.variance() != Variance::contravariant)
    fail(ErrorKind::invalid_argument, "lower_index expects a (2,0) tensor");
  return {t.matrix() * g.covariant().matrix()};
}

/// t_AB = G_AM t^M_B.
template <std::size_t N>
SymTensor<N> lower_index(const MixedTensor<N>& t, const Metric<N>& g) {
  return SymTensor<N>(g.covariant().matrix() * t.m, Variance::covariant);
}

// -- invariants -------------------------------------------------------------

struct PrincipalInvariants {
  double i1;
  double i2;
  double i3;
};

struct SurfaceInvariants {
  double i1;
  double i2;
};

/// Invariants of C relative to G: I1 = C_AB G^AB,
/// I2 = (I1^2 - C_MB C_NA G^AM G^BN) / 2, I3 = det C / det G.
PrincipalInvariants principal_invariants(const SymTensor3& c, const Metric3& g);

/// Ibar1 = Cbar_AB Gbar^AB, Ibar2 = det Cbar / det Gbar.
SurfaceInvariants surface_invariants(const SymTensor2& c, const Metric2& g);

/// Eigenvalues of a (1,1) tensor assumed to have a real spectrum, ascending.
/// Uses the trigonometric solution of the deviatoric characteristic cubic.
Vec<3> real_eigenvalues(const MixedTensor3& t);
Vec<2> real_eigenvalues(const MixedTensor2& t);

/// Principal square root U with U*U = t, for t diagonalizable with positive
/// eigenvalues (e.g. C = G^-1 C_flat). Built from the invariants of U via
/// Cayley-Hamilton, U = (C + i2 I)^-1 (i1 C + i3 I), so no eigenvectors are
/// formed and repeated eigenvalues need no special casing.
MixedTensor3 spd_sqrt(const MixedTensor3& t);
MixedTensor2 spd_sqrt(const MixedTensor2& t);

}  // namespace elastosurf

#endif  // ELASTOSURF_TENSOR_HPP
