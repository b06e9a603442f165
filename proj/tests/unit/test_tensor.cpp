#include <gtest/gtest.h>

#include "elastosurf/tensor.hpp"
#include "oracles.hpp"

using namespace elastosurf;

namespace {

void expect_mat_near(const Mat3& a, const Mat3& b, double tol) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(a(i, j), b(i, j), tol) << "(" << i << "," << j << ")";
}

}  // namespace

TEST(RaiseIndex, IdentityWithIdentityMetric) {
  const auto t = raise_index(SymTensor3::identity(Variance::covariant), Metric3::identity());
  expect_mat_near(t.m, Mat3::identity(), 0.0);
}

TEST(RaiseIndex, DiagonalMetric) {
  const auto t = raise_index(SymTensor3::diagonal({4, 1, 1}, Variance::covariant), Metric3::diagonal({2, 1, 1}));
  expect_mat_near(t.m, Mat3::diagonal({2, 1, 1}), 1e-15);
}

TEST(RaiseIndex, RejectsWrongVariance) {
  EXPECT_THROW(raise_index(SymTensor3::identity(Variance::contravariant), Metric3::identity()), Error);
}

TEST(RaiseIndex, TraceOfMixedIsMetricTrace) {
  oracle::Random rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Metric3 g(rng.spd<3>());
    const SymTensor3 t(rng.spd<3>(), Variance::covariant);
    const double metric_trace = [&] {
      double s = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += g.inverse()(i, j) * t(i, j);
      return s;
    }();
    EXPECT_NEAR(trace(raise_index(t, g)), metric_trace, 1e-12 * std::fabs(metric_trace));
  }
}

TEST(RaiseIndex, RoundTripIsIdentity) {
  oracle::Random rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Metric3 g(rng.spd<3>(1.0));
    const Mat3 a = rng.matrix<3>(-1, 1);
    const SymTensor3 t(a + transpose(a), Variance::covariant);
    const SymTensor3 up = raise_index(raise_index(t, g), g);
    EXPECT_EQ(up.variance(), Variance::contravariant);
    const SymTensor3 back = lower_index(lower_index(up, g), g);
    EXPECT_EQ(back.variance(), Variance::covariant);
    EXPECT_LT(max_abs(back.matrix() - t.matrix()), 1e-14 * std::fmax(1.0, max_abs(t.matrix())) * 10);
  }
}

TEST(Metric, InverseTimesMetricIsIdentity) {
  oracle::Random rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Metric3 g(rng.spd<3>());
    EXPECT_LT(max_abs(g.covariant().matrix() * g.inverse().matrix() - Mat3::identity()), 1e-12);
  }
}

TEST(Metric, RejectsIndefinite) {
  EXPECT_THROW(Metric3::diagonal({1, -1, 1}), Error);
  try {
    Metric3::diagonal({1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::definiteness);
  }
  // Nearly singular relative to its scale.
  Mat3 m = Mat3::identity();
  m(0, 1) = m(1, 0) = 1.0 - 1e-16;
  EXPECT_THROW(Metric3{m}, Error);
}

TEST(Metric, ConformalScaling) {
  const Metric3 g = Metric3::diagonal({1, 4, 9}).conformal(std::exp(0.4));
  EXPECT_NEAR(g.det(), 36.0 * std::exp(1.2), 1e-12);
  EXPECT_THROW(Metric3::identity().conformal(0.0), Error);
}

TEST(SymTensor, RejectsAsymmetric) {
  Mat3 m = Mat3::identity();
  m(0, 2) = 0.5;
  EXPECT_THROW(SymTensor3(m, Variance::covariant), Error);
  EXPECT_THROW(SymTensor3(Mat3::identity(), Variance::mixed), Error);
}

TEST(Inverse, SingularThrows) {
  Mat3 m;
  EXPECT_THROW(inverse(m), Error);
}

TEST(PrincipalInvariants, IdentityDeformation) {
  oracle::Random rng(5);
  const Mat3 gm = rng.spd<3>();
  const auto inv = principal_invariants(SymTensor3(gm, Variance::covariant), Metric3(gm));
  EXPECT_NEAR(inv.i1, 3.0, 1e-13);
  EXPECT_NEAR(inv.i2, 3.0, 1e-13);
  EXPECT_NEAR(inv.i3, 1.0, 1e-13);
}

TEST(PrincipalInvariants, DiagonalFourOneOne) {
  const auto inv = principal_invariants(SymTensor3::diagonal({4, 1, 1}, Variance::covariant), Metric3::identity());
  EXPECT_DOUBLE_EQ(inv.i1, 6.0);
  EXPECT_DOUBLE_EQ(inv.i2, 9.0);
  EXPECT_DOUBLE_EQ(inv.i3, 4.0);
}

TEST(PrincipalInvariants, ConformalScaling) {
  oracle::Random rng(6);
  const Mat3 gm = rng.spd<3>();
  const double lam = 1.37;
  const auto inv = principal_invariants(SymTensor3(lam * lam * gm, Variance::covariant), Metric3(gm));
  EXPECT_NEAR(inv.i1, 3 * std::pow(lam, 2), 1e-12);
  EXPECT_NEAR(inv.i2, 3 * std::pow(lam, 4), 1e-12);
  EXPECT_NEAR(inv.i3, std::pow(lam, 6), 1e-12);
}

TEST(PrincipalInvariants, MatchEigenvalueOracleAndInverseRelation) {
  oracle::Random rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3 gm = rng.spd<3>(), cm = rng.spd<3>();
    const Metric3 g(gm);
    const auto inv = principal_invariants(SymTensor3(cm, Variance::covariant), g);
    const Vec<3> l = oracle::generalized_eigenvalues(cm, gm);
    EXPECT_NEAR(inv.i1, l[0] + l[1] + l[2], 1e-11 * inv.i1);
    EXPECT_NEAR(inv.i2, l[0] * l[1] + l[0] * l[2] + l[1] * l[2], 1e-11 * inv.i2);
    EXPECT_NEAR(inv.i3, l[0] * l[1] * l[2], 1e-11 * inv.i3);
    // I2 = I1(C^-1) I3, C^-1 taken in the G sense (G C_flat^-1 G).
    const SymTensor3 cinv(gm * inverse(cm) * gm, Variance::covariant);
    EXPECT_NEAR(inv.i2, principal_invariants(cinv, g).i1 * inv.i3, 1e-10 * inv.i2);
  }
}

TEST(PrincipalInvariants, CongruenceInvariance) {
  oracle::Random rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3 gm = rng.spd<3>(), cm = rng.spd<3>();
    Mat3 m;
    do m = rng.matrix<3>(-1, 1);
    while (std::fabs(determinant(m)) < 0.1);
    const auto a = principal_invariants(SymTensor3(cm, Variance::covariant), Metric3(gm));
    const auto b = principal_invariants(SymTensor3(transpose(m) * cm * m, Variance::covariant),
                                        Metric3(transpose(m) * gm * m));
    EXPECT_NEAR(a.i1, b.i1, 1e-10 * a.i1);
    EXPECT_NEAR(a.i2, b.i2, 1e-10 * a.i2);
    EXPECT_NEAR(a.i3, b.i3, 1e-10 * a.i3);
  }
}

TEST(SurfaceInvariants, IdentityIsExactlyTwoOne) {
  oracle::Random rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2 gm = rng.spd<2>();
    const auto inv = surface_invariants(SymTensor2(gm, Variance::covariant), Metric2(gm));
    EXPECT_NEAR(inv.i1, 2.0, 1e-14);
    EXPECT_NEAR(inv.i2, 1.0, 1e-14);
  }
  const auto exact = surface_invariants(SymTensor2::identity(Variance::covariant), Metric2::identity());
  EXPECT_EQ(exact.i1, 2.0);
  EXPECT_EQ(exact.i2, 1.0);
}

TEST(SurfaceInvariants, EigenstrainedSphere) {
  // Cbar = x^2 r^2 diag(1, s^2), Gbar = e^{-2 Omega_s} r^2 diag(1, s^2).
  const double x = 1.2, omega = 0.1, s = std::sin(0.7);
  const auto inv = surface_invariants(SymTensor2::diagonal({x * x, x * x * s * s}, Variance::covariant),
                                      Metric2::diagonal({std::exp(-2 * omega), std::exp(-2 * omega) * s * s}));
  EXPECT_NEAR(inv.i1, 3.51764, 1e-5);
  EXPECT_NEAR(inv.i2, 3.09344, 1e-5);
  EXPECT_NEAR(inv.i1, 2 * std::exp(0.2) * 1.44, 1e-13);
  EXPECT_NEAR(inv.i2, std::exp(0.4) * std::pow(1.2, 4), 1e-13);
}

TEST(SurfaceInvariants, ConformalScaling) {
  oracle::Random rng(29);
  const Mat2 gm = rng.spd<2>();
  const auto inv = surface_invariants(SymTensor2(0.81 * gm, Variance::covariant), Metric2(gm));
  EXPECT_NEAR(inv.i1, 2 * 0.81, 1e-14);
  EXPECT_NEAR(inv.i2, 0.81 * 0.81, 1e-14);
}

TEST(SpdSqrt, IdentityAndDiagonal) {
  expect_mat_near(spd_sqrt(MixedTensor3::identity()).m, Mat3::identity(), 1e-15);
  expect_mat_near(spd_sqrt(MixedTensor3{Mat3::diagonal({4, 1, 9})}).m, Mat3::diagonal({2, 1, 3}), 1e-14);
  const auto u2 = spd_sqrt(MixedTensor2{Mat2::diagonal({4, 9})});
  EXPECT_NEAR(u2(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(u2(1, 1), 3.0, 1e-15);
}

TEST(SpdSqrt, RandomRightCauchyGreenAgainstJacobi) {
  oracle::Random rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3 gm = rng.spd<3>(), f = rng.deformation<3>(0.5);
    const Mat3 cflat = transpose(f) * gm * f;
    const Metric3 g(gm);
    const MixedTensor3 c = raise_index(SymTensor3(cflat, Variance::covariant), g);
    const MixedTensor3 u = spd_sqrt(c);
    EXPECT_LT(oracle::max_rel_diff(u.m * u.m, c.m), 1e-10);
    // Eigenvalues of U are square roots of the generalized (C, G) spectrum.
    const Vec<3> l = oracle::generalized_eigenvalues(cflat, gm);
    const Vec<3> lu = real_eigenvalues(u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(lu[i], std::sqrt(l[i]), 1e-10 * std::sqrt(l[2]));
  }
}

TEST(SpdSqrt, RepeatedEigenvalues) {
  const Mat3 r = [] {
    const auto [ev, v] = oracle::jacobi<3>(Mat3{{2, 1, 0, 1, 3, 1, 0, 1, 4}});
    return v;
  }();
  const Mat3 a = r * Mat3::diagonal({2, 2, 5}) * transpose(r);
  const MixedTensor3 u = spd_sqrt(MixedTensor3{a});
  EXPECT_LT(oracle::max_rel_diff(u.m * u.m, a), 1e-12);
  expect_mat_near(spd_sqrt(MixedTensor3{Mat3::diagonal({3, 3, 3})}).m, std::sqrt(3.0) * Mat3::identity(), 1e-15);
}

TEST(SpdSqrt, RandomSurface) {
  oracle::Random rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const MixedTensor2 c{inverse(rng.spd<2>()) * rng.spd<2>()};
    const auto u = spd_sqrt(c);
    EXPECT_LT(oracle::max_rel_diff(u.m * u.m, c.m), 1e-10);
  }
}

TEST(SpdSqrt, NonPositiveEigenvalueIsDomainError) {
  try {
    spd_sqrt(MixedTensor3{Mat3::diagonal({1, -1, 2})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
  EXPECT_THROW(spd_sqrt(MixedTensor2{Mat2::diagonal({0, 2})}), Error);
}

TEST(TwoPointMap, OrientationCheck) {
  EXPECT_NO_THROW(require_orientation_preserving(Mat3::diagonal({1, 2, 3})));
  EXPECT_THROW(require_orientation_preserving(Mat3::diagonal({1, -2, 3})), Error);
  const TwoPointMap3 f{Mat3::identity(), "reference", "current"};
  EXPECT_EQ(f(1, 1), 1.0);
}
