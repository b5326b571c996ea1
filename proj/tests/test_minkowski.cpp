#include <cmath>

#include <gtest/gtest.h>

#include "zitterlab/minkowski.hpp"
#include "zitterlab/rng.hpp"

using namespace zitterlab;

namespace {
FourVector fv(double a, double b, double c, double d) { return make_four_vector(a, b, c, d); }
ThreeVector tv(double a, double b, double c) { return make_three_vector(a, b, c); }
}  // namespace

TEST(Dot4, Examples) {
  EXPECT_EQ(dot4(fv(1, 0, 0, 0), fv(1, 0, 0, 0)), 1.0);
  EXPECT_EQ(dot4(fv(1, 1, 0, 0), fv(1, 1, 0, 0)), 0.0);
  EXPECT_EQ(dot4(fv(2, 1, 0, 0), fv(3, 0, 1, 0)), 6.0);
}

TEST(Dot3, CarriesTheMetricSign) {
  EXPECT_EQ(dot3(tv(0, 0, 0), tv(1, 2, 3)), 0.0);
  EXPECT_EQ(dot3(tv(1, 0, 0), tv(1, 0, 0)), -1.0);
  EXPECT_EQ(dot3(tv(1, 2, 0), tv(3, 0, 1)), -3.0);
}

TEST(NormTimelike, Examples) {
  EXPECT_EQ(norm_timelike(fv(1, 0, 0, 0)), 1.0);
  EXPECT_EQ(norm_timelike(fv(2, 0, 0, 0)), 2.0);
  try {
    norm_timelike(fv(1, 1, 0, 0));
    FAIL() << "null vector accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonTimelike);
  }
}

TEST(WedgeNorm, Examples) {
  EXPECT_DOUBLE_EQ(wedge_norm(fv(0, 2, 0, 0), fv(1, 0, 0, 0)), 2.0);
  EXPECT_DOUBLE_EQ(wedge_norm(fv(0, 0, 3, 0), fv(2, 0, 0, 0)), 6.0);
  const FourVector u = fv(1.3, 0.2, -0.4, 0.1);
  EXPECT_NEAR(wedge_norm(-2.5 * u, u), 0.0, 1e-7);
}

TEST(Curvature, Examples) {
  EXPECT_DOUBLE_EQ(curvature(fv(1, 0, 0, 0), fv(0, 0.5, 0, 0)), 0.5);
  EXPECT_DOUBLE_EQ(curvature(fv(2, 0, 0, 0), fv(0, 2, 0, 0)), 0.5);
  EXPECT_EQ(curvature(fv(1.5, 0.3, 0, 0), fv(0, 0, 0, 0)), 0.0);
}

TEST(Minkowski, MakeRejectsNonFinite) {
  EXPECT_THROW(make_four_vector(1, NAN, 0, 0), Error);
  EXPECT_THROW(make_three_vector(INFINITY, 0, 0), Error);
}

TEST(Minkowski, Dot4SymmetricAndBilinear) {
  Xoshiro256ss rng(11);
  auto draw = [&] { return fv(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)); };
  for (int k = 0; k < 200; ++k) {
    const FourVector a = draw(), b = draw(), c = draw();
    const double s = rng.uniform(-3, 3);
    EXPECT_EQ(dot4(a, b), dot4(b, a));
    EXPECT_NEAR(dot4(a + s * b, c), dot4(a, c) + s * dot4(b, c), 1e-12 * (1 + std::abs(s)) * 64);
  }
}

TEST(Minkowski, WedgeInvariantUnderUdotShiftAlongU) {
  // ‖(u̇ + βu) ∧ u‖ = ‖u̇ ∧ u‖
  Xoshiro256ss rng(12);
  for (int k = 0; k < 200; ++k) {
    const JetPoint p = sample_jet(rng, 2);
    const double beta = rng.uniform(-2, 2);
    const double w0 = wedge_norm_sq(p.udot, p.u);
    const double w1 = wedge_norm_sq(p.udot + beta * p.u, p.u);
    EXPECT_NEAR(w1, w0, 1e-11 * (1 + std::abs(w0)) * 100);
  }
}

TEST(Minkowski, FlipIndexLowersSpatialComponents) {
  const FourVector v = fv(1, 2, 3, 4);
  const FourVector f = flip_index(v);
  EXPECT_EQ(f[0], 1.0);
  EXPECT_EQ(f[1], -2.0);
  EXPECT_EQ(contract(f, v), dot4(v, v));
}
