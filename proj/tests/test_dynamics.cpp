#include <cmath>

#include <gtest/gtest.h>

#include "zitterlab/dynamics.hpp"

using namespace zitterlab;

namespace {

FourVector fv(double a, double b, double c, double d) { return make_four_vector(a, b, c, d); }

void expect_four_near(const FourVector& a, const FourVector& b, double tol) {
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}

const BoppParams kHelixParams{1.0, -4.0};
const double kHelixOmega = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(CanonicalRhs, Examples) {
  const BoppParams params{1.0, 2.0};
  const CanonicalState free_state{{}, fv(1, 0, 0, 0), fv(1, 0, 0, 0), {}};
  const StateDerivative d = canonical_rhs(free_state, params, 1.0, 0.0);
  expect_four_near(d.u, fv(0, 0, 0, 0), 0);
  expect_four_near(d.wp, fv(0, 0, 0, 0), 0);

  const CanonicalState s{fv(0.1, 0.2, 0.3, 0.4), fv(1.2, 0.3, 0.1, 0), fv(0.5, 0.1, 0, 0), fv(0.1, 0.4, 0, 0)};
  const StateDerivative z = canonical_rhs(s, params, 0.0, 0.0);
  for (const FourVector& v : {z.x, z.u, z.wp, z.wp1}) expect_four_near(v, fv(0, 0, 0, 0), 0);

  const BoppParams p3{1.0, 3.0};
  const CanonicalState t{{}, fv(1, 0, 0, 0), fv(0.2, 0.1, 0, 0), fv(0, 1, 0, 0)};
  const StateDerivative e = canonical_rhs(t, p3, 1.0, 0.0);
  expect_four_near(e.u, fv(0, 1, 0, 0), 1e-15);
  expect_four_near(e.wp1, 1.5 * t.u - t.wp + 1.5 * t.u, 1e-15);
}

TEST(GaugeMu, Examples) {
  const FourVector u = fv(1.3, 0.5, 0.2, 0);
  EXPECT_NEAR(gauge_mu(u, fv(0.5, 1.3, 0, 0)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(gauge_mu(u, u), 1.0);
}

TEST(ReducedRhs, Examples) {
  const BoppParams params{1.0, 1.6};
  const FourVector u = fv(std::cosh(0.3), std::sinh(0.3), 0, 0);
  const StateDerivative fixed = reduced_rhs({{}, u, 0.8 * u, {}}, params);
  expect_four_near(fixed.wp1, fv(0, 0, 0, 0), 1e-15);

  const StateDerivative d = reduced_rhs({{}, fv(1, 0, 0, 0), {}, fv(0, 1, 0, 0)}, {1.0, 0.0});
  expect_four_near(d.u, fv(0, 1, 0, 0), 0);
  expect_four_near(d.wp1, fv(1.5, 0, 0, 0), 1e-15);

  EXPECT_THROW(reduced_rhs({{}, fv(2, 0, 0, 0), {}, {}}, params), Error);
}

TEST(ReducedRhs, MatchesHelixDerivative) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  for (double tau : {0.0, 1.1, 5.0}) {
    const StateDerivative d = reduced_rhs(hx.state(tau), kHelixParams);
    const JetPoint j = hx.jet(tau);
    const CanonicalState dh = hx.state(tau + 1e-4);
    const CanonicalState dl = hx.state(tau - 1e-4);
    expect_four_near(d.x, j.u, 1e-12);
    expect_four_near(d.u, j.udot, 1e-12);
    expect_four_near(d.wp, fv(0, 0, 0, 0), 0);
    expect_four_near(d.wp1, (dh.wp1 - dl.wp1) / 2e-4, 1e-8);
  }
}

TEST(InitialState, Examples) {
  const BoppParams params{1.0, 3.0};
  const CanonicalState s = make_initial_state(fv(1, 0, 0, 0), {}, {}, params);
  expect_four_near(s.wp1, fv(0, 0, 0, 0), 0);
  expect_four_near(s.wp, fv(1.5, 0, 0, 0), 1e-15);

  const Helix hx = helix(kHelixParams, kHelixOmega);
  const JetPoint j = hx.jet(0.0);
  EXPECT_NEAR(homogeneous_H(make_initial_state(j.u, j.udot, j.uddot, kHelixParams), kHelixParams), 1.0, 1e-12);

  try {
    make_initial_state(fv(1, 1, 0, 0), {}, {}, params);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GaugeViolation);
  }
}

TEST(Integrate, FreeParticleIsStraight) {
  const BoppParams params{1.0, 1.0};
  const FourVector u0 = fv(1.25, 0.75, 0, 0);
  const Trajectory traj = integrate_unit_gauge(make_initial_state(u0, {}, {}, params), {5.0, 1e-2}, params);
  for (const Sample& s : traj.samples) expect_four_near(s.state.x, s.tau * u0, 1e-12);
}

TEST(Integrate, HelixConservesEverything) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  const Trajectory traj = integrate_unit_gauge(hx.state(0.0), {20.0, 1e-3}, kHelixParams);
  ASSERT_EQ(traj.size(), 20001u);
  for (const Sample& s : traj.samples) {
    EXPECT_LE(std::abs(s.H - 1.0), 1e-8);
    EXPECT_LE(std::abs(s.u_sq - 1.0), 1e-8);
    EXPECT_LE(s.wp_drift, 1e-8);
    EXPECT_LE(std::abs(gauge_mu(s.state.u, reduced_rhs(s.state, kHelixParams).u)), 1e-9);
  }
}

TEST(Integrate, FourthOrderConvergence) {
  const BoppParams params{1.0, helix_mass_coupling(1.0, 1.0, 1.0)};
  const Helix hx = helix(params, 1.0);
  const auto rhs = gauge_rhs(params, GaugeChoice::free_multipliers(1.0, 0.0));
  auto error = [&](double h) {
    const Trajectory traj = integrate(rhs, hx.state(0.0), {5.0, h}, params);
    double worst = 0.0;
    for (const Sample& s : traj.samples) {
      const FourVector exact = hx.position(s.tau);
      for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(s.state.x[i] - exact[i]));
    }
    return worst;
  };
  const double e4 = error(4e-3), e2 = error(2e-3), e1 = error(1e-3);
  EXPECT_NEAR(e4 / e2, 16.0, 8.0);
  EXPECT_NEAR(e2 / e1, 16.0, 8.0);
}

TEST(Integrate, Errors) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  EXPECT_THROW(integrate_unit_gauge(hx.state(0.0), {1.0, 0.0}, kHelixParams), Error);
  EXPECT_THROW(integrate_unit_gauge(hx.state(0.0), {-1.0, 1e-3}, kHelixParams), Error);
  try {
    integrate_unit_gauge(hx.state(0.0), {50.0, 2.0}, kHelixParams);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::StepRejected || e.code() == ErrorCode::GaugeViolation);
  }
}

TEST(Integrate, FreeMultiplierGaugeKeepsHamiltonian) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  const auto rhs = gauge_rhs(kHelixParams, GaugeChoice::free_multipliers(1.7, 0.0));
  const Trajectory traj = integrate(rhs, hx.state(0.0), {5.0, 1e-3}, kHelixParams);
  for (const Sample& s : traj.samples) EXPECT_LE(std::abs(s.H - 1.0), 1e-9);
}

TEST(Helix, ClosedForm) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  EXPECT_NEAR(hx.radius, 2.0, 1e-14);
  EXPECT_NEAR(hx.gamma, std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(hx.k0, 1.0, 1e-14);
  for (double tau : {0.0, 2.0, 7.5}) EXPECT_LE(max_abs(eom_residual(hx.jet(tau), kHelixParams)), 1e-10);
  EXPECT_NEAR(curvature(hx.jet(0).u, hx.jet(0).udot), hx.k0, 1e-14);
}

TEST(Helix, MassCouplingInverts) {
  const double A = helix_mass_coupling(2.0, 0.8, 1.5);
  const Helix hx = helix({2.0, A}, 0.8);
  EXPECT_NEAR(hx.radius, 1.5, 1e-13);
}

TEST(Helix, NoHelixForNonNegativeMass) {
  for (double A : {0.0, 1.0}) {
    try {
      helix({1.0, A}, 0.7);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NoHelix);
    }
  }
}

TEST(EquationOfMotion, TrajectorySatisfiesBothForms) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  const Trajectory traj = integrate_unit_gauge(hx.state(0.0), {20.0, 1e-3}, kHelixParams);
  EXPECT_LE(trajectory_eom_residual(traj, 50), 1e-4);
  EXPECT_LE(trajectory_euler_poisson_residual(traj, 50), 1e-4);
}

TEST(EquationOfMotion, RandomJetIsNotASolution) {
  const JetPoint p = make_jet({}, fv(1, 0, 0, 0), fv(0, 0.3, 0, 0), fv(0.09, 0.1, 0.2, 0), fv(0, 0.5, 0, 0.1));
  EXPECT_GT(max_abs(eom_residual(p, {1.0, 1.0})), 1e-3);
}

TEST(Riewe, RecoversHelixFrequency) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  const Trajectory traj = integrate_unit_gauge(hx.state(0.0), {20.0, 1e-3}, kHelixParams);
  const RieweFit fit = riewe_form_check(traj);
  EXPECT_NEAR(fit.frequency, kHelixOmega, 1e-3 * kHelixOmega);
  EXPECT_NEAR(fit.varpi_sq, fit.frequency * fit.frequency, 1e-15);
  EXPECT_LE(fit.residual, 1e-6);
}

TEST(Riewe, StraightLineHasNoOscillation) {
  const BoppParams params{1.0, 1.0};
  const Trajectory traj =
      integrate_unit_gauge(make_initial_state(fv(1, 0, 0, 0), {}, {}, params), {2.0, 1e-2}, params);
  const RieweFit fit = riewe_form_check(traj);
  EXPECT_EQ(fit.frequency, 0.0);
}

TEST(Poisson, BracketGeneratesTheFlow) {
  const Helix hx = helix(kHelixParams, kHelixOmega);
  const Trajectory traj = integrate_unit_gauge(hx.state(0.0), {2.0, 1e-3}, kHelixParams);
  auto H = [](const auto& s) { return homogeneous_H(s, kHelixParams); };
  auto u1 = [](const auto& s) { return s.u[1]; };
  auto wp2 = [](const auto& s) { return s.wp[2]; };
  EXPECT_LE(poisson_evolution_residual(H, traj, kHelixParams), 1e-10);
  EXPECT_LE(poisson_evolution_residual(u1, traj, kHelixParams), 1e-9);
  EXPECT_LE(poisson_evolution_residual(wp2, traj, kHelixParams), 1e-12);
  EXPECT_NEAR(poisson_bracket(u1, traj.state(0), kHelixParams), reduced_rhs(traj.state(0), kHelixParams).u[1],
              1e-14);
}
