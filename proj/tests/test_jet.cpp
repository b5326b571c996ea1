#include <cmath>

#include <gtest/gtest.h>

#include "zitterlab/dynamics.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/lagrangians.hpp"
#include "zitterlab/rng.hpp"

using namespace zitterlab;

namespace {

FourVector fv(double a, double b, double c, double d) { return make_four_vector(a, b, c, d); }

void expect_four_near(const FourVector& a, const FourVector& b, double tol) {
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}

void expect_three_near(const ThreeVector& a, const ThreeVector& b, double tol) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], tol) << "component " << i;
}

}  // namespace

TEST(GradJet, SquaredNorm) {
  auto f = jet_function([](const auto& p) { return dot4(p.u, p.u); }, 1);
  const JetGradient g = grad_jet(f, make_jet({}, fv(1, 0, 0, 0)));
  expect_four_near(g.du, fv(2, 0, 0, 0), 0);
  expect_four_near(g.dx, fv(0, 0, 0, 0), 0);
  expect_four_near(g.dudot, fv(0, 0, 0, 0), 0);
}

TEST(GradJet, MixedProductCarriesMetricSigns) {
  auto f = jet_function([](const auto& p) { return dot4(p.u, p.udot); }, 2);
  const JetPoint p = make_jet({}, fv(1.5, 0.2, -0.3, 0.4), fv(0.1, 0.7, 0.2, -0.5));
  const JetGradient g = grad_jet(f, p);
  expect_four_near(g.du, flip_index(p.udot), 1e-15);
  expect_four_near(g.dudot, flip_index(p.u), 1e-15);
}

TEST(GradJet, BoppMatchesFiniteDifferences) {
  const BoppParams params{1.0, 1.0};
  const auto L = bopp(params);
  Xoshiro256ss rng(3);
  for (int k = 0; k < 200; ++k) {
    const JetPoint p = sample_jet(rng, 3);
    const JetGradient g = grad_jet(L, p);
    for (int slot = 1; slot <= 2; ++slot) {
      for (std::size_t i = 0; i < 4; ++i) {
        const double h = 1e-6 * std::max(1.0, std::abs(p.level(slot)[i]));
        JetPoint plus = p, minus = p;
        plus.level(slot)[i] += h;
        minus.level(slot)[i] -= h;
        const double fd = (bopp_lagrangian(plus, params) - bopp_lagrangian(minus, params)) / (2 * h);
        const double ad = slot == 1 ? g.du[i] : g.dudot[i];
        EXPECT_NEAR(ad, fd, 1e-6 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST(GradJet, RequiresOrderTwo) {
  auto f = jet_function([](const auto& p) { return p.u[0]; }, 1);
  EXPECT_THROW(grad_jet(f, make_jet({}, fv(1, 0, 0, 0), {}, {}, {}, 1)), Error);
}

TEST(TotalDerivativeTau, Examples) {
  const JetPoint p = make_jet(fv(0.3, 1, 2, 3), fv(1.2, 0.1, 0.2, 0.3), fv(0.4, -0.5, 0.6, 0.7), fv(1, 1, 1, 1),
                              {}, 3);
  auto coord = jet_function([](const auto& q) { return q.u[0]; }, 1);
  EXPECT_DOUBLE_EQ(total_derivative_tau(coord, p), 0.4);
  auto constant = jet_function([](const auto& q) { return 0.0 * q.u[0] + 7.0; }, 1);
  EXPECT_EQ(total_derivative_tau(constant, p), 0.0);
  auto sq = jet_function([](const auto& q) { return dot4(q.u, q.u); }, 1);
  EXPECT_NEAR(total_derivative_tau(sq, p), 2.0 * dot4(p.u, p.udot), 1e-14);
}

TEST(TotalDerivativeTau, MatchesPolynomialCurve) {
  // x(τ) = c0 + c1 τ + c2 τ² + c3 τ³; D_τ of ‖u‖ k² equals d/dτ along the curve.
  const FourVector c1 = fv(1.4, 0.3, -0.2, 0.1), c2 = fv(0.2, 0.5, 0.1, -0.3), c3 = fv(0.05, -0.1, 0.2, 0.15);
  auto jet_at = [&](double t) {
    const FourVector u = c1 + (2 * t) * c2 + (3 * t * t) * c3;
    const FourVector ud = 2.0 * c2 + (6 * t) * c3;
    return make_jet({}, u, ud, 6.0 * c3, {}, 4);
  };
  auto f = jet_function([](const auto& q) { return curvature_lagrangian(q); }, 2);
  const double t = 0.4, h = 1e-5;
  const double fd = (f(jet_at(t + h)) - f(jet_at(t - h))) / (2 * h);
  EXPECT_NEAR(total_derivative_tau(f, jet_at(t)), fd, 1e-7);
}

TEST(TotalDerivativeTau, RejectsLowOrder) {
  auto f = jet_function([](const auto& q) { return dot4(q.udot, q.udot); }, 2);
  try {
    total_derivative_tau(f, make_jet({}, fv(1, 0, 0, 0), {}, {}, {}, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooLow);
  }
}

TEST(ProjectContact, Examples) {
  const ContactJet rest = project_contact(make_jet({}, fv(2, 4, 0, 0), {}, {}, {}, 3));
  expect_three_near(rest.v, make_three_vector(2, 0, 0), 0);
  expect_three_near(rest.vdot, make_three_vector(0, 0, 0), 0);
  const ContactJet c = project_contact(make_jet({}, fv(2, 4, 0, 0), fv(1, 0, 0, 0), {}, {}, 3));
  expect_three_near(c.vdot, make_three_vector(-0.5, 0, 0), 1e-15);
  EXPECT_THROW(project_contact(make_jet({}, fv(0, 1, 0, 0))), Error);
}

TEST(ProjectContact, SecondDerivativeMatchesCurve) {
  // x(τ) with x⁰ nonlinear in τ; v″ = d²𝐱/d(x⁰)² by finite differences in x⁰.
  auto x_of = [](double t) { return fv(t + 0.3 * t * t + 0.1 * t * t * t, std::sin(t), t * t, 0.2 * t); };
  auto u_of = [](double t) { return fv(1 + 0.6 * t + 0.3 * t * t, std::cos(t), 2 * t, 0.2); };
  auto ud_of = [](double t) { return fv(0.6 + 0.6 * t, -std::sin(t), 2, 0); };
  auto udd_of = [](double t) { return fv(0.6, -std::cos(t), 0, 0); };
  const double t = 0.7;
  const ContactJet c = project_contact(make_jet(x_of(t), u_of(t), ud_of(t), udd_of(t), {}, 3));
  // d/dx⁰ of v along the curve = (dv/dτ)/u⁰; differentiate v′ numerically in τ.
  auto vdot_of = [&](double s) { return project_contact(make_jet(x_of(s), u_of(s), ud_of(s), {}, {}, 2)).vdot; };
  const double h = 1e-5;
  const ThreeVector fd = (vdot_of(t + h) - vdot_of(t - h)) / (2 * h * u_of(t)[0]);
  expect_three_near(c.vddot, fd, 1e-8);
}

TEST(ProjectContact, ReparametrizationInvariant) {
  Xoshiro256ss rng(5);
  for (int k = 0; k < 200; ++k) {
    const JetPoint p = sample_jet(rng, 3);
    const Reparametrization r{rng.uniform(0.3, 3.0), rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
    const ContactJet a = project_contact(p);
    const ContactJet b = project_contact(reparametrize(p, r));
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(a.v[i], b.v[i], 1e-10 * std::max(1.0, std::abs(a.v[i])));
      EXPECT_NEAR(a.vdot[i], b.vdot[i], 1e-10 * std::max(1.0, std::abs(a.vdot[i])));
      EXPECT_NEAR(a.vddot[i], b.vddot[i], 1e-10 * std::max(1.0, std::abs(a.vddot[i])));
    }
  }
}

TEST(Correspondence, Examples) {
  Xoshiro256ss rng(6);
  auto v1 = [](const auto& c) { return c.v[1]; };
  auto constant = [](const auto& c) { return 0.0 * c.v[0] + 3.0; };
  auto gamma = [](const auto& c) { return 1.0 + dot3(c.v, c.v); };
  for (int k = 0; k < 1000; ++k) {
    const JetPoint p = sample_jet(rng, 3);
    EXPECT_LE(correspondence_residual(v1, p).relative(), 1e-8);
    EXPECT_EQ(correspondence_residual(constant, p).value, 0.0);
    EXPECT_LE(correspondence_residual(gamma, p).relative(), 1e-8);
  }
}

TEST(EulerPoissonOracle, FreeParticleStraightLine) {
  const BoppParams params{1.0, 2.0};
  auto Le = jet_function([&](const auto& q) { return 0.5 * params.A * checked_norm(q.u); }, 1);
  const FourVector e = euler_poisson_residual_oracle(Le, make_jet(fv(0, 1, 2, 3), fv(1.3, 0.4, -0.6, 0.2)));
  expect_four_near(e, fv(0, 0, 0, 0), 1e-15);
}

TEST(EulerPoissonOracle, HelixIsExtremal) {
  const BoppParams params{1.0, -4.0};
  const Helix hx = helix(params, 1.0 / std::sqrt(2.0));
  for (double tau : {0.0, 0.7, 3.1}) {
    const FourVector e = euler_poisson_residual_oracle(bopp(params), hx.jet(tau));
    EXPECT_LE(max_abs(e), 1e-9);
  }
}

TEST(EulerPoissonOracle, GenericJetIsNot) {
  Xoshiro256ss rng(8);
  const JetPoint p = sample_jet(rng, 4);
  EXPECT_GT(max_abs(euler_poisson_residual_oracle(bopp({1.0, 1.0}), p)), 1e-3);
}
