#pragma once

// Canonical equations of the homogeneous Hamiltonian, their unit-gauge
// reduction, fixed-step integration with conservation monitors, and the
// checks that tie trajectories back to the fourth-order equation of motion.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "zitterlab/dual.hpp"
#include "zitterlab/errors.hpp"
#include "zitterlab/hamiltonian.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/lagrangians.hpp"
#include "zitterlab/legendre.hpp"
#include "zitterlab/minkowski.hpp"

namespace zitterlab {

/// d/dτ of a canonical state, laid out like the state itself.
using StateDerivative = CanonicalState;

inline CanonicalState operator+(const CanonicalState& a, const CanonicalState& b) {
  return {a.x + b.x, a.u + b.u, a.wp + b.wp, a.wp1 + b.wp1};
}
inline CanonicalState operator*(double k, const CanonicalState& s) {
  return {k * s.x, k * s.u, k * s.wp, k * s.wp1};
}

struct GaugeChoice {
  enum class Kind { UnitVelocity, FreeMultipliers };
  Kind kind = Kind::UnitVelocity;
  double lambda = 1.0;
  double mu = 0.0;

  static GaugeChoice unit_velocity() { return {}; }
  static GaugeChoice free_multipliers(double lambda, double mu) { return {Kind::FreeMultipliers, lambda, mu}; }
};

inline constexpr double kDefaultGaugeTolerance = 1e-6;

/// The canonical system for the Bopp 𝓗 with multipliers λ, μ.
inline StateDerivative canonical_rhs(const CanonicalState& s, const BoppParams& params, double lambda,
                                     double mu) {
  const double n = checked_norm(s.u);
  const double wp1_sq = dot4(s.wp1, s.wp1);
  StateDerivative d;
  d.x = lambda * s.u;
  d.u = (lambda * n * n * n / params.a) * s.wp1 + mu * s.u;
  d.wp = {};
  d.wp1 = (0.5 * params.A * lambda / n) * s.u - lambda * s.wp - (1.5 * lambda * n / params.a * wp1_sq) * s.u -
          mu * s.wp1;
  return d;
}

/// μ = u·(du/dτ)/‖u‖², the multiplier that keeps u·℘′ = 0.
inline double gauge_mu(const FourVector& u, const FourVector& du_dtau) {
  const double n = checked_norm(u);
  return dot4(u, du_dtau) / (n * n);
}

/// The system in the unit gauge u² = 1, where λ = 1 and μ = 0.
inline StateDerivative reduced_rhs(const CanonicalState& s, const BoppParams& params,
                                   double gauge_tolerance = kDefaultGaugeTolerance) {
  const double usq = dot4(s.u, s.u);
  if (!(std::abs(usq - 1.0) <= gauge_tolerance)) {
    throw Error(ErrorCode::GaugeViolation, "u.u drifted from 1 by " + std::to_string(usq - 1.0));
  }
  StateDerivative d;
  d.x = s.u;
  d.u = (1.0 / params.a) * s.wp1;
  d.wp = {};
  d.wp1 = (0.5 * params.A) * s.u - s.wp - (1.5 / params.a * dot4(s.wp1, s.wp1)) * s.u;
  return d;
}

/// Right-hand side for a gauge choice; the unit gauge uses the reduced system.
inline std::function<StateDerivative(const CanonicalState&)> gauge_rhs(const BoppParams& params,
                                                                       const GaugeChoice& gauge) {
  if (gauge.kind == GaugeChoice::Kind::UnitVelocity) {
    return [params](const CanonicalState& s) { return reduced_rhs(s, params); };
  }
  return [params, gauge](const CanonicalState& s) { return canonical_rhs(s, params, gauge.lambda, gauge.mu); };
}

/// Canonical data at x = 0 from a unit-gauge jet, via the closed-form momenta.
inline CanonicalState make_initial_state(const FourVector& u0, const FourVector& udot0, const FourVector& uddot0,
                                         const BoppParams& params) {
  if (!(std::abs(dot4(u0, u0) - 1.0) <= 1e-10)) throw Error(ErrorCode::GaugeViolation, "u0 is not unit timelike");
  if (!(std::abs(dot4(u0, udot0)) <= 1e-10)) throw Error(ErrorCode::GaugeViolation, "udot0 is not orthogonal to u0");
  return legendre_map(make_jet({}, u0, udot0, uddot0, {}, 3), params);
}

// ---------------------------------------------------------------------------
// integration

struct IntegrateOptions {
  double tau_end = 20.0;
  double step = 1e-3;
  bool renormalize = false;       ///< opt-in: project back onto u² = 1, u·℘′ = 0 after each step
  double reject_threshold = 1e-3;  ///< largest accepted step-halving error estimate
};

struct Sample {
  double tau = 0.0;
  CanonicalState state;
  double H = 0.0;
  double u_sq = 0.0;
  double wp_drift = 0.0;  ///< max-abs of ℘(τ) − ℘(0)
};

/// Per-channel maximum of the step-halving local error estimate.
struct ErrorEstimate {
  double x = 0.0;
  double u = 0.0;
  double wp = 0.0;
  double wp1 = 0.0;

  double max() const { return std::max({x, u, wp, wp1}); }
};

struct Trajectory {
  std::vector<Sample> samples;
  double step = 0.0;
  BoppParams params;
  ErrorEstimate error;

  std::size_t size() const { return samples.size(); }
  const CanonicalState& state(std::size_t i) const { return samples[i].state; }
};

namespace detail {

template <class Rhs>
CanonicalState rk4_step(const Rhs& rhs, const CanonicalState& y, double h) {
  const CanonicalState k1 = rhs(y);
  const CanonicalState k2 = rhs(y + (0.5 * h) * k1);
  const CanonicalState k3 = rhs(y + (0.5 * h) * k2);
  const CanonicalState k4 = rhs(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline double max_abs_diff(const FourVector& a, const FourVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline bool is_finite(const CanonicalState& s) {
  return zitterlab::is_finite(s.x) && zitterlab::is_finite(s.u) && zitterlab::is_finite(s.wp) &&
         zitterlab::is_finite(s.wp1);
}

inline CanonicalState renormalized(CanonicalState s) {
  const double n = std::sqrt(dot4(s.u, s.u));
  s.u = s.u / n;
  s.wp1 = s.wp1 - dot4(s.u, s.wp1) * s.u;
  return s;
}

inline Sample make_sample(double tau, const CanonicalState& s, const CanonicalState& s0, const BoppParams& params) {
  Sample out{tau, s, 0.0, dot4(s.u, s.u), max_abs_diff(s.wp, s0.wp)};
  out.H = out.u_sq > 0.0 ? homogeneous_H(s, params) : std::nan("");
  return out;
}

}  // namespace detail

/// Classical RK4 with a fixed step; each step is shadowed by two half steps
/// whose difference (divided by 15) is the local error estimate.
template <class Rhs>
Trajectory integrate(const Rhs& rhs, const CanonicalState& s0, const IntegrateOptions& options,
                     const BoppParams& params) {
  if (!(options.step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  if (!(options.tau_end > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau_end must be positive");
  const double h = options.step;
  const auto steps = static_cast<std::size_t>(std::ceil(options.tau_end / h - 1e-9));

  Trajectory traj;
  traj.step = h;
  traj.params = params;
  traj.samples.reserve(steps + 1);
  traj.samples.push_back(detail::make_sample(0.0, s0, s0, params));

  CanonicalState y = s0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double tau = traj.samples.back().tau;
    const double next_tau = (k + 1 == steps) ? options.tau_end : static_cast<double>(k + 1) * h;
    const double dt = next_tau - tau;
    const CanonicalState full = detail::rk4_step(rhs, y, dt);
    const CanonicalState half = detail::rk4_step(rhs, detail::rk4_step(rhs, y, 0.5 * dt), 0.5 * dt);

    ErrorEstimate local{detail::max_abs_diff(full.x, half.x) / 15.0, detail::max_abs_diff(full.u, half.u) / 15.0,
                        detail::max_abs_diff(full.wp, half.wp) / 15.0,
                        detail::max_abs_diff(full.wp1, half.wp1) / 15.0};
    if (!detail::is_finite(full) || !(local.max() <= options.reject_threshold)) {
      throw Error(ErrorCode::StepRejected, "step-halving error estimate " + std::to_string(local.max()) +
                                               " at tau = " + std::to_string(tau));
    }
    traj.error.x = std::max(traj.error.x, local.x);
    traj.error.u = std::max(traj.error.u, local.u);
    traj.error.wp = std::max(traj.error.wp, local.wp);
    traj.error.wp1 = std::max(traj.error.wp1, local.wp1);

    y = options.renormalize ? detail::renormalized(full) : full;
    traj.samples.push_back(detail::make_sample(next_tau, y, s0, params));
  }
  return traj;
}

/// Unit-gauge integration from s0.
inline Trajectory integrate_unit_gauge(const CanonicalState& s0, const IntegrateOptions& options,
                                       const BoppParams& params) {
  return integrate([&params](const CanonicalState& s) { return reduced_rhs(s, params); }, s0, options, params);
}

// ---------------------------------------------------------------------------
// equation of motion

/// u⃛ + ((3/2)u̇² − A/(2a))u̇ + 3(u̇·ü)u for a unit-gauge order-4 jet.
inline FourVector eom_residual(const JetPoint& jet, const BoppParams& params,
                               double gauge_tolerance = kDefaultGaugeTolerance) {
  if (jet.order < 4) throw Error(ErrorCode::OrderTooLow, "equation of motion needs u⃛");
  if (!(std::abs(dot4(jet.u, jet.u) - 1.0) <= gauge_tolerance)) {
    throw Error(ErrorCode::GaugeViolation, "jet is not in the unit gauge");
  }
  const double coeff = 1.5 * dot4(jet.udot, jet.udot) - params.A / (2.0 * params.a);
  return jet.utdot + coeff * jet.udot + (3.0 * dot4(jet.udot, jet.uddot)) * jet.u;
}

inline double max_abs(const FourVector& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
}

/// Order-4 jet at sample i, with u̇ = ℘′/a and centered 5-point stencils for ü, u⃛.
inline JetPoint trajectory_jet(const Trajectory& traj, std::size_t i) {
  if (i < 2 || i + 2 >= traj.size()) throw Error(ErrorCode::InvalidArgument, "stencil needs two samples each side");
  const double h = traj.step;
  const double a = traj.params.a;
  auto udot = [&](std::size_t j) { return (1.0 / a) * traj.state(j).wp1; };
  const FourVector fm2 = udot(i - 2);
  const FourVector fm1 = udot(i - 1);
  const FourVector f0 = udot(i);
  const FourVector fp1 = udot(i + 1);
  const FourVector fp2 = udot(i + 2);
  const FourVector uddot = (1.0 / (12.0 * h)) * (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2);
  const FourVector utdot = (1.0 / (12.0 * h * h)) * (-1.0 * fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2);
  const CanonicalState& s = traj.state(i);
  return make_jet(s.x, s.u, f0, uddot, utdot, 4);
}

/// Largest |eom_residual| over the interior samples of a trajectory.
inline double trajectory_eom_residual(const Trajectory& traj, std::size_t stride = 1) {
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < traj.size(); i += stride) {
    worst = std::max(worst, max_abs(eom_residual(trajectory_jet(traj, i), traj.params)));
  }
  return worst;
}

/// Largest brute-force Euler-Poisson residual over the interior samples.
inline double trajectory_euler_poisson_residual(const Trajectory& traj, std::size_t stride = 1) {
  const auto lagrangian = bopp(traj.params);
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < traj.size(); i += stride) {
    worst = std::max(worst, max_abs(euler_poisson_residual_oracle(lagrangian, trajectory_jet(traj, i))));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// helical solutions

/// Circular helix x(τ) = (γτ, r cos(ωτ+φ), r sin(ωτ+φ), 0) in proper time.
///
/// Substituting it into the equation of motion (u⃛ = −ω²u̇, u̇² = −r²ω⁴,
/// u̇·ü = 0) leaves the single condition ω² = −(3/2)r²ω⁴ − A/(2a), which
/// fixes the radius.
struct Helix {
  BoppParams params;
  double omega = 0.0;
  double phase = 0.0;
  double radius = 0.0;
  double gamma = 1.0;
  double k0 = 0.0;  ///< curvature r ω²

  FourVector position(double tau) const {
    const double th = omega * tau + phase;
    return {{gamma * tau, radius * std::cos(th), radius * std::sin(th), 0.0}};
  }

  JetPoint jet(double tau) const {
    const double th = omega * tau + phase;
    const double c = std::cos(th);
    const double s = std::sin(th);
    const double r = radius;
    const double w = omega;
    const FourVector u{{gamma, -r * w * s, r * w * c, 0.0}};
    const FourVector udot{{0.0, -r * w * w * c, -r * w * w * s, 0.0}};
    const FourVector uddot{{0.0, r * w * w * w * s, -r * w * w * w * c, 0.0}};
    const FourVector utdot{{0.0, r * w * w * w * w * c, r * w * w * w * w * s, 0.0}};
    return make_jet(position(tau), u, udot, uddot, utdot, 4);
  }

  CanonicalState state(double tau) const { return legendre_map(jet(tau), params); }
};

inline Helix helix(const BoppParams& params, double omega, double phase = 0.0) {
  const double w2 = omega * omega;
  if (!(w2 > 0.0)) throw Error(ErrorCode::NoHelix, "omega must be nonzero");
  const double r2 = (-params.A / (2.0 * params.a) - w2) / (1.5 * w2 * w2);
  if (!(r2 > 0.0) || !std::isfinite(r2)) {
    throw Error(ErrorCode::NoHelix, "no real radius: need -A/(2a) > omega^2");
  }
  Helix h;
  h.params = params;
  h.omega = omega;
  h.phase = phase;
  h.radius = std::sqrt(r2);
  h.gamma = std::sqrt(1.0 + r2 * w2);
  h.k0 = h.radius * w2;
  return h;
}

/// A = −2a(ω² + (3/2)r²ω⁴): the mass coupling that admits a helix of radius r at ω.
inline double helix_mass_coupling(double a, double omega, double radius) {
  const double w2 = omega * omega;
  return -2.0 * a * (w2 + 1.5 * radius * radius * w2 * w2);
}

struct RieweFit {
  double frequency = 0.0;  ///< measured oscillation frequency of ẍ
  double varpi_sq = 0.0;   ///< frequency², the coefficient in d²ẍ/ds² + ϖ²ẍ = 0
  double residual = 0.0;   ///< max |d²ẍ/ds² + ϖ²ẍ| over interior samples
};

namespace detail {

/// Sum of squared residuals of the best fit C cos ωτ + D sin ωτ.
inline double harmonic_misfit(const std::vector<double>& tau, const std::vector<double>& y, double omega) {
  double cc = 0, ss = 0, cs = 0, yc = 0, ys = 0, yy = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const double c = std::cos(omega * tau[i]);
    const double s = std::sin(omega * tau[i]);
    cc += c * c;
    ss += s * s;
    cs += c * s;
    yc += y[i] * c;
    ys += y[i] * s;
    yy += y[i] * y[i];
  }
  const double det = cc * ss - cs * cs;
  if (det == 0.0) return yy;
  const double C = (yc * ss - ys * cs) / det;
  const double D = (ys * cc - yc * cs) / det;
  return yy - C * yc - D * ys;
}

}  // namespace detail

/// Measures the oscillation of the spatial acceleration along a unit-gauge
/// trajectory of constant curvature and checks the harmonic form
/// d²ẍ/ds² + ϖ²ẍ = 0 with the measured ϖ.
inline RieweFit riewe_form_check(const Trajectory& traj, double curvature_tolerance = 1e-4) {
  const std::size_t n = traj.size();
  if (n < 5) throw Error(ErrorCode::InvalidArgument, "trajectory too short");
  const double a = traj.params.a;
  const double h = traj.step;

  auto accel = [&](std::size_t i) { return (1.0 / a) * traj.state(i).wp1; };
  const double k_start = curvature(traj.state(0).u, accel(0));
  std::size_t channel = 1;
  double amplitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const FourVector acc = accel(i);
    if (std::abs(curvature(traj.state(i).u, acc) - k_start) > curvature_tolerance) {
      throw Error(ErrorCode::NotHelical, "curvature is not constant along the trajectory");
    }
    for (std::size_t c = 1; c < 4; ++c) {
      if (std::abs(acc[c]) > amplitude) {
        amplitude = std::abs(acc[c]);
        channel = c;
      }
    }
  }
  if (amplitude < 1e-12) return {};

  std::vector<double> tau(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    tau[i] = traj.samples[i].tau;
    y[i] = accel(i)[channel];
  }

  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if ((y[i] < 0.0) != (y[i + 1] < 0.0)) {
      crossings.push_back(tau[i] - y[i] * (tau[i + 1] - tau[i]) / (y[i + 1] - y[i]));
    }
  }
  if (crossings.size() < 2) throw Error(ErrorCode::NotHelical, "fewer than two zero crossings of the acceleration");
  const double rough = std::numbers::pi * static_cast<double>(crossings.size() - 1) /
                       (crossings.back() - crossings.front());

  // Golden-section refinement of the least-squares harmonic frequency.
  double lo = 0.95 * rough;
  double hi = 1.05 * rough;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double m1 = hi - g * (hi - lo);
  double m2 = lo + g * (hi - lo);
  double f1 = detail::harmonic_misfit(tau, y, m1);
  double f2 = detail::harmonic_misfit(tau, y, m2);
  while (hi - lo > 1e-12 * rough) {
    if (f1 < f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - g * (hi - lo);
      f1 = detail::harmonic_misfit(tau, y, m1);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + g * (hi - lo);
      f2 = detail::harmonic_misfit(tau, y, m2);
    }
  }
  RieweFit fit;
  fit.frequency = 0.5 * (lo + hi);
  fit.varpi_sq = fit.frequency * fit.frequency;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double d2 = (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] - y[i + 2]) / (12.0 * h * h);
    fit.residual = std::max(fit.residual, std::abs(d2 + fit.varpi_sq * y[i]));
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Poisson evolution

namespace detail {

template <class F>
std::array<double, 16> canonical_gradient(const F& f, const CanonicalState& s) {
  std::array<double, 16> g{};
  for (std::size_t k = 0; k < 16; ++k) {
    CanonicalStateT<Dual<double>> d{lift<Dual<double>>(s.x), lift<Dual<double>>(s.u), lift<Dual<double>>(s.wp),
                                    lift<Dual<double>>(s.wp1)};
    FourVectorT<Dual<double>>* blocks[] = {&d.x, &d.u, &d.wp, &d.wp1};
    auto& slot = (*blocks[k / 4])[k % 4];
    slot = Dual<double>(slot.value(), 1.0);
    g[k] = f(d).tangent();
  }
  return g;
}

}  // namespace detail

/// {f, 𝓗}; gradients are taken in the stored contravariant components, so the
/// conjugate pairs (x^α, ℘_α) and (u^α, ℘′_α) pick up the metric sign η_αα.
template <class F>
double poisson_bracket(const F& f, const CanonicalState& s, const BoppParams& params) {
  const auto gf = detail::canonical_gradient(f, s);
  const auto gh = detail::canonical_gradient([&params](const auto& st) { return homogeneous_H(st, params); }, s);
  double bracket = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    const double eta = a == 0 ? 1.0 : -1.0;
    bracket += eta * (gf[a] * gh[8 + a] + gf[4 + a] * gh[12 + a] - gf[8 + a] * gh[a] - gf[12 + a] * gh[4 + a]);
  }
  return bracket;
}

/// max over interior samples of |df/dτ (5-point stencil) − {f, 𝓗}|.
template <class F>
double poisson_evolution_residual(const F& f, const Trajectory& traj, const BoppParams& params) {
  const double h = traj.step;
  auto value = [&](std::size_t i) { return primal(f(traj.state(i))); };
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < traj.size(); ++i) {
    const double dfdt = (value(i - 2) - 8.0 * value(i - 1) + 8.0 * value(i + 1) - value(i + 2)) / (12.0 * h);
    worst = std::max(worst, std::abs(dfdt - poisson_bracket(f, traj.state(i), params)));
  }
  return worst;
}

}  // namespace zitterlab
