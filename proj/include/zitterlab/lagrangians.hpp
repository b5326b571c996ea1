#pragma once

// The Bopp Lagrangian 𝓛 = a𝓛_r + A𝓛_e on T²M, its density on the contact
// chart, and the Zermelo (parameter-invariance) conditions.
//
// The curvature term uses the signed square k² = (u²u̇² − (u·u̇)²)/‖u‖⁶, which
// equals u̇² in the unit gauge and is negative for a spacelike acceleration.
// In terms of the real curvature κ = curvature(u, u̇) this is 𝓛_r = −½‖u‖κ².
// The Legendre map, the Hamiltonians and the equation of motion all follow
// from this sign.

#include <cmath>

#include "zitterlab/errors.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/minkowski.hpp"
#include "zitterlab/residual.hpp"

namespace zitterlab {

struct BoppParams {
  double a = 1.0;  ///< curvature coupling, must be nonzero
  double A = 0.0;  ///< mass-term coupling
};

/// Throws InvalidArgument when a = 0 (the Hessian in u̇ loses its rank).
inline BoppParams make_bopp_params(double a, double A) {
  if (a == 0.0 || !std::isfinite(a)) {
    throw Error(ErrorCode::InvalidArgument, "a must be nonzero (rank condition on the u-dot Hessian)");
  }
  if (!std::isfinite(A)) throw Error(ErrorCode::InvalidArgument, "A must be finite");
  return {a, A};
}

inline constexpr double kNearNullGuard = 1e-12;

template <Scalar S>
S checked_norm(const FourVectorT<S>& u) {
  using std::sqrt;
  const S sq = dot4(u, u);
  if (!(primal(sq) >= kNearNullGuard)) throw Error(ErrorCode::NonTimelike, "u.u below the near-null guard");
  return sqrt(sq);
}

/// 𝓛_r = (u²u̇² − (u·u̇)²) / (2‖u‖⁵).
template <Scalar S>
S curvature_lagrangian(const JetPointT<S>& p) {
  const S n = checked_norm(p.u);
  const S n2 = n * n;
  return -wedge_norm_sq(p.udot, p.u) / (S(2) * n2 * n2 * n);
}

/// 𝓛_e = ½‖u‖.
template <Scalar S>
S free_lagrangian(const JetPointT<S>& p) {
  return S(0.5) * checked_norm(p.u);
}

template <Scalar S>
S bopp_lagrangian(const JetPointT<S>& p, const BoppParams& params) {
  if (p.order < 2) throw Error(ErrorCode::OrderTooLow, "Bopp Lagrangian reads u-dot");
  return params.a * curvature_lagrangian(p) + params.A * free_lagrangian(p);
}

/// The Bopp Lagrangian as a generic jet function.
inline auto bopp(const BoppParams& params) {
  return jet_function([params](const auto& p) { return bopp_lagrangian(p, params); }, 2);
}

template <Scalar S>
S checked_gamma_sq(const ThreeVectorT<S>& v) {
  const S s = S(1) + dot3(v, v);
  if (!(primal(s) > 0.0)) throw Error(ErrorCode::SuperluminalVelocity, "1 + v.v <= 0");
  return s;
}

/// L_r on the contact chart: ½√s (v′²/s² − (v·v′)²/s³), s = 1 + v².
template <Scalar S>
S contact_curvature_density(const ContactJetT<S>& c) {
  using std::sqrt;
  const S s = checked_gamma_sq(c.v);
  const S vv1 = dot3(c.v, c.vdot);
  const S s2 = s * s;
  return S(0.5) * sqrt(s) * (dot3(c.vdot, c.vdot) / s2 - vv1 * vv1 / (s2 * s));
}

template <Scalar S>
S contact_free_density(const ContactJetT<S>& c) {
  using std::sqrt;
  return S(0.5) * sqrt(checked_gamma_sq(c.v));
}

template <Scalar S>
S contact_density(const ContactJetT<S>& c, const BoppParams& params) {
  return params.a * contact_curvature_density(c) + params.A * contact_free_density(c);
}

struct ZermeloResiduals {
  Residual first;   ///< u^α ∂𝓛/∂u̇^α
  Residual second;  ///< u^α ∂𝓛/∂u^α + 2u̇^α ∂𝓛/∂u̇^α − 𝓛
};

template <class F>
ZermeloResiduals zermelo_residuals(const F& lagrangian, const JetPoint& p) {
  const JetGradient g = grad_jet(lagrangian, p);
  ResidualSum first;
  ResidualSum second;
  for (std::size_t i = 0; i < 4; ++i) {
    first.add(p.u[i] * g.dudot[i]);
    second.add(p.u[i] * g.du[i]).add(2.0 * p.udot[i] * g.dudot[i]);
  }
  second.sub(lagrangian(p));
  return {first.result(), second.result()};
}

}  // namespace zitterlab
