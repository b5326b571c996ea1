#pragma once

// Ostrohradskyj momenta of the second-order problem, on both sides of the
// quotient projection.
//
// Index convention: every momentum is stored with contravariant components,
// the same way the closed-form Bopp momenta are written, and all contractions
// go through dot4/dot3. The AD routes differentiate with respect to raw
// coordinates, which yields covariant components; they are raised once with
// diag(1,-1,-1,-1) (spatially: negated) before being returned.

#include <cmath>

#include "zitterlab/errors.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/lagrangians.hpp"
#include "zitterlab/minkowski.hpp"
#include "zitterlab/residual.hpp"

namespace zitterlab {

template <Scalar S>
struct CanonicalStateT {
  FourVectorT<S> x{};
  FourVectorT<S> u{};
  FourVectorT<S> wp{};   ///< ℘
  FourVectorT<S> wp1{};  ///< ℘′
};

using CanonicalState = CanonicalStateT<double>;

struct ContactMomenta {
  ThreeVector p;
  ThreeVector p1;  ///< 𝐩′
};

struct Momenta {
  FourVector wp;
  FourVector wp1;
};

/// ℘′ = (a/‖u‖⁵)[u²u̇ − (u·u̇)u]; needs only the first two jet levels.
template <Scalar S>
FourVectorT<S> momentum_prime_explicit(const FourVectorT<S>& u, const FourVectorT<S>& udot,
                                       const BoppParams& params) {
  const S n = checked_norm(u);
  const S n2 = n * n;
  const S n5 = n2 * n2 * n;
  return (udot * n2 - u * dot4(u, udot)) * (S(params.a) / n5);
}

template <Scalar S>
FourVectorT<S> momentum_explicit(const JetPointT<S>& p, const BoppParams& params) {
  const FourVectorT<S>& u = p.u;
  const S n = checked_norm(u);
  const S n2 = n * n;
  const S n3 = n2 * n;
  const S n5 = n3 * n2;
  const S n7 = n5 * n2;
  const S uud = dot4(u, p.udot);
  const S uudd = dot4(u, p.uddot);
  const S udud = dot4(p.udot, p.udot);
  const FourVectorT<S> bracket = p.uddot / n3 - p.udot * (S(3) * uud / n5) - u * (uudd / n5) +
                                 u * (udud / (S(2) * n5)) + u * (S(2.5) * uud * uud / n7);
  return u * (S(params.A) / (S(2) * n)) - bracket * S(params.a);
}

/// Closed-form Legendre image (℘, ℘′) of a jet of order >= 3.
inline Momenta momenta_explicit(const JetPoint& p, const BoppParams& params) {
  if (p.order < 3) throw Error(ErrorCode::OrderTooLow, "℘ needs ü");
  return {momentum_explicit(p, params), momentum_prime_explicit(p.u, p.udot, params)};
}

inline CanonicalState legendre_map(const JetPoint& p, const BoppParams& params) {
  const Momenta m = momenta_explicit(p, params);
  return {p.x, p.u, m.wp, m.wp1};
}

/// ℘′ = ∂𝓛/∂u̇ and ℘ = ∂𝓛/∂u − D_τ℘′ by dual numbers, for any Lagrangian.
template <class F>
Momenta momenta_ad(const F& lagrangian, const JetPoint& p) {
  if (p.order < 3) throw Error(ErrorCode::OrderTooLow, "momenta need a jet of order >= 3");
  FourVector wp1_lower;
  FourVector wp_lower;
  for (std::size_t a = 0; a < 4; ++a) {
    auto dl_dudot = [&](const auto& q) { return partial(lagrangian, q, JetSlot::Udot, a); };
    wp1_lower[a] = dl_dudot(p);
    wp_lower[a] = partial(lagrangian, p, JetSlot::U, a) - total_derivative_unchecked(dl_dudot, p);
  }
  return {flip_index(wp_lower), flip_index(wp1_lower)};
}

inline void add_dot4(ResidualSum& sum, const FourVector& a, const FourVector& b, double sign = 1.0) {
  sum.add(sign * a[0] * b[0]);
  for (std::size_t i = 1; i < 4; ++i) sum.add(-sign * a[i] * b[i]);
}

inline void add_dot3(ResidualSum& sum, const ThreeVector& a, const ThreeVector& b, double sign = 1.0) {
  for (std::size_t i = 0; i < 3; ++i) sum.add(-sign * a[i] * b[i]);
}

struct MomentumConstraintResiduals {
  Residual first;   ///< u·℘′
  Residual second;  ///< u·℘ + u̇·℘′ − 𝓛
};

template <class F>
MomentumConstraintResiduals zermelo_momentum_residuals(const JetPoint& p, const F& lagrangian) {
  const Momenta m = momenta_ad(lagrangian, p);
  ResidualSum first;
  add_dot4(first, p.u, m.wp1);
  ResidualSum second;
  add_dot4(second, p.u, m.wp);
  add_dot4(second, p.udot, m.wp1);
  second.sub(lagrangian(p));
  return {first.result(), second.result()};
}

/// Same identities evaluated on the closed-form Bopp momenta.
inline MomentumConstraintResiduals explicit_momentum_residuals(const JetPoint& p, const BoppParams& params) {
  const Momenta m = momenta_explicit(p, params);
  ResidualSum first;
  add_dot4(first, p.u, m.wp1);
  ResidualSum second;
  add_dot4(second, p.u, m.wp);
  add_dot4(second, p.udot, m.wp1);
  second.sub(bopp_lagrangian(p, params));
  return {first.result(), second.result()};
}

/// Closed-form contact momenta 𝐩′ = a𝐩′_r, 𝐩 = a𝐩_r + A𝐩_e.
inline ContactMomenta contact_momenta(const ContactJet& c, const BoppParams& params) {
  if (c.order < 3) throw Error(ErrorCode::OrderTooLow, "𝐩 needs v″");
  const double s = checked_gamma_sq(c.v);
  const double rs = std::sqrt(s);
  const double s32 = s * rs;
  const double s52 = s32 * s;
  const double s72 = s52 * s;
  const ThreeVector& v = c.v;
  const ThreeVector& v1 = c.vdot;
  const ThreeVector& v2 = c.vddot;
  const double vv1 = dot3(v, v1);
  const double vv2 = dot3(v, v2);
  const double v1v1 = dot3(v1, v1);

  const ThreeVector p1_r = v1 / s32 - v * (vv1 / s52);
  const ThreeVector p_r = -v2 / s32 + v1 * (3.0 * vv1 / s52) + v * (vv2 / s52) - v * (0.5 * v1v1 / s52) -
                          v * (2.5 * vv1 * vv1 / s72);
  const ThreeVector p_e = v / (2.0 * rs);
  return {params.a * p_r + params.A * p_e, params.a * p1_r};
}

/// Contact momenta by dual numbers: 𝐩′ = ∂L/∂𝐯′, 𝐩 = ∂L/∂𝐯 − D_t𝐩′ (raised).
template <class F>
ContactMomenta contact_momenta_ad(const F& density, const ContactJet& c) {
  if (c.order < 3) throw Error(ErrorCode::OrderTooLow, "𝐩 needs v″");
  auto partial_c = [&density](const auto& at, auto member, std::size_t i) {
    using S = std::decay_t<decltype(at.x0)>;
    ContactJetT<S> dir;
    (dir.*member)[i] = S(1);
    return density(seed(at, dir)).tangent();
  };
  ContactMomenta m;
  for (std::size_t i = 0; i < 3; ++i) {
    auto dl_dv1 = [&](const auto& at) {
      using S = std::decay_t<decltype(at.x0)>;
      return partial_c(at, &ContactJetT<S>::vdot, i);
    };
    m.p1[i] = -dl_dv1(c);
    m.p[i] = -(partial_c(c, &ContactJet::v, i) - total_derivative_t(dl_dv1, c));
  }
  return m;
}

struct PullbackResiduals {
  Residual wp1_time;   ///< ℘′₀ + 𝐮·𝐩′/u⁰²
  Residual wp1_space;  ///< 𝐰℘′ − 𝐩′/u⁰
  Residual wp_time;    ///< ℘₀ − (L − 𝐯𝐩 − 𝐯′𝐩′)
  Residual wp_space;   ///< 𝐰℘ − 𝐩
};

/// Checks the pullback relations between (℘, ℘′) and the contact momenta.
inline PullbackResiduals pullback_residuals(const JetPoint& p, const BoppParams& params) {
  if (p.order < 3) throw Error(ErrorCode::OrderTooLow, "pullback relations need a jet of order >= 3");
  const ContactJet c = project_contact(p);
  const Momenta m = momenta_explicit(p, params);
  const ContactMomenta cm = contact_momenta(c, params);
  const double u0 = p.u[0];
  const ThreeVector su = p.u.spatial();

  PullbackResiduals r;
  ResidualSum t1;
  t1.add(m.wp1[0]);
  add_dot3(t1, su, cm.p1, 1.0 / (u0 * u0));
  r.wp1_time = t1.result();
  r.wp1_space = vector_residual(m.wp1.spatial(), cm.p1 / u0);

  ResidualSum t3;
  t3.add(m.wp[0]).sub(contact_density(c, params));
  add_dot3(t3, c.v, cm.p);
  add_dot3(t3, c.vdot, cm.p1);
  r.wp_time = t3.result();
  r.wp_space = vector_residual(m.wp.spatial(), cm.p);
  return r;
}

struct EliminationResiduals {
  Residual work;       ///< ℘′·u̇ − ‖u‖³℘′²/a
  Residual curvature;  ///< 𝓛_r − ‖u‖³℘′²/(2a²)
};

/// Identities expressing u̇-dependent quantities through ℘′ and u alone.
inline EliminationResiduals elimination_identities(const JetPoint& p, const BoppParams& params) {
  if (p.order < 2) throw Error(ErrorCode::OrderTooLow, "elimination identities read u̇");
  const FourVector wp1 = momentum_prime_explicit(p.u, p.udot, params);
  const double n = checked_norm(p.u);
  const double n3 = n * n * n;
  const double wp1_sq = dot4(wp1, wp1);
  ResidualSum work;
  add_dot4(work, wp1, p.udot);
  work.sub(n3 * wp1_sq / params.a);
  ResidualSum curv;
  curv.add(curvature_lagrangian(p)).sub(n3 * wp1_sq / (2.0 * params.a * params.a));
  return {work.result(), curv.result()};
}

}  // namespace zitterlab
