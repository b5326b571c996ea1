#pragma once

// Hamilton functions of the Bopp model: the contact-chart H and the
// homogeneous 𝓗 on (x, u, ℘, ℘′), normalized so that 𝓗∘Le ≡ 1.

#include <cmath>

#include "zitterlab/errors.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/lagrangians.hpp"
#include "zitterlab/legendre.hpp"
#include "zitterlab/minkowski.hpp"
#include "zitterlab/residual.hpp"

namespace zitterlab {

struct ContactState {
  double x0 = 0.0;
  ThreeVector x;
  ThreeVector v;
  ThreeVector p;
  ThreeVector p1;  ///< 𝐩′
};

inline ContactState make_contact_state(const ContactJet& c, const ContactMomenta& m) {
  return {c.x0, c.x, c.v, m.p, m.p1};
}

/// H = 𝐩𝐯 + (1/2a)(1+𝐯²)^{3/2}(𝐩′² + (𝐩′𝐯)²) − (A/2)√(1+𝐯²), with 𝐯′ eliminated.
inline double contact_H(const ContactState& s, const BoppParams& params) {
  const double g = checked_gamma_sq(s.v);
  const double rg = std::sqrt(g);
  const double p1v = dot3(s.p1, s.v);
  return dot3(s.p, s.v) + g * rg * (dot3(s.p1, s.p1) + p1v * p1v) / (2.0 * params.a) - 0.5 * params.A * rg;
}

/// Standard form 𝐩𝐯 + 𝐩′𝐯′ − L, still depending on 𝐯′.
inline double standard_contact_H(const ContactJet& c, const ContactMomenta& m, const BoppParams& params) {
  return dot3(m.p, c.v) + dot3(m.p1, c.vdot) - contact_density(c, params);
}

/// 𝓗 = ℘·u + (1/2a)‖u‖³℘′² − (A/2)‖u‖ + 1.
template <Scalar S>
S homogeneous_H(const CanonicalStateT<S>& s, const BoppParams& params) {
  const S n = checked_norm(s.u);
  return dot4(s.wp, s.u) + n * n * n * dot4(s.wp1, s.wp1) / S(2.0 * params.a) - S(0.5 * params.A) * n + S(1);
}

namespace detail {

inline void add_homogeneous_H_terms(ResidualSum& sum, const CanonicalState& s, const BoppParams& params,
                                    double sign) {
  const double n = checked_norm(s.u);
  add_dot4(sum, s.wp, s.u, sign);
  sum.add(sign * n * n * n * dot4(s.wp1, s.wp1) / (2.0 * params.a));
  sum.add(-sign * 0.5 * params.A * n);
  sum.add(sign);
}

}  // namespace detail

/// 𝓗(Le(p)) − 1.
inline Residual h_on_legendre_residual(const JetPoint& p, const BoppParams& params) {
  const CanonicalState s = legendre_map(p, params);
  ResidualSum sum;
  detail::add_homogeneous_H_terms(sum, s, params, 1.0);
  sum.sub(1.0);
  return sum.result();
}

/// 𝓗(Le(p)) − [u⁰ H(pr p) + u⁰℘₀ + 1].
inline Residual lift_relation_residual(const JetPoint& p, const BoppParams& params) {
  if (p.order < 3) throw Error(ErrorCode::OrderTooLow, "lift relation needs a jet of order >= 3");
  const CanonicalState s = legendre_map(p, params);
  const ContactJet c = project_contact(p);
  const ContactState cs = make_contact_state(c, contact_momenta(c, params));
  const double u0 = p.u[0];
  ResidualSum sum;
  detail::add_homogeneous_H_terms(sum, s, params, 1.0);
  sum.sub(u0 * contact_H(cs, params)).sub(u0 * s.wp[0]).sub(1.0);
  return sum.result();
}

/// [℘·u + ℘′·u̇ − 𝓛 + 1] − 𝓗(Le(p)).
inline Residual direct_form_residual(const JetPoint& p, const BoppParams& params) {
  const CanonicalState s = legendre_map(p, params);
  ResidualSum sum;
  add_dot4(sum, s.wp, p.u);
  add_dot4(sum, s.wp1, p.udot);
  sum.sub(bopp_lagrangian(p, params)).add(1.0);
  detail::add_homogeneous_H_terms(sum, s, params, -1.0);
  return sum.result();
}

}  // namespace zitterlab
