#pragma once

// Worldline jets (x, u, u̇, ü, u⃛), contact-chart jets (x⁰, x, v, v′, v″),
// and the derivative operators acting on scalar functions of them.
//
// Every derivative here is taken with forward-mode duals. A scalar jet
// function is any callable that accepts JetPointT<S> for every Scalar S and
// returns S; generic lambdas work out of the box.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <utility>

#include "zitterlab/dual.hpp"
#include "zitterlab/errors.hpp"
#include "zitterlab/minkowski.hpp"
#include "zitterlab/residual.hpp"

namespace zitterlab {

template <Scalar S>
struct JetPointT {
  FourVectorT<S> x{};
  FourVectorT<S> u{};
  FourVectorT<S> udot{};
  FourVectorT<S> uddot{};
  FourVectorT<S> utdot{};
  int order = 4;

  /// Level 0 is x, level 4 is u⃛.
  constexpr FourVectorT<S>& level(int k) {
    switch (k) {
      case 0: return x;
      case 1: return u;
      case 2: return udot;
      case 3: return uddot;
      default: return utdot;
    }
  }
  constexpr const FourVectorT<S>& level(int k) const {
    return const_cast<JetPointT&>(*this).level(k);
  }
};

using JetPoint = JetPointT<double>;

/// Builds a jet of the given order; levels above it are zero-filled.
inline JetPoint make_jet(const FourVector& x, const FourVector& u, const FourVector& udot = {},
                         const FourVector& uddot = {}, const FourVector& utdot = {}, int order = 4) {
  if (order < 1 || order > 4) throw Error(ErrorCode::InvalidArgument, "jet order must be in 1..4");
  JetPoint p{x, u, udot, uddot, utdot, order};
  for (int k = order + 1; k <= 4; ++k) p.level(k) = {};
  return p;
}

template <Scalar S>
struct ContactJetT {
  S x0{};
  ThreeVectorT<S> x{};
  ThreeVectorT<S> v{};
  ThreeVectorT<S> vdot{};
  ThreeVectorT<S> vddot{};
  int order = 3;
};

using ContactJet = ContactJetT<double>;

template <class F>
concept JetScalarFunction = requires(const F& f, const JetPointT<double>& p,
                                     const JetPointT<Dual<double>>& q) {
  { f(p) } -> std::convertible_to<double>;
  { f(q) } -> std::convertible_to<Dual<double>>;
};

template <class F>
concept ContactScalarFunction = requires(const F& f, const ContactJetT<double>& c,
                                         const ContactJetT<Dual<double>>& d) {
  { f(c) } -> std::convertible_to<double>;
  { f(d) } -> std::convertible_to<Dual<double>>;
};

/// A scalar map on jets together with the highest jet level it reads.
template <class F>
struct ScalarJetFunction {
  F eval;
  int order = 2;

  template <Scalar S>
  S operator()(const JetPointT<S>& p) const {
    return eval(p);
  }
};

template <class F>
ScalarJetFunction<F> jet_function(F f, int order) {
  if (order < 0 || order > 3) throw Error(ErrorCode::InvalidArgument, "jet function order must be in 0..3");
  return {std::move(f), order};
}

template <class F>
int order_of(const F&) {
  return 2;
}
template <class F>
int order_of(const ScalarJetFunction<F>& f) {
  return f.order;
}

// ---------------------------------------------------------------------------
// seeding

template <Scalar S>
JetPointT<S> lift(const JetPoint& p) {
  JetPointT<S> q;
  for (int k = 0; k <= 4; ++k) q.level(k) = lift<S>(p.level(k));
  q.order = p.order;
  return q;
}

template <Scalar S>
JetPointT<Dual<S>> seed(const JetPointT<S>& p, const JetPointT<S>& direction) {
  JetPointT<Dual<S>> q;
  for (int k = 0; k <= 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i) q.level(k)[i] = Dual<S>(p.level(k)[i], direction.level(k)[i]);
  }
  q.order = p.order;
  return q;
}

/// The tangent of the jet prolongation: (u, u̇, ü, u⃛, 0).
template <Scalar S>
JetPointT<S> shift(const JetPointT<S>& p) {
  return {p.u, p.udot, p.uddot, p.utdot, FourVectorT<S>{}, p.order};
}

/// Slot indices for partial derivatives: 0 = x, 1 = u, 2 = u̇, 3 = ü.
enum class JetSlot { X = 0, U = 1, Udot = 2, Uddot = 3 };

/// ∂f/∂(slot)^component at p, in raw (covariant) components.
template <Scalar S, class F>
S partial(const F& f, const JetPointT<S>& p, JetSlot slot, std::size_t component) {
  JetPointT<S> dir;
  dir.level(static_cast<int>(slot))[component] = S(1);
  return f(seed(p, dir)).tangent();
}

template <Scalar S, class F>
FourVectorT<S> partial4(const F& f, const JetPointT<S>& p, JetSlot slot) {
  FourVectorT<S> g;
  for (std::size_t i = 0; i < 4; ++i) g[i] = partial(f, p, slot, i);
  return g;
}

/// Total derivative along the jet, without the order check; works on nested duals.
template <Scalar S, class F>
S total_derivative_unchecked(const F& f, const JetPointT<S>& p) {
  return f(seed(p, shift(p))).tangent();
}

// ---------------------------------------------------------------------------
// public operations

struct JetGradient {
  FourVector dx;
  FourVector du;
  FourVector dudot;
};

/// Partial gradients of f with respect to x, u and u̇ (raw components).
template <class F>
JetGradient grad_jet(const F& f, const JetPoint& p) {
  if (p.order < 2) throw Error(ErrorCode::OrderTooLow, "grad_jet needs a jet of order >= 2");
  return {partial4(f, p, JetSlot::X), partial4(f, p, JetSlot::U), partial4(f, p, JetSlot::Udot)};
}

/// D_τ f = u ∂f/∂x + u̇ ∂f/∂u + ü ∂f/∂u̇ (+ u⃛ ∂f/∂ü for third-order f).
template <class F>
double total_derivative_tau(const F& f, const JetPoint& p) {
  if (p.order < order_of(f) + 1) throw Error(ErrorCode::OrderTooLow, "jet order too low for D_tau");
  return total_derivative_unchecked(f, p);
}

/// Quotient projection of a worldline jet onto the contact chart (x⁰ as parameter).
/// Each level is the chain-rule derivative of the previous one divided by u⁰.
template <Scalar S>
ContactJetT<S> project_contact(const JetPointT<S>& p) {
  const S& u0 = p.u[0];
  if (primal(u0) == 0.0) throw Error(ErrorCode::ZeroTimeComponent, "u^0 = 0, contact chart breaks down");
  ContactJetT<S> c;
  c.order = std::min(p.order, 3);
  c.x0 = p.x[0];
  c.x = p.x.spatial();
  const ThreeVectorT<S> su = p.u.spatial();
  const ThreeVectorT<S> sud = p.udot.spatial();
  const ThreeVectorT<S> sudd = p.uddot.spatial();
  const S u0sq = u0 * u0;
  const S u0cu = u0sq * u0;
  c.v = su / u0;
  if (p.order >= 2) {
    c.vdot = sud / u0sq - su * (p.udot[0] / u0cu);
  }
  if (p.order >= 3) {
    const S u0_4 = u0cu * u0;
    const S u0_5 = u0_4 * u0;
    const S ud0 = p.udot[0];
    c.vddot = sudd / u0cu - sud * (S(3) * ud0 / u0_4) + su * (S(3) * ud0 * ud0 / u0_5 - p.uddot[0] / u0_4);
  }
  return c;
}

template <Scalar S>
ContactJetT<Dual<S>> seed(const ContactJetT<S>& c, const ContactJetT<S>& direction) {
  ContactJetT<Dual<S>> d;
  d.order = c.order;
  d.x0 = Dual<S>(c.x0, direction.x0);
  for (std::size_t i = 0; i < 3; ++i) {
    d.x[i] = Dual<S>(c.x[i], direction.x[i]);
    d.v[i] = Dual<S>(c.v[i], direction.v[i]);
    d.vdot[i] = Dual<S>(c.vdot[i], direction.vdot[i]);
    d.vddot[i] = Dual<S>(c.vddot[i], direction.vddot[i]);
  }
  return d;
}

/// D_t f, the total derivative with respect to x⁰ on the contact chart.
template <Scalar S, class F>
S total_derivative_t(const F& f, const ContactJetT<S>& c) {
  ContactJetT<S> dir;
  dir.x0 = S(1);
  dir.x = c.v;
  dir.v = c.vdot;
  dir.vdot = c.vddot;
  return f(seed(c, dir)).tangent();
}

/// D_τ(f∘pr)(p) − u⁰ (D_t f)(pr(p)); vanishes for every f on C²(1,M).
template <class F>
Residual correspondence_residual(const F& f, const JetPoint& p) {
  if (p.order < 3) throw Error(ErrorCode::OrderTooLow, "correspondence needs a jet of order >= 3");
  auto pulled = [&f](const auto& q) { return f(project_contact(q)); };
  const double lhs = total_derivative_unchecked(pulled, p);
  const double rhs = p.u[0] * total_derivative_t(f, project_contact(p));
  return {lhs - rhs, std::abs(lhs) + std::abs(rhs)};
}

/// Brute-force Euler-Poisson expression ∂L/∂x − D_τ ∂L/∂u + D_τ² ∂L/∂u̇.
template <class F>
FourVector euler_poisson_residual_oracle(const F& lagrangian, const JetPoint& p) {
  if (p.order < 4) throw Error(ErrorCode::OrderTooLow, "Euler-Poisson expression needs an order-4 jet");
  FourVector e;
  for (std::size_t a = 0; a < 4; ++a) {
    auto dl_du = [&](const auto& q) { return partial(lagrangian, q, JetSlot::U, a); };
    auto dl_dudot = [&](const auto& q) { return partial(lagrangian, q, JetSlot::Udot, a); };
    auto dt_dl_dudot = [&](const auto& q) { return total_derivative_unchecked(dl_dudot, q); };
    e[a] = partial(lagrangian, p, JetSlot::X, a) - total_derivative_unchecked(dl_du, p) +
           total_derivative_unchecked(dt_dl_dudot, p);
  }
  return e;
}

/// Derivatives (σ′, σ″, σ‴, σ⁗) of a parameter change τ = σ(τ′) at the point.
struct Reparametrization {
  double c = 1.0;
  double b = 0.0;
  double e = 0.0;
  double f = 0.0;
};

/// Jet of the reparametrized curve τ′ ↦ x(σ(τ′)), to the order of p.
inline JetPoint reparametrize(const JetPoint& p, const Reparametrization& r) {
  const double c = r.c;
  const double b = r.b;
  JetPoint q = p;
  q.u = c * p.u;
  q.udot = c * c * p.udot + b * p.u;
  q.uddot = c * c * c * p.uddot + 3.0 * c * b * p.udot + r.e * p.u;
  q.utdot = c * c * c * c * p.utdot + 6.0 * c * c * b * p.uddot + (4.0 * c * r.e + 3.0 * b * b) * p.udot +
            r.f * p.u;
  for (int k = p.order + 1; k <= 4; ++k) q.level(k) = {};
  return q;
}

}  // namespace zitterlab
