#pragma once

// Four-vector algebra on Minkowski space with signature (+,-,-,-).
//
// Vectors and covectors share one representation. The spatial dot carries
// the metric sign, so dot3(v, v) = -|v|^2 and 1 + dot3(v, v) is the
// free-particle factor 1 - |v|^2.

#include <array>
#include <concepts>
#include <type_traits>
#include <cmath>
#include <ostream>

#include "zitterlab/dual.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab {

template <Scalar S>
struct ThreeVectorT {
  std::array<S, 3> s{};

  constexpr S& operator[](std::size_t i) { return s[i]; }
  constexpr const S& operator[](std::size_t i) const { return s[i]; }

  constexpr ThreeVectorT& operator+=(const ThreeVectorT& o) {
    for (std::size_t i = 0; i < 3; ++i) s[i] += o.s[i];
    return *this;
  }
  constexpr ThreeVectorT& operator-=(const ThreeVectorT& o) {
    for (std::size_t i = 0; i < 3; ++i) s[i] -= o.s[i];
    return *this;
  }
  friend constexpr ThreeVectorT operator+(ThreeVectorT a, const ThreeVectorT& b) { return a += b; }
  friend constexpr ThreeVectorT operator-(ThreeVectorT a, const ThreeVectorT& b) { return a -= b; }
  friend constexpr ThreeVectorT operator-(ThreeVectorT a) {
    for (auto& c : a.s) c = -c;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr ThreeVectorT operator*(const F& k, ThreeVectorT a) {
    for (auto& c : a.s) c = c * k;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr ThreeVectorT operator*(ThreeVectorT a, const F& k) {
    for (auto& c : a.s) c = c * k;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr ThreeVectorT operator/(ThreeVectorT a, const F& k) {
    for (auto& c : a.s) c = c / k;
    return a;
  }
  friend constexpr bool operator==(const ThreeVectorT&, const ThreeVectorT&) = default;
};

template <Scalar S>
struct FourVectorT {
  std::array<S, 4> c{};

  static constexpr FourVectorT from(S t, const ThreeVectorT<S>& space) {
    return {{t, space[0], space[1], space[2]}};
  }

  constexpr S& operator[](std::size_t i) { return c[i]; }
  constexpr const S& operator[](std::size_t i) const { return c[i]; }

  constexpr const S& t() const { return c[0]; }
  constexpr ThreeVectorT<S> spatial() const { return {{c[1], c[2], c[3]}}; }

  constexpr FourVectorT& operator+=(const FourVectorT& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr FourVectorT& operator-=(const FourVectorT& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr FourVectorT operator+(FourVectorT a, const FourVectorT& b) { return a += b; }
  friend constexpr FourVectorT operator-(FourVectorT a, const FourVectorT& b) { return a -= b; }
  friend constexpr FourVectorT operator-(FourVectorT a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr FourVectorT operator*(const F& k, FourVectorT a) {
    for (auto& x : a.c) x = x * k;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr FourVectorT operator*(FourVectorT a, const F& k) {
    for (auto& x : a.c) x = x * k;
    return a;
  }
  template <class F>
    requires std::is_arithmetic_v<F> || std::same_as<F, S>
  friend constexpr FourVectorT operator/(FourVectorT a, const F& k) {
    for (auto& x : a.c) x = x / k;
    return a;
  }
  friend constexpr bool operator==(const FourVectorT&, const FourVectorT&) = default;
};

using FourVector = FourVectorT<double>;
using ThreeVector = ThreeVectorT<double>;

/// Promote a double vector to a (possibly nested) dual vector with zero tangents.
template <Scalar S>
constexpr FourVectorT<S> lift(const FourVector& v) {
  return {{S(v[0]), S(v[1]), S(v[2]), S(v[3])}};
}

template <Scalar S>
constexpr FourVector primal(const FourVectorT<S>& v) {
  return {{primal(v[0]), primal(v[1]), primal(v[2]), primal(v[3])}};
}

inline bool is_finite(const FourVector& v) {
  for (double x : v.c) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline bool is_finite(const ThreeVector& v) {
  for (double x : v.s) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

/// Checked construction; rejects NaN and Inf components.
inline FourVector make_four_vector(double t, double s1, double s2, double s3) {
  FourVector v{{t, s1, s2, s3}};
  if (!is_finite(v)) throw Error(ErrorCode::InvalidArgument, "four-vector has non-finite component");
  return v;
}

inline ThreeVector make_three_vector(double s1, double s2, double s3) {
  ThreeVector v{{s1, s2, s3}};
  if (!is_finite(v)) throw Error(ErrorCode::InvalidArgument, "three-vector has non-finite component");
  return v;
}

template <Scalar S>
constexpr S dot4(const FourVectorT<S>& a, const FourVectorT<S>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

template <Scalar S>
constexpr S dot3(const ThreeVectorT<S>& a, const ThreeVectorT<S>& b) {
  return -(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

/// Component-wise contraction a^i b_i without the metric (chain-rule sums).
template <Scalar S>
constexpr S contract(const FourVectorT<S>& a, const FourVectorT<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Index raising/lowering with diag(1,-1,-1,-1).
template <Scalar S>
constexpr FourVectorT<S> flip_index(const FourVectorT<S>& v) {
  return {{v[0], -v[1], -v[2], -v[3]}};
}

template <Scalar S>
S norm_timelike(const FourVectorT<S>& u) {
  using std::sqrt;
  S sq = dot4(u, u);
  if (!(primal(sq) > 0.0)) throw Error(ErrorCode::NonTimelike, "u.u <= 0");
  return sqrt(sq);
}

/// Gram radicand (u.udot)^2 - (u.u)(udot.udot); non-negative for timelike u.
template <Scalar S>
constexpr S wedge_norm_sq(const FourVectorT<S>& udot, const FourVectorT<S>& u) {
  S uv = dot4(u, udot);
  return uv * uv - dot4(u, u) * dot4(udot, udot);
}

inline double wedge_norm(const FourVector& udot, const FourVector& u) {
  double rad = wedge_norm_sq(udot, u);
  if (rad >= 0.0) return std::sqrt(rad);
  double uv = dot4(u, udot);
  double scale = uv * uv + std::abs(dot4(u, u) * dot4(udot, udot));
  if (rad < -1e-12 * scale) throw Error(ErrorCode::NegativeRadicand, "wedge is not spacelike");
  return 0.0;
}

/// First curvature ‖udot ∧ u‖ / ‖u‖³ of a worldline.
inline double curvature(const FourVector& u, const FourVector& udot) {
  double n = norm_timelike(u);
  return wedge_norm(udot, u) / (n * n * n);
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const FourVectorT<S>& v) {
  return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ")";
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const ThreeVectorT<S>& v) {
  return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
}

}  // namespace zitterlab
