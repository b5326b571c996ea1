#pragma once

// Forward-mode automatic differentiation with one tangent direction.
//
// Dual<T> nests: Dual<Dual<double>> carries a mixed second derivative in
// tangent().tangent(), which is how total derivatives of gradients are taken
// in jet.hpp.

#include <cmath>
#include <concepts>
#include <ostream>
#include <type_traits>

namespace zitterlab {

template <class T>
class Dual;

template <class T>
struct is_dual : std::false_type {};

template <class T>
struct is_dual<Dual<T>> : std::true_type {};

template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

template <class S>
concept Scalar = std::floating_point<S> || is_dual_v<S>;

template <class T>
class Dual {
 public:
  using value_type = T;

  constexpr Dual() = default;
  constexpr Dual(T value, T tangent) : value_(value), tangent_(tangent) {}

  // Constants promote through any nesting depth.
  template <class U>
    requires std::is_arithmetic_v<U>
  constexpr Dual(U value) : value_(static_cast<T>(value)), tangent_(0) {}

  constexpr Dual(T value)
    requires(!std::is_arithmetic_v<T>)
      : value_(value), tangent_(0) {}

  /// A variable seeded with unit tangent.
  static constexpr Dual variable(T value) { return Dual(value, T(1)); }

  constexpr const T& value() const { return value_; }
  constexpr const T& tangent() const { return tangent_; }

  constexpr Dual& operator+=(const Dual& o) {
    value_ += o.value_;
    tangent_ += o.tangent_;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    value_ -= o.value_;
    tangent_ -= o.tangent_;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    tangent_ = tangent_ * o.value_ + value_ * o.tangent_;
    value_ *= o.value_;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    T inv = T(1) / o.value_;
    value_ *= inv;
    tangent_ = (tangent_ - value_ * o.tangent_) * inv;
    return *this;
  }

  friend constexpr Dual operator-(const Dual& a) { return Dual(-a.value_, -a.tangent_); }
  friend constexpr Dual operator+(const Dual& a) { return a; }

  friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend constexpr Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend constexpr Dual operator/(Dual a, const Dual& b) { return a /= b; }

 private:
  T value_{};
  T tangent_{};
};

template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator+(const Dual<T>& a, U b) { return a + Dual<T>(b); }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator+(U a, const Dual<T>& b) { return Dual<T>(a) + b; }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator-(const Dual<T>& a, U b) { return a - Dual<T>(b); }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator-(U a, const Dual<T>& b) { return Dual<T>(a) - b; }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator*(const Dual<T>& a, U b) {
  return Dual<T>(a.value() * static_cast<T>(b), a.tangent() * static_cast<T>(b));
}
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator*(U a, const Dual<T>& b) { return b * a; }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator/(const Dual<T>& a, U b) { return a * (1.0 / static_cast<double>(b)); }
template <class T, class U>
  requires std::is_arithmetic_v<U>
constexpr Dual<T> operator/(U a, const Dual<T>& b) { return Dual<T>(a) / b; }

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  T root = sqrt(x.value());
  return Dual<T>(root, x.tangent() / (T(2) * root));
}

/// Innermost floating-point value of a possibly nested dual.
template <Scalar S>
constexpr double primal(const S& x) {
  if constexpr (is_dual_v<S>) {
    return primal(x.value());
  } else {
    return static_cast<double>(x);
  }
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x) {
  return os << x.value() << " + " << x.tangent() << "e";
}

}  // namespace zitterlab
