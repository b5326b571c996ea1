#pragma once

#include <algorithm>
#include <cmath>

#include "zitterlab/minkowski.hpp"

namespace zitterlab {

/// A residual of an identity together with the magnitude of the terms that
/// cancel in it, so callers can judge it absolutely or relatively.
struct Residual {
  double value = 0.0;
  double scale = 0.0;

  double abs() const { return std::abs(value); }
  /// |value| / scale, or |value| when every term vanished.
  double relative() const { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
};

/// Accumulates signed terms of an identity.
class ResidualSum {
 public:
  ResidualSum& add(double term) {
    sum_ += term;
    scale_ += std::abs(term);
    return *this;
  }
  ResidualSum& sub(double term) { return add(-term); }

  Residual result() const { return {sum_, scale_}; }

 private:
  double sum_ = 0.0;
  double scale_ = 0.0;
};

/// Component-wise difference reported as max-abs, scaled by the larger side.
inline Residual vector_residual(const ThreeVector& lhs, const ThreeVector& rhs) {
  Residual r;
  for (std::size_t i = 0; i < 3; ++i) {
    r.value = std::max(r.value, std::abs(lhs[i] - rhs[i]));
    r.scale = std::max({r.scale, std::abs(lhs[i]), std::abs(rhs[i])});
  }
  return r;
}

inline Residual vector_residual(const FourVector& lhs, const FourVector& rhs) {
  Residual r;
  for (std::size_t i = 0; i < 4; ++i) {
    r.value = std::max(r.value, std::abs(lhs[i] - rhs[i]));
    r.scale = std::max({r.scale, std::abs(lhs[i]), std::abs(rhs[i])});
  }
  return r;
}

}  // namespace zitterlab
