#pragma once

#include <cmath>
#include <complex>

namespace resurgence {

using cplx = std::complex<double>;

/// A point of R>=0 x C, the space in which path tracks and singular
/// supports live. The first coordinate is accumulated arc length.
struct LiftedPoint {
  double lambda = 0.0;
  cplx zeta{0.0, 0.0};

  LiftedPoint() = default;
  LiftedPoint(double l, cplx z) : lambda(l), zeta(z) {}

  LiftedPoint& operator+=(const LiftedPoint& o) {
    lambda += o.lambda;
    zeta += o.zeta;
    return *this;
  }
  friend LiftedPoint operator+(LiftedPoint a, const LiftedPoint& b) { return a += b; }
  friend LiftedPoint operator-(const LiftedPoint& a, const LiftedPoint& b) {
    return {a.lambda - b.lambda, a.zeta - b.zeta};
  }
  friend LiftedPoint operator*(double s, const LiftedPoint& p) {
    return {s * p.lambda, s * p.zeta};
  }
};

/// Euclidean norm in R x C ~= R^3.
inline double norm3(const LiftedPoint& p) {
  return std::sqrt(p.lambda * p.lambda + std::norm(p.zeta));
}

inline double dist3(const LiftedPoint& a, const LiftedPoint& b) { return norm3(a - b); }

}  // namespace resurgence
