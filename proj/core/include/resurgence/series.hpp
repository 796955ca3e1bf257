#pragma once

#include <vector>

#include "resurgence/types.hpp"

namespace resurgence {

/// A truncated formal power series sum c_j z^j, j = 0..degree(). No
/// convergence is assumed; arithmetic is exact on coefficients up to the
/// truncation order.
class FormalSeries {
 public:
  FormalSeries() : coeffs_(1, cplx(0.0)) {}
  explicit FormalSeries(std::vector<cplx> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int j) const;

  bool zero_constant_term() const { return coeffs_[0] == cplx(0.0); }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  FormalSeries truncated(int n) const;

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(cplx s, const FormalSeries& a);

  /// Product truncated at order n (coefficients of z^0..z^n).
  friend FormalSeries mul_trunc(const FormalSeries& a, const FormalSeries& b, int n);

 private:
  std::vector<cplx> coeffs_;
};

}  // namespace resurgence
