#include "resurgence/series.hpp"

#include <algorithm>

#include "resurgence/errors.hpp"

namespace resurgence {

FormalSeries::FormalSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx(0.0));
  for (cplx c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("non-finite series coefficient");
}

cplx FormalSeries::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[j];
}

FormalSeries FormalSeries::truncated(int n) const {
  std::vector<cplx> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(n + 1, coeffs_.size()));
  c.resize(n + 1, cplx(0.0));
  return FormalSeries(std::move(c));
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return FormalSeries(std::move(c));
}

FormalSeries operator*(cplx s, const FormalSeries& a) {
  std::vector<cplx> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return FormalSeries(std::move(c));
}

FormalSeries mul_trunc(const FormalSeries& a, const FormalSeries& b, int n) {
  std::vector<cplx> c(n + 1, cplx(0.0));
  int da = a.degree(), db = b.degree();
  for (int i = 0; i <= std::min(da, n); ++i) {
    if (a.coeffs_[i] == cplx(0.0)) continue;
    int jmax = std::min(db, n - i);
    for (int j = 0; j <= jmax; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FormalSeries(std::move(c));
}

}  // namespace resurgence
