#pragma once

#include <memory>
#include <vector>

#include "resurgence/types.hpp"

namespace resurgence {

struct Oracle;
using OraclePtr = std::shared_ptr<const Oracle>;

/// A closed-form function of zeta with tracked branches, used as ground
/// truth for analytic continuation. The catalog:
///   pole(w)      1 / (1 - zeta/w)
///   log(w)       -log(1 - zeta/w)
///   power(w, a)  (1 - zeta/w)^a
///   exp(r)       exp(r zeta)
///   poly(c)      sum c_k zeta^k
/// plus pointwise sums and products. Log and power branches are tracked
/// along paths; everything else is single-valued.
struct Oracle {
  enum class Kind { Pole, Log, Power, Exp, Poly, Sum, Product };
  Kind kind;
  cplx omega{0.0, 0.0};
  cplx alpha{0.0, 0.0};  // exponent for Power, rate for Exp
  std::vector<cplx> poly;
  std::vector<OraclePtr> children;
};

OraclePtr oracle_pole(cplx omega);
OraclePtr oracle_log(cplx omega);
OraclePtr oracle_power(cplx omega, cplx alpha);
OraclePtr oracle_exp(cplx rate = 1.0);
OraclePtr oracle_poly(std::vector<cplx> coeffs);
OraclePtr oracle_sum(std::vector<OraclePtr> terms);
OraclePtr oracle_product(std::vector<OraclePtr> factors);

/// Distinct singular points of the expression (branch points and poles).
std::vector<cplx> oracle_singularities(const Oracle& f);

/// Branch-state evaluator. Feed it the points of a polyline from 0 in
/// order; each advance moves along the straight segment from the
/// previous point (which must not pass through a singularity) and the
/// tracked branch stays continuous. Values and Taylor coefficients refer
/// to the branch reached so far.
class OracleTracker {
 public:
  explicit OracleTracker(OraclePtr f);

  /// Move to `p` along a straight segment from the current point.
  void advance(cplx p);

  /// Value of the tracked branch at the current point.
  cplx value() const;

  /// Taylor coefficients (length n+1) of the tracked branch at the
  /// current point.
  std::vector<cplx> taylor(int n) const;

  cplx current_point() const { return point_; }

 private:
  struct BranchState {
    const Oracle* node;
    cplx w;     // 1 - p/omega
    cplx logw;  // tracked continuous log of w
  };

  cplx eval_node(const Oracle& f, std::size_t& branch_idx) const;
  std::vector<cplx> taylor_node(const Oracle& f, int n, std::size_t& branch_idx) const;

  OraclePtr f_;
  cplx point_{0.0, 0.0};
  std::vector<BranchState> branches_;
};

/// Value of the tracked branch at the end of the polyline through `pts`
/// (which must start at 0).
cplx oracle_value_along(const OraclePtr& f, const std::vector<cplx>& pts);

/// Gauss-Legendre integral of f along the polyline, branch-tracked.
/// Spectrally accurate on analytic integrands; the independent
/// quadrature route for convolution cross-checks.
cplx oracle_integral_along(const OraclePtr& f, const std::vector<cplx>& pts, int order = 24);

}  // namespace resurgence
