#pragma once

#include <limits>
#include <vector>

#include "resurgence/dfs.hpp"
#include "resurgence/oracle.hpp"
#include "resurgence/path.hpp"
#include "resurgence/series.hpp"
#include "resurgence/types.hpp"

namespace resurgence {

/// A truncated Taylor germ: coeffs[k] multiplies (zeta - center)^k.
/// `radius_hint` estimates the distance to the nearest singularity of
/// the represented function; `err` is a best-effort accumulated bound on
/// coefficient error (heuristic, not a rigorous enclosure) and never
/// decreases along continuation. An optional oracle tag names the closed
/// form the germ truncates.
struct Germ {
  cplx center{0.0, 0.0};
  std::vector<cplx> coeffs;
  double radius_hint = std::numeric_limits<double>::infinity();
  double err = 0.0;
  OraclePtr oracle;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Horner evaluation of the truncated germ at zeta.
cplx eval_germ(const Germ& g, cplx zeta);

/// Formal Borel transform: z^j goes to zeta^{j-1}/(j-1)! for j >= 1 and
/// the constant term splits off as the convolution-unit component.
/// Returns (phi_0, germ at 0).
std::pair<cplx, Germ> borel(const FormalSeries& s);

/// Inverse of `borel` on truncations; requires the germ centered at 0.
FormalSeries inverse_borel(cplx constant, const Germ& g);

/// Convolution at the origin as a coefficient operation:
/// the product of monomials obeys
///   zeta^i * zeta^j = i! j! / (i+j+1)! zeta^{i+j+1},
/// so the result has zero constant term and order min(order a, order b).
Germ conv_origin(const Germ& a, const Germ& b);

/// Convolution with the constant function 1, i.e. the coefficient-level
/// antiderivative from 0.
Germ unit_conv(const Germ& g);

/// Taylor re-expansion at a nearby center (exact polynomial shift).
/// Requires |new_center - center| <= step_fraction * radius_hint; the
/// err field grows by the geometric tail bound of the truncation at the
/// step ratio.
Germ recenter(const Germ& g, cplx new_center, double step_fraction = 0.5);

/// Step policy for disk-chain continuation. The safe radius at a point
/// reached with accumulated length L combines, when available: the
/// distance to the oracle tag's singularities, the filtration-aware
/// distance to the d.f.s. (a ray with onset l not yet active at L is
/// harmless until the extra length reaches it, giving
/// max(|c - omega|, l - L)), and the germ's own radius_hint.
struct ContinuationPolicy {
  double step_fraction = 0.5;
  double min_step = 1e-7;
  double max_step = 0.5;
  double err_budget = std::numeric_limits<double>::infinity();
  const Dfs* dfs = nullptr;
};

/// Disk-chain analytic continuation along the path (which must start at
/// the germ's center). Raises NumericalError on radius collapse or
/// exceeded error budget; ValidationError when no radius information is
/// available at all.
Germ continue_along(const Germ& g, const PolyPath& path, const ContinuationPolicy& policy);

/// Truncation of the oracle's principal branch at 0.
Germ oracle_origin_germ(const OraclePtr& f, int n);

/// Exact continued germ of the oracle along the path (branch tracked);
/// the ground truth continue_along is tested against.
Germ oracle_germ_at(const OraclePtr& f, const PolyPath& path, int n);

}  // namespace resurgence
