#pragma once

#include <optional>
#include <vector>

#include "resurgence/dfs.hpp"
#include "resurgence/types.hpp"

namespace resurgence {

/// A piecewise-linear path from 0, parameterized by arc length:
/// the parameter t ranges over [0, length()] and L(gamma|t) = t.
class PolyPath {
 public:
  /// Validates: first vertex 0, consecutive vertices distinct, finite.
  explicit PolyPath(std::vector<cplx> vertices);

  const std::vector<cplx>& vertices() const { return vertices_; }
  double length() const { return cumlen_.back(); }

  /// Position at arc length t in [0, length()].
  cplx point_at(double t) const;

  /// Unit tangent on the segment containing arc length t (right-
  /// continuous at corners).
  cplx direction_at(double t) const;

  /// Initial sub-path of arc length t.
  PolyPath prefix(double t) const;

  /// Path extended by a straight segment to `target`.
  PolyPath extended_to(cplx target) const;

  /// Cumulative arc length at each vertex.
  const std::vector<double>& cumulative_lengths() const { return cumlen_; }

 private:
  std::vector<cplx> vertices_;
  std::vector<double> cumlen_;
};

/// Outcome of the allowedness characterization for one path against one
/// d.f.s. `margin` is the minimal distance in R x C between the lifted
/// track (L(gamma|t), gamma(t)) and the closed singular support
/// (the rays only -- the unavoidable contact with (0,0) at t=0 is not
/// counted), capped at the budget.
struct AllowednessReport {
  bool allowed = true;
  double margin = 0.0;
  /// (arc length, singular point) of the first violation, if any.
  std::optional<std::pair<double, cplx>> violation;
};

/// Evaluates the upper-closure characterization exactly on the polyline:
/// the path is disallowed iff it touches some singular point omega with
/// accumulated arc length >= onset(omega). Requires length() <= budget.
AllowednessReport check_allowed(const PolyPath& path, const Dfs& omega);

/// Largest delta such that the lifted track keeps distance >= delta from
/// the closed singular support (exact per-segment computation), capped
/// at the budget; 0 for a disallowed path.
double clearance(const PolyPath& path, const Dfs& omega);

/// Exact distance in R x C between the lifted track of one segment
/// and one singular ray. The segment runs from position p0 (arc length
/// lambda0) to p1; the track's length coordinate grows with unit speed.
double segment_ray_distance(cplx p0, cplx p1, double lambda0, const Ray& ray);

}  // namespace resurgence
