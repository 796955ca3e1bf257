#include "resurgence/germ.hpp"

#include <algorithm>
#include <cmath>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial_d(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

cplx eval_germ(const Germ& g, cplx zeta) {
  cplx u = zeta - g.center;
  cplx v = 0.0;
  for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) v = v * u + *it;
  return v;
}

std::pair<cplx, Germ> borel(const FormalSeries& s) {
  Germ g;
  int n = s.degree();
  g.coeffs.assign(std::max(n, 1), cplx(0.0));
  double fact = 1.0;  // (j-1)! running
  for (int j = 1; j <= n; ++j) {
    if (j >= 2) fact *= (j - 1);
    g.coeffs[j - 1] = s.coeff(j) / fact;
  }
  return {s.coeff(0), g};
}

FormalSeries inverse_borel(cplx constant, const Germ& g) {
  if (g.center != cplx(0.0)) throw ValidationError("inverse Borel transform needs a germ at 0");
  std::vector<cplx> c(g.coeffs.size() + 1, cplx(0.0));
  c[0] = constant;
  double fact = 1.0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (j >= 2) fact *= (j - 1);
    c[j] = g.coeffs[j - 1] * fact;
  }
  return FormalSeries(std::move(c));
}

Germ conv_origin(const Germ& a, const Germ& b) {
  if (a.center != cplx(0.0) || b.center != cplx(0.0))
    throw ValidationError("origin convolution needs germs at 0");
  int n = std::min(a.order(), b.order());
  Germ out;
  out.coeffs.assign(n + 1, cplx(0.0));
  // beta(i, j) = i! j! / (i+j+1)!, by the recurrences
  // beta(0, j) = 1/(j+1), beta(i, j) = beta(i-1, j) * i / (i+j+1)
  for (int j = 0; j < n; ++j) {
    double beta = 1.0 / (j + 1);
    for (int i = 0; i + j < n; ++i) {
      if (i > 0) beta *= static_cast<double>(i) / (i + j + 1);
      out.coeffs[i + j + 1] += a.coeffs[i] * b.coeffs[j] * beta;
    }
  }
  out.radius_hint = std::min(a.radius_hint, b.radius_hint);
  out.err = a.err + b.err;
  return out;
}

Germ unit_conv(const Germ& g) {
  if (g.center != cplx(0.0)) throw ValidationError("unit convolution needs a germ at 0");
  Germ out;
  out.coeffs.assign(g.coeffs.size() + 1, cplx(0.0));
  for (std::size_t k = 0; k < g.coeffs.size(); ++k)
    out.coeffs[k + 1] = g.coeffs[k] / static_cast<double>(k + 1);
  out.radius_hint = g.radius_hint;
  out.err = g.err;
  return out;
}

Germ recenter(const Germ& g, cplx new_center, double step_fraction) {
  cplx h = new_center - g.center;
  double ah = std::abs(h);
  if (ah == 0.0) return g;
  if (std::isfinite(g.radius_hint) && ah > step_fraction * g.radius_hint * (1 + 1e-12))
    throw ValidationError("recentering step exceeds the allowed fraction of the radius");

  Germ out = g;
  out.center = new_center;
  // exact Taylor shift of the truncated polynomial (synthetic division)
  int n = g.order();
  for (int m = 0; m < n; ++m)
    for (int k = n - 1; k >= m; --k) out.coeffs[k] += h * out.coeffs[k + 1];

  if (std::isfinite(g.radius_hint)) {
    double r = ah / g.radius_hint;
    double maxc = 0.0;
    for (cplx c : g.coeffs) maxc = std::max(maxc, std::abs(c));
    out.err = g.err + std::pow(r, n + 1) / (1.0 - r) * maxc;
    out.radius_hint = g.radius_hint - ah;
  }
  return out;
}

namespace {

// Safe continuation radius at position c, accumulated length L.
double dfs_radius(const Dfs& dfs, const std::vector<Ray>& rays, cplx c, double L) {
  (void)dfs;
  double r = kInf;
  for (const auto& ray : rays) {
    double d = std::abs(c - ray.omega);
    double cand = (ray.onset <= L) ? d : std::max(d, ray.onset - L);
    r = std::min(r, cand);
  }
  return r;
}

}  // namespace

Germ continue_along(const Germ& g, const PolyPath& path, const ContinuationPolicy& policy) {
  if (g.center != path.vertices().front())
    throw ValidationError("path must start at the germ's center");
  std::vector<cplx> oracle_sing;
  if (g.oracle) oracle_sing = oracle_singularities(*g.oracle);
  std::vector<Ray> rays;
  if (policy.dfs) rays = policy.dfs->rays();
  if (!g.oracle && !policy.dfs && !std::isfinite(g.radius_hint))
    throw ValidationError(
        "continuation needs radius information: an oracle tag, a d.f.s., or a finite radius_hint");

  Germ cur = g;
  const auto& cum = path.cumulative_lengths();
  double t = 0.0;
  const double total = path.length();
  std::size_t next_vertex = 1;

  while (t < total) {
    cplx c = path.point_at(t);
    double r_eff = std::isfinite(cur.radius_hint) ? cur.radius_hint : kInf;
    for (cplx w : oracle_sing) r_eff = std::min(r_eff, std::abs(c - w));
    if (policy.dfs) r_eff = std::min(r_eff, dfs_radius(*policy.dfs, rays, c, t));

    double step = std::min(policy.step_fraction * r_eff, policy.max_step);
    if (step < policy.min_step)
      throw NumericalError("insufficient radius: the continuation step collapsed near a singularity");

    while (next_vertex < cum.size() && cum[next_vertex] <= t + 1e-15) ++next_vertex;
    double t_next = std::min(total, t + step);
    if (next_vertex < cum.size()) t_next = std::min(t_next, cum[next_vertex]);

    cur.radius_hint = r_eff;
    cur = recenter(cur, path.point_at(t_next), policy.step_fraction);
    if (cur.err > policy.err_budget)
      throw NumericalError("continuation error budget exceeded");
    t = t_next;
  }
  return cur;
}

Germ oracle_origin_germ(const OraclePtr& f, int n) {
  OracleTracker tr(f);
  Germ g;
  g.coeffs = tr.taylor(n);
  g.oracle = f;
  g.radius_hint = kInf;
  for (cplx w : oracle_singularities(*f)) g.radius_hint = std::min(g.radius_hint, std::abs(w));
  return g;
}

Germ oracle_germ_at(const OraclePtr& f, const PolyPath& path, int n) {
  OracleTracker tr(f);
  for (cplx p : path.vertices()) tr.advance(p);
  Germ g;
  g.center = path.vertices().back();
  g.coeffs = tr.taylor(n);
  g.oracle = f;
  g.radius_hint = kInf;
  for (cplx w : oracle_singularities(*f))
    g.radius_hint = std::min(g.radius_hint, std::abs(g.center - w));
  return g;
}

}  // namespace resurgence
