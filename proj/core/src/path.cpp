#include "resurgence/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "resurgence/errors.hpp"

namespace resurgence {

PolyPath::PolyPath(std::vector<cplx> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("path needs at least the start vertex");
  if (vertices_.front() != cplx(0.0, 0.0)) throw ValidationError("path must start at 0");
  cumlen_.resize(vertices_.size());
  cumlen_[0] = 0.0;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].real()) || !std::isfinite(vertices_[i].imag()))
      throw ValidationError("non-finite path vertex");
    double seg = std::abs(vertices_[i] - vertices_[i - 1]);
    if (seg == 0.0) throw ValidationError("consecutive path vertices must be distinct");
    cumlen_[i] = cumlen_[i - 1] + seg;
  }
}

namespace {

// Index of the segment containing arc length t, right-continuous at
// corners; the last segment owns t == length().
std::size_t segment_index(const std::vector<double>& cum, double t) {
  auto it = std::upper_bound(cum.begin(), cum.end(), t);
  std::size_t i = static_cast<std::size_t>(it - cum.begin());
  if (i == 0) return 0;
  if (i >= cum.size()) return cum.size() - 2;
  return i - 1;
}

}  // namespace

cplx PolyPath::point_at(double t) const {
  if (t < 0 || t > length() * (1 + 1e-12) + 1e-300)
    throw ValidationError("arc length parameter out of range");
  t = std::min(t, length());
  if (vertices_.size() == 1) return vertices_[0];
  std::size_t i = segment_index(cumlen_, t);
  double seg = cumlen_[i + 1] - cumlen_[i];
  double s = (t - cumlen_[i]) / seg;
  return vertices_[i] + s * (vertices_[i + 1] - vertices_[i]);
}

cplx PolyPath::direction_at(double t) const {
  if (vertices_.size() == 1) return {0.0, 0.0};
  if (t < 0 || t > length() * (1 + 1e-12) + 1e-300)
    throw ValidationError("arc length parameter out of range");
  t = std::min(t, length());
  std::size_t i = segment_index(cumlen_, t);
  cplx d = vertices_[i + 1] - vertices_[i];
  return d / std::abs(d);
}

PolyPath PolyPath::prefix(double t) const {
  if (t < 0 || t > length() * (1 + 1e-12) + 1e-300)
    throw ValidationError("arc length parameter out of range");
  t = std::min(t, length());
  std::vector<cplx> v{vertices_[0]};
  for (std::size_t i = 1; i < vertices_.size() && cumlen_[i] <= t; ++i) v.push_back(vertices_[i]);
  cplx end = point_at(t);
  if (end != v.back()) v.push_back(end);
  return PolyPath(std::move(v));
}

PolyPath PolyPath::extended_to(cplx target) const {
  if (target == vertices_.back()) return *this;
  std::vector<cplx> v = vertices_;
  v.push_back(target);
  return PolyPath(std::move(v));
}

namespace {

// Minimum of the quadratic A s^2 + B s + C over [lo, hi].
double quad_min(double A, double B, double C, double lo, double hi) {
  double best = std::min(A * lo * lo + B * lo + C, A * hi * hi + B * hi + C);
  if (A > 0) {
    double v = -B / (2 * A);
    if (v > lo && v < hi) best = std::min(best, A * v * v + B * v + C);
  }
  return best;
}

}  // namespace

double segment_ray_distance(cplx p0, cplx p1, double lambda0, const Ray& ray) {
  const cplx dp = p1 - p0;
  const double len = std::abs(dp);
  const cplx w0 = p0 - ray.omega;
  // track: (lambda0 + s*len, p0 + s*dp), s in [0,1]
  // q1(s) = |p(s) - omega|^2, valid where lambda(s) >= onset
  const double A1 = len * len;
  const double B1 = 2 * (dp.real() * w0.real() + dp.imag() * w0.imag());
  const double C1 = std::norm(w0);
  // q2(s) = q1(s) + (onset - lambda(s))^2, valid where lambda(s) < onset
  const double a = ray.onset - lambda0;
  const double A2 = A1 + len * len;
  const double B2 = B1 - 2 * a * len;
  const double C2 = C1 + a * a;

  if (len == 0.0) {
    LiftedPoint p{lambda0, p0};
    return ray_distance(ray, p);
  }
  const double s0 = a / len;  // lambda(s0) == onset
  double best = std::numeric_limits<double>::infinity();
  if (s0 < 1.0) best = std::min(best, quad_min(A1, B1, C1, std::max(0.0, s0), 1.0));
  if (s0 > 0.0) best = std::min(best, quad_min(A2, B2, C2, 0.0, std::min(1.0, s0)));
  return std::sqrt(std::max(0.0, best));
}

namespace {

// Closest approach of one segment to one ray: distance plus the arc
// length and spatial point realizing it (for violation witnesses).
struct SegRayHit {
  double dist;
  double t;  // arc length at the closest approach
};

SegRayHit segment_ray_closest(cplx p0, cplx p1, double lambda0, const Ray& ray) {
  const cplx dp = p1 - p0;
  const double len = std::abs(dp);
  if (len == 0.0) return {ray_distance(ray, {lambda0, p0}), lambda0};
  const cplx w0 = p0 - ray.omega;
  const double A1 = len * len;
  const double B1 = 2 * (dp.real() * w0.real() + dp.imag() * w0.imag());
  const double C1 = std::norm(w0);
  const double a = ray.onset - lambda0;
  const double A2 = A1 + len * len;
  const double B2 = B1 - 2 * a * len;
  const double C2 = C1 + a * a;
  const double s0 = a / len;

  auto eval = [&](double A, double B, double C, double lo, double hi) {
    double sbest = lo, vbest = A * lo * lo + B * lo + C;
    double vhi = A * hi * hi + B * hi + C;
    if (vhi < vbest) {
      vbest = vhi;
      sbest = hi;
    }
    if (A > 0) {
      double v = -B / (2 * A);
      if (v > lo && v < hi) {
        double q = A * v * v + B * v + C;
        if (q < vbest) {
          vbest = q;
          sbest = v;
        }
      }
    }
    return std::pair<double, double>(vbest, sbest);
  };

  double best = std::numeric_limits<double>::infinity();
  double s_at = 0.0;
  if (s0 < 1.0) {
    auto [v, s] = eval(A1, B1, C1, std::max(0.0, s0), 1.0);
    if (v < best) {
      best = v;
      s_at = s;
    }
  }
  if (s0 > 0.0) {
    auto [v, s] = eval(A2, B2, C2, 0.0, std::min(1.0, s0));
    if (v < best) {
      best = v;
      s_at = s;
    }
  }
  return {std::sqrt(std::max(0.0, best)), lambda0 + s_at * len};
}

double scene_scale(const PolyPath& path, const Dfs& omega) {
  double s = 1.0;
  for (cplx v : path.vertices()) s = std::max(s, std::abs(v));
  for (const auto& r : omega.rays()) s = std::max({s, std::abs(r.omega), r.onset});
  return s;
}

}  // namespace

AllowednessReport check_allowed(const PolyPath& path, const Dfs& omega) {
  if (path.length() > omega.budget() * (1 + 1e-12))
    throw ValidationError("path longer than the d.f.s. budget");

  AllowednessReport rep;
  rep.margin = omega.budget();
  const auto rays = omega.rays();
  const auto& v = path.vertices();
  const auto& cum = path.cumulative_lengths();
  const double eps = 1e-9 * scene_scale(path, omega);

  for (const auto& ray : rays) {
    if (v.size() == 1) {
      rep.margin = std::min(rep.margin, ray_distance(ray, {0.0, v[0]}));
      continue;
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      SegRayHit hit = segment_ray_closest(v[i], v[i + 1], cum[i], ray);
      rep.margin = std::min(rep.margin, hit.dist);
      if (hit.dist <= eps && !rep.violation) {
        rep.allowed = false;
        rep.violation = {{hit.t, ray.omega}};
      } else if (hit.dist <= eps && rep.violation && hit.t < rep.violation->first) {
        rep.violation = {{hit.t, ray.omega}};
      }
    }
  }
  if (!rep.allowed) rep.margin = 0.0;
  return rep;
}

double clearance(const PolyPath& path, const Dfs& omega) {
  AllowednessReport rep = check_allowed(path, omega);
  if (!rep.allowed) return 0.0;
  return rep.margin;
}

}  // namespace resurgence
