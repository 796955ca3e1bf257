#include "resurgence/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double round12(double x) {
  double r = std::round(x * 1e12) / 1e12;
  if (r == 0.0) r = 0.0;  // normalize -0.0
  return r;
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
}

}  // namespace

Dfs::Key Dfs::key_of(cplx z) { return {round12(z.real()), round12(z.imag())}; }

void Dfs::insert(cplx z, double onset) {
  Key k = key_of(z);
  auto [it, fresh] = onset_.emplace(k, onset);
  if (!fresh && onset < it->second) it->second = onset;
}

Dfs::Dfs(double budget) : budget_(budget) {
  require_finite(budget, "budget");
  if (budget <= 0) throw ValidationError("budget must be positive");
}

Dfs Dfs::from_steps(const std::vector<DfsStep>& steps, double budget) {
  Dfs d(budget);
  for (const auto& step : steps) {
    require_finite(step.threshold, "threshold");
    if (step.threshold < 0) throw ValidationError("threshold must be >= 0");
    if (step.threshold > budget) throw ValidationError("threshold beyond budget");
    if (step.threshold == 0.0 && !step.points.empty())
      throw ValidationError("nonempty point set at threshold 0 (the filtration must start empty)");
    for (cplx p : step.points) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
        throw ValidationError("non-finite singular point");
      d.insert(p, step.threshold);
    }
  }
  return d;
}

Dfs Dfs::from_closed_discrete(const std::vector<cplx>& points, double budget) {
  Dfs d(budget);
  for (cplx p : points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw ValidationError("non-finite singular point");
    double m = std::abs(p);
    if (m == 0.0) throw ValidationError("0 cannot be a singular point of a closed discrete d.f.s.");
    if (m > budget) continue;
    d.insert(p, m);
  }
  return d;
}

Dfs Dfs::from_endless_data(double delta, const std::vector<std::vector<cplx>>& fs,
                           double budget) {
  if (!(delta > 0)) throw ValidationError("delta must be positive");
  Dfs d(budget);
  if (!fs.empty() && !fs[0].empty()) throw ValidationError("F_0 must be empty");
  for (std::size_t k = 1; k < fs.size(); ++k) {
    double onset = static_cast<double>(k) * delta;
    if (onset > budget) break;
    for (cplx p : fs[k]) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
        throw ValidationError("non-finite singular point");
      d.insert(p, onset);
    }
  }
  return d;
}

double Dfs::min_onset() const {
  double m = kInf;
  for (const auto& [k, on] : onset_) m = std::min(m, on);
  return m;
}

std::vector<cplx> Dfs::upper_value(double L) const {
  if (L < 0 || L > budget_) throw ValidationError("filtration length outside [0, budget]");
  std::vector<cplx> out;
  for (const auto& [k, on] : onset_)
    if (on <= L) out.emplace_back(k.first, k.second);
  return out;
}

double Dfs::onset_of(cplx omega) const {
  auto it = onset_.find(key_of(omega));
  return it == onset_.end() ? kInf : it->second;
}

std::vector<Ray> Dfs::rays() const {
  std::vector<Ray> out;
  out.reserve(onset_.size());
  for (const auto& [k, on] : onset_) out.push_back({cplx(k.first, k.second), on});
  return out;
}

std::vector<DfsStep> Dfs::steps() const {
  std::vector<double> thresholds;
  thresholds.reserve(onset_.size());
  for (const auto& [k, on] : onset_) thresholds.push_back(on);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<DfsStep> out;
  out.push_back({0.0, {}});
  for (double t : thresholds) {
    if (t == 0.0) continue;  // cannot happen for a valid d.f.s.; keep the empty head step
    out.push_back({t, upper_value(t)});
  }
  return out;
}

bool Dfs::subset_of(const Dfs& other) const {
  for (const auto& [k, on] : onset_) {
    auto it = other.onset_.find(k);
    if (it == other.onset_.end() || it->second > on) return false;
  }
  return true;
}

Dfs sum(const Dfs& a, const Dfs& b) {
  Dfs out(std::min(a.budget_, b.budget_));
  for (const auto& [k, on] : a.onset_)
    if (on <= out.budget_) out.insert(cplx(k.first, k.second), on);
  for (const auto& [k, on] : b.onset_)
    if (on <= out.budget_) out.insert(cplx(k.first, k.second), on);
  // min-plus convolution over onsets: onset(w1+w2) <= onset_a(w1) + onset_b(w2)
  for (const auto& [ka, la] : a.onset_) {
    if (la > out.budget_) continue;
    for (const auto& [kb, lb] : b.onset_) {
      double on = la + lb;
      if (on > out.budget_) continue;
      out.insert(cplx(ka.first + kb.first, ka.second + kb.second), on);
    }
  }
  return out;
}

Dfs star_power(const Dfs& a, int n) {
  if (n < 1) throw ValidationError("star power requires n >= 1");
  Dfs out = a;
  for (int i = 1; i < n; ++i) out = sum(out, a);
  return out;
}

Dfs star_infinity(const Dfs& a) {
  Dfs out = a;
  if (a.trivial()) return out;
  for (;;) {
    Dfs next = sum(out, a);
    if (next == out) return out;
    out = std::move(next);
  }
}

double ray_distance(const Ray& ray, const LiftedPoint& p) {
  double d = std::abs(p.zeta - ray.omega);
  if (p.lambda >= ray.onset) return d;
  return std::hypot(ray.onset - p.lambda, d);
}

double eta(const std::vector<Ray>& rays, const LiftedPoint& p) {
  double best = norm3(p);  // distance to (0,0)
  for (const auto& r : rays) best = std::min(best, ray_distance(r, p));
  return best;
}

double eta(const Dfs& omega, const LiftedPoint& p) { return eta(omega.rays(), p); }

}  // namespace resurgence
