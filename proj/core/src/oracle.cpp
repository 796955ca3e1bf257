#include "resurgence/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

OraclePtr make(Oracle o) { return std::make_shared<const Oracle>(std::move(o)); }

bool has_branch(Oracle::Kind k) { return k == Oracle::Kind::Log || k == Oracle::Kind::Power; }

}  // namespace

OraclePtr oracle_pole(cplx omega) {
  if (omega == cplx(0.0)) throw ValidationError("pole location must be nonzero");
  Oracle o;
  o.kind = Oracle::Kind::Pole;
  o.omega = omega;
  return make(std::move(o));
}

OraclePtr oracle_log(cplx omega) {
  if (omega == cplx(0.0)) throw ValidationError("log branch point must be nonzero");
  Oracle o;
  o.kind = Oracle::Kind::Log;
  o.omega = omega;
  return make(std::move(o));
}

OraclePtr oracle_power(cplx omega, cplx alpha) {
  if (omega == cplx(0.0)) throw ValidationError("power branch point must be nonzero");
  Oracle o;
  o.kind = Oracle::Kind::Power;
  o.omega = omega;
  o.alpha = alpha;
  return make(std::move(o));
}

OraclePtr oracle_exp(cplx rate) {
  Oracle o;
  o.kind = Oracle::Kind::Exp;
  o.alpha = rate;
  return make(std::move(o));
}

OraclePtr oracle_poly(std::vector<cplx> coeffs) {
  Oracle o;
  o.kind = Oracle::Kind::Poly;
  o.poly = std::move(coeffs);
  if (o.poly.empty()) o.poly.assign(1, cplx(0.0));
  return make(std::move(o));
}

OraclePtr oracle_sum(std::vector<OraclePtr> terms) {
  Oracle o;
  o.kind = Oracle::Kind::Sum;
  o.children = std::move(terms);
  return make(std::move(o));
}

OraclePtr oracle_product(std::vector<OraclePtr> factors) {
  Oracle o;
  o.kind = Oracle::Kind::Product;
  o.children = std::move(factors);
  return make(std::move(o));
}

namespace {

void collect_singularities(const Oracle& f, std::vector<cplx>& out) {
  switch (f.kind) {
    case Oracle::Kind::Pole:
    case Oracle::Kind::Log:
    case Oracle::Kind::Power:
      out.push_back(f.omega);
      break;
    case Oracle::Kind::Sum:
    case Oracle::Kind::Product:
      for (const auto& c : f.children) collect_singularities(*c, out);
      break;
    default:
      break;
  }
}

void collect_branches(const Oracle& f, std::vector<const Oracle*>& out) {
  if (has_branch(f.kind)) out.push_back(&f);
  for (const auto& c : f.children) collect_branches(*c, out);
}

std::vector<cplx> cauchy_product(const std::vector<cplx>& a, const std::vector<cplx>& b, int n) {
  std::vector<cplx> c(n + 1, cplx(0.0));
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == cplx(0.0)) continue;
    for (int j = 0; j <= n - i && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

std::vector<cplx> oracle_singularities(const Oracle& f) {
  std::vector<cplx> out;
  collect_singularities(f, out);
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OracleTracker::OracleTracker(OraclePtr f) : f_(std::move(f)) {
  std::vector<const Oracle*> nodes;
  collect_branches(*f_, nodes);
  branches_.reserve(nodes.size());
  for (const Oracle* n : nodes) branches_.push_back({n, cplx(1.0), cplx(0.0)});
}

void OracleTracker::advance(cplx p) {
  if (p == point_) return;
  for (auto& b : branches_) {
    cplx w = cplx(1.0) - p / b.node->omega;
    // a straight segment not through omega subtends less than pi, so the
    // principal log of the ratio is the continuous increment
    b.logw += std::log(w / b.w);
    b.w = w;
  }
  point_ = p;
}

cplx OracleTracker::eval_node(const Oracle& f, std::size_t& bi) const {
  switch (f.kind) {
    case Oracle::Kind::Pole:
      return cplx(1.0) / (cplx(1.0) - point_ / f.omega);
    case Oracle::Kind::Log:
      return -branches_[bi++].logw;
    case Oracle::Kind::Power: {
      const auto& b = branches_[bi++];
      return std::exp(f.alpha * b.logw);
    }
    case Oracle::Kind::Exp:
      return std::exp(f.alpha * point_);
    case Oracle::Kind::Poly: {
      cplx v = 0.0;
      for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) v = v * point_ + *it;
      return v;
    }
    case Oracle::Kind::Sum: {
      cplx v = 0.0;
      for (const auto& c : f.children) v += eval_node(*c, bi);
      return v;
    }
    case Oracle::Kind::Product: {
      cplx v = 1.0;
      for (const auto& c : f.children) v *= eval_node(*c, bi);
      return v;
    }
  }
  return 0.0;
}

cplx OracleTracker::value() const {
  std::size_t bi = 0;
  return eval_node(*f_, bi);
}

std::vector<cplx> OracleTracker::taylor_node(const Oracle& f, int n, std::size_t& bi) const {
  std::vector<cplx> a(n + 1, cplx(0.0));
  switch (f.kind) {
    case Oracle::Kind::Pole: {
      // 1/(1 - zeta/w) at center c: a_k = (1/w(c)) * (1/(w - c))^k ... with
      // w - c = omega * (1 - c/omega)
      cplx wc = cplx(1.0) - point_ / f.omega;
      cplx pw = cplx(1.0) / (f.omega * wc);
      a[0] = cplx(1.0) / wc;
      for (int k = 1; k <= n; ++k) a[k] = a[k - 1] * pw;
      break;
    }
    case Oracle::Kind::Log: {
      const auto& b = branches_[bi++];
      a[0] = -b.logw;
      cplx pw = cplx(1.0) / (f.omega * b.w);  // 1/(omega - c)
      cplx p = pw;
      for (int k = 1; k <= n; ++k, p *= pw) a[k] = p / static_cast<double>(k);
      break;
    }
    case Oracle::Kind::Power: {
      const auto& b = branches_[bi++];
      a[0] = std::exp(f.alpha * b.logw);
      cplx step = cplx(-1.0) / (f.omega * b.w);  // (-1/omega) * w^{-1}
      for (int k = 1; k <= n; ++k)
        a[k] = a[k - 1] * ((f.alpha - cplx(k - 1.0)) / static_cast<double>(k)) * step;
      break;
    }
    case Oracle::Kind::Exp: {
      a[0] = std::exp(f.alpha * point_);
      for (int k = 1; k <= n; ++k) a[k] = a[k - 1] * f.alpha / static_cast<double>(k);
      break;
    }
    case Oracle::Kind::Poly: {
      int deg = static_cast<int>(f.poly.size()) - 1;
      for (int k = 0; k <= std::min(n, deg); ++k) {
        cplx s = 0.0, pw = 1.0;
        double binom = 1.0;
        for (int m = k; m <= deg; ++m) {
          s += f.poly[m] * binom * pw;
          pw *= point_;
          binom = binom * (m + 1) / (m + 1 - k);
        }
        a[k] = s;
      }
      break;
    }
    case Oracle::Kind::Sum: {
      for (const auto& c : f.children) {
        auto t = taylor_node(*c, n, bi);
        for (int k = 0; k <= n; ++k) a[k] += t[k];
      }
      break;
    }
    case Oracle::Kind::Product: {
      a[0] = 1.0;
      for (const auto& c : f.children) a = cauchy_product(a, taylor_node(*c, n, bi), n);
      break;
    }
  }
  return a;
}

std::vector<cplx> OracleTracker::taylor(int n) const {
  std::size_t bi = 0;
  return taylor_node(*f_, n, bi);
}

cplx oracle_value_along(const OraclePtr& f, const std::vector<cplx>& pts) {
  OracleTracker tr(f);
  for (cplx p : pts) tr.advance(p);
  return tr.value();
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

cplx oracle_integral_along(const OraclePtr& f, const std::vector<cplx>& pts, int order) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  OracleTracker tr(f);
  if (!pts.empty()) tr.advance(pts[0]);
  cplx total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    cplx a = pts[i], b = pts[i + 1];
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // nodes visited in order along the segment to keep the branch state
    std::vector<std::size_t> idx(gx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t u, std::size_t v) { return gx[u] < gx[v]; });
    cplx seg = 0.0;
    for (std::size_t k : idx) {
      tr.advance(mid + gx[k] * half);
      seg += gw[k] * tr.value();
    }
    total += seg * half;
    tr.advance(b);
  }
  return total;
}

}  // namespace resurgence
