#include "polyhedral_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "rectconst/error.hpp"
#include "sweep.hpp"

namespace rectconst::detail {
namespace {

struct Candidate {
  double value;
  double phi;
  double s;  // ||w||, orders candidates along one direction
  Vector w;
};

}  // namespace

ExactHit polyhedral_line_max(const PolygonNorm& poly, double a) {
  const auto& verts = poly.vertices();
  const auto& facets = poly.facets();
  ExactHit best;
  bool have = false;

  for (const Vector& u : verts) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& f : facets) top = std::max(top, f(u));
    std::vector<FacetFunctional> active;
    for (const auto& f : facets) {
      if (f(u) >= top * (1.0 - 1e-12)) active.push_back(f);
    }

    auto in_cone = [&](const Vector& d) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& f : active) {
        lo = std::min(lo, f(d));
        hi = std::max(hi, f(d));
      }
      const double eps = 1e-12 * d.max_abs();
      return lo <= eps && hi >= -eps;
    };

    std::vector<Vector> rays;
    for (const auto& f : active) {
      rays.push_back(Vector{-f.a[1], f.a[0]});
      rays.push_back(Vector{f.a[1], -f.a[0]});
    }
    for (const Vector& v : verts) {
      if (in_cone(v)) rays.push_back(v);
    }

    std::vector<Candidate> cands;
    for (const Vector& d : rays) {
      for (const Vector& v : verts) {
        // s1 d = -u + s2 v
        const double det = v[0] * d[1] - d[0] * v[1];
        if (std::abs(det) < 1e-14 * d.max_abs() * v.max_abs()) continue;
        const double s1 = (u[0] * v[1] - v[0] * u[1]) / det;
        const double s2 = (d[1] * u[0] - d[0] * u[1]) / det;
        if (!(s1 > 0.0) || s2 < -1e-12) continue;
        const Vector w = d * s1;
        const double nw = poly.eval(w[0], w[1]);
        const double den = poly.eval(u[0] + w[0], u[1] + w[1]);
        if (!(nw > 0.0) || !(den > 0.0)) continue;
        cands.push_back({(a + nw) / den, polar_angle(w[0], w[1]), nw, w});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& p, const Candidate& q) {
      return std::tie(p.phi, p.s) < std::tie(q.phi, q.s);
    });
    for (const Candidate& c : cands) {
      if (!have || strictly_better(c.value, best.value)) {
        best = ExactHit{c.value, u, c.w};
        have = true;
      }
    }
  }
  if (!have) throw NumericalError("no feasible direction at any extreme point");
  return best;
}

}  // namespace rectconst::detail
