#include "rectconst/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rectconst/error.hpp"

namespace rectconst {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kActivityTol = 1e-12;
constexpr int kBoundaryBisections = 60;
constexpr double kSingleArcWidth = 1e-12;
constexpr double kLadderNoise = 1e-8;

void check_pair(const NormDescriptor& norm, const Vector& x, const Vector& y) {
  if (x.dim() != norm.dim() || y.dim() != norm.dim()) {
    throw DimensionError("vector dimension does not match the norm");
  }
  if (!x.is_finite() || !y.is_finite()) throw DomainError("vector has a non-finite coordinate");
  if (x.is_zero()) throw DomainError("base vector x must be nonzero");
}

std::vector<FacetFunctional> active_facets(const PolygonNorm& poly, const Vector& x, double nx) {
  std::vector<FacetFunctional> active;
  for (const auto& f : poly.facets()) {
    if (f(x) >= nx * (1.0 - kActivityTol)) active.push_back(f);
  }
  return active;
}

DerivativeBracket quotient_ladder(const NormDescriptor& norm, const Vector& x_hat, const Vector& y) {
  const double ny = eval_norm(norm, y);
  if (ny == 0.0) return {};
  const Vector y_hat = y * (1.0 / ny);
  const double g0 = eval_norm(norm, x_hat);
  Vector z(x_hat.dim());
  double qp = 0.0, qm = 0.0, slack = 0.0;
  for (int k = 10; k <= 40; ++k) {
    const double h = std::ldexp(1.0, -k);
    // Rounding in g(+-h) - g(0) is a few ulps of g; once that bound divided
    // by h exceeds kLadderNoise, smaller steps only add noise.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() * (g0 + h) / h;
    if (k > 10 && noise > kLadderNoise) break;
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] = x_hat[i] + h * y_hat[i];
    qp = (eval_norm(norm, z) - g0) / h;
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] = x_hat[i] - h * y_hat[i];
    qm = (g0 - eval_norm(norm, z)) / h;
    slack = noise;
    if (qp - qm < 1e-9) break;
  }
  // Outward by the rounding bound, so the bracket still contains [d-, d+].
  return {(qm - slack) * ny, (qp + slack) * ny};
}

// Gradient of a smooth l_p norm at x (1 < p < inf), computed on x / max|x_i|.
Vector lp_gradient(const LpNorm& lp, const NormDescriptor& norm, const Vector& x) {
  const double m = x.max_abs();
  const Vector u = x * (1.0 / m);
  const double nu = eval_norm(norm, u);
  Vector g(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double a = std::abs(u[i]) / nu;
    const double s = u[i] > 0.0 ? 1.0 : (u[i] < 0.0 ? -1.0 : 0.0);
    g[i] = lp.p == 2.0 ? u[i] / nu : s * std::pow(a, lp.p - 1.0);
  }
  return g;
}

OrthoCertificate certify(const NormDescriptor& norm, const DirectionalDerivatives& probe,
                         const Vector& y, double tol) {
  OrthoCertificate cert;
  cert.method = probe.method();
  cert.tol = tol;
  if (y.is_zero()) return cert;
  const double ny = eval_norm(norm, y);
  const DerivativeBracket d = probe(y);
  cert.d_minus = d.d_minus / ny;
  cert.d_plus = d.d_plus / ny;
  return cert;
}

enum class DirClass { neg, ortho, pos };

}  // namespace

const char* method_name(OrthoMethod m) {
  switch (m) {
    case OrthoMethod::exact_polyhedral: return "exact-polyhedral";
    case OrthoMethod::bracketed_quotient: return "bracketed-quotient";
    case OrthoMethod::closed_form_lp: return "closed-form-lp";
  }
  return "unknown";
}

DirectionalDerivatives::DirectionalDerivatives(const NormDescriptor& norm, const Vector& x)
    : norm_(&norm), method_(OrthoMethod::bracketed_quotient) {
  if (x.dim() != norm.dim()) throw DimensionError("vector dimension does not match the norm");
  if (!x.is_finite()) throw DomainError("vector has a non-finite coordinate");
  if (x.is_zero()) throw DomainError("base vector x must be nonzero");
  x_norm_ = eval_norm(norm, x);
  if (const PolygonNorm* poly = norm.polygon()) {
    method_ = OrthoMethod::exact_polyhedral;
    active_ = active_facets(*poly, x, x_norm_);
    return;
  }
  if (norm.kind() == NormKind::euclidean) {
    method_ = OrthoMethod::closed_form_lp;
    gradient_ = x * (1.0 / x_norm_);
    return;
  }
  const LpNorm& lp = *norm.lp_norm();
  if (lp.is_smooth()) {
    method_ = OrthoMethod::closed_form_lp;
    gradient_ = lp_gradient(lp, norm, x);
    return;
  }
  // l_1 and l_inf are polyhedral in every dimension: the active pieces of the
  // max / sum give the one-sided derivatives exactly.
  method_ = OrthoMethod::exact_polyhedral;
  gradient_ = Vector(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double a = std::abs(x[i]);
    const bool active = lp.is_max() ? a >= x_norm_ * (1.0 - kActivityTol) : a <= x_norm_ * kActivityTol;
    if (active) kinked_.push_back(i);
    if (lp.is_max() ? active : !active) gradient_[i] = x[i] > 0.0 ? 1.0 : -1.0;
  }
}

DerivativeBracket DirectionalDerivatives::operator()(const Vector& y) const {
  if (y.dim() != norm_->dim()) throw DimensionError("vector dimension does not match the norm");
  switch (method_) {
    case OrthoMethod::exact_polyhedral: {
      if (const LpNorm* lp = norm_->lp_norm()) {
        if (lp->is_max()) {
          double lo = std::numeric_limits<double>::infinity(), hi = -lo;
          for (std::size_t i : kinked_) {
            lo = std::min(lo, gradient_[i] * y[i]);
            hi = std::max(hi, gradient_[i] * y[i]);
          }
          return {lo, hi};
        }
        double smooth = 0.0, kink = 0.0;
        for (std::size_t i = 0; i < y.dim(); ++i) smooth += gradient_[i] * y[i];
        for (std::size_t i : kinked_) kink += std::abs(y[i]);
        return {smooth - kink, smooth + kink};
      }
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const auto& f : active_) {
        const double v = f(y);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {lo, hi};
    }
    case OrthoMethod::closed_form_lp: {
      const double d = dot(gradient_, y);
      return {d, d};
    }
    case OrthoMethod::bracketed_quotient: break;
  }
  return {};
}

OrthoResult DirectionalDerivatives::check(const Vector& y, double tol) const {
  const OrthoCertificate cert = certify(*norm_, *this, y, tol);
  return {cert.asserts_orthogonal(), cert};
}

DerivativeBracket one_sided_derivatives(const NormDescriptor& norm, const Vector& x, const Vector& y) {
  check_pair(norm, x, y);
  return DirectionalDerivatives(norm, x)(y);
}

DerivativeBracket bracketed_derivatives(const NormDescriptor& norm, const Vector& x, const Vector& y) {
  check_pair(norm, x, y);
  return quotient_ladder(norm, x * (1.0 / eval_norm(norm, x)), y);
}

OrthoResult is_bj_orthogonal(const NormDescriptor& norm, const Vector& x, const Vector& y, double tol) {
  check_pair(norm, x, y);
  const DirectionalDerivatives probe(norm, x);
  const OrthoCertificate cert = certify(norm, probe, y, tol);
  return {cert.asserts_orthogonal(), cert};
}

bool Arc::contains(double phi) const {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= lo && p <= hi) return true;
  p += kTwoPi;
  return p >= lo && p <= hi;
}

OrthoCone orthogonal_cone(const NormDescriptor& norm, const Vector& x, std::size_t resolution,
                          double tol) {
  if (norm.dim() != 2) throw DimensionError("orthogonal_cone needs a two-dimensional norm");
  if (resolution < 16) throw DomainError("orthogonal_cone needs resolution >= 16");
  if (x.dim() != 2) throw DimensionError("vector dimension does not match the norm");
  OrthoCone cone;
  cone.base = normalize(norm, x);
  const DirectionalDerivatives probe(norm, cone.base);

  auto classify = [&](double phi) {
    const OrthoCertificate c = certify(norm, probe, sphere_point(norm, phi), tol);
    if (c.d_plus < -tol) return DirClass::neg;
    if (c.d_minus > tol) return DirClass::pos;
    return DirClass::ortho;
  };
  // a is inside the arc, b outside; returns the last inside point found.
  auto refine_end = [&](double a, double b) {
    for (int i = 0; i < kBoundaryBisections; ++i) {
      const double m = 0.5 * (a + b);
      if (m == a || m == b) break;
      (classify(m) == DirClass::ortho ? a : b) = m;
    }
    return a;
  };
  // a outside, b inside; returns the first inside point found.
  auto refine_start = [&](double a, double b) {
    for (int i = 0; i < kBoundaryBisections; ++i) {
      const double m = 0.5 * (a + b);
      if (m == a || m == b) break;
      (classify(m) == DirClass::ortho ? b : a) = m;
    }
    return b;
  };

  const std::size_t n = resolution;
  std::vector<DirClass> cls(n);
  for (std::size_t j = 0; j < n; ++j) cls[j] = classify(kTwoPi * double(j) / double(n));
  std::size_t s = 0;
  while (s < n && cls[s] == DirClass::ortho) ++s;
  if (s == n) throw NumericalError("every direction classified orthogonal to the base");

  auto angle = [&](std::size_t j) { return kTwoPi * double(j) / double(n); };
  auto push_arc = [&](double lo, double hi, double single) {
    Arc a{lo, hi};
    if (hi - lo < kSingleArcWidth) a = Arc{single, single};
    const double shift = std::floor(a.lo / kTwoPi) * kTwoPi;
    a.lo -= shift;
    a.hi -= shift;
    cone.arcs.push_back(a);
  };

  double open_start = 0.0;
  for (std::size_t k = s; k < s + n; ++k) {
    const DirClass c0 = cls[k % n];
    const DirClass c1 = cls[(k + 1) % n];
    if (c0 == c1) continue;
    const double a = angle(k);
    const double b = angle(k + 1);
    if (c1 == DirClass::ortho) {
      open_start = refine_start(a, b);
    } else if (c0 == DirClass::ortho) {
      const double end = refine_end(a, b);
      push_arc(open_start, end, open_start);
    } else {
      // Sign change of the derivative bracket between two grid directions:
      // the orthogonal set in between is narrower than the grid spacing.
      double lo = a, hi = b;
      const DirClass c_lo = c0;
      bool found = false;
      for (int i = 0; i < 400; ++i) {
        const double m = 0.5 * (lo + hi);
        if (m == lo || m == hi) break;
        const DirClass cm = classify(m);
        if (cm == DirClass::ortho) {
          const double start = refine_start(lo, m);
          const double end = refine_end(m, hi);
          push_arc(start, end, m);
          found = true;
          break;
        }
        (cm == c_lo ? lo : hi) = m;
      }
      (void)found;
    }
  }
  if (cone.arcs.empty()) throw NumericalError("orthogonal cone came out empty");
  std::sort(cone.arcs.begin(), cone.arcs.end(), [](const Arc& p, const Arc& q) { return p.lo < q.lo; });
  return cone;
}

Vector james_supporting_functional(const NormDescriptor& norm, const Vector& x) {
  if (x.dim() != norm.dim()) throw DimensionError("vector dimension does not match the norm");
  if (!x.is_finite()) throw DomainError("vector has a non-finite coordinate");
  if (x.is_zero()) throw DomainError("x must be nonzero");
  const double nx = eval_norm(norm, x);
  if (const PolygonNorm* poly = norm.polygon()) {
    for (const auto& f : poly->facets()) {
      if (f(x) >= nx * (1.0 - kActivityTol)) return Vector{f.a[0], f.a[1]};
    }
    throw NumericalError("no active facet at x");
  }
  if (norm.kind() == NormKind::euclidean) return x * (1.0 / nx);
  const LpNorm& lp = *norm.lp_norm();
  Vector f(x.dim());
  if (lp.is_sum()) {
    for (std::size_t i = 0; i < x.dim(); ++i) f[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
    return f;
  }
  if (lp.is_max()) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (std::abs(x[i]) >= nx * (1.0 - kActivityTol)) {
        f[i] = x[i] > 0.0 ? 1.0 : -1.0;
        return f;
      }
    }
    throw NumericalError("no maximal coordinate at x");
  }
  return lp_gradient(lp, norm, x);
}

Vector orthogonal_companion(const NormDescriptor& norm, const Vector& x, const Vector& z) {
  check_pair(norm, x, z);
  const double nx = eval_norm(norm, x);
  const DerivativeBracket d = DirectionalDerivatives(norm, x)(z);
  const double alpha = 0.5 * (d.d_minus + d.d_plus);
  Vector y = z - (alpha / nx) * x;
  if (y.max_abs() <= 1e-12 * z.max_abs()) return Vector(x.dim());
  return y;
}

}  // namespace rectconst
