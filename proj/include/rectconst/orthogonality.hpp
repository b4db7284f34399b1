#pragma once

#include <vector>

#include "rectconst/norm.hpp"

namespace rectconst {

enum class OrthoMethod { exact_polyhedral, bracketed_quotient, closed_form_lp };

const char* method_name(OrthoMethod m);

struct DerivativeBracket {
  double d_minus = 0.0;
  double d_plus = 0.0;
};

// Evidence for x _|_B y: the one-sided derivatives at 0 of
// lambda -> ||x + lambda * y / ||y|| ||. Orthogonality holds iff 0 minimizes
// this convex function, i.e. iff d_minus <= tol and d_plus >= -tol.
struct OrthoCertificate {
  double d_minus = 0.0;
  double d_plus = 0.0;
  OrthoMethod method = OrthoMethod::exact_polyhedral;
  double tol = 1e-9;

  bool asserts_orthogonal() const { return d_minus <= tol && d_plus >= -tol; }
};

struct OrthoResult {
  bool orthogonal = false;
  OrthoCertificate certificate;
};


// One-sided derivatives of lambda -> ||x + lambda * y|| at 0 for a fixed x.
// Polyhedral norms use the active facet set, l_1 and l_inf their active
// coordinates, smooth l_p norms the gradient. Keeps a pointer to `norm`.
class DirectionalDerivatives {
 public:
  DirectionalDerivatives(const NormDescriptor& norm, const Vector& x);

  DerivativeBracket operator()(const Vector& y) const;
  // is_bj_orthogonal(norm, x, y, tol) without rebuilding the probe.
  OrthoResult check(const Vector& y, double tol = 1e-9) const;
  OrthoMethod method() const { return method_; }

 private:
  const NormDescriptor* norm_;
  OrthoMethod method_;
  double x_norm_ = 0.0;
  std::vector<FacetFunctional> active_;
  Vector gradient_;                   // smooth part, or the signs for l_1 / l_inf
  std::vector<std::size_t> kinked_;  // l_inf: maximal coordinates; l_1: zero coordinates
};

DerivativeBracket one_sided_derivatives(const NormDescriptor& norm, const Vector& x, const Vector& y);

// Difference quotients q(h) = (g(h) - g(0)) / h at h = +-2^-k, k = 10..40,
// stopping once the bracket is narrower than 1e-9 or once rounding in g
// (bounded by 8 eps g / h) would exceed 1e-8. By convexity [q(-h), q(h)]
// contains [d_minus, d_plus]; the result is widened by the rounding bound so
// that this survives floating point.
DerivativeBracket bracketed_derivatives(const NormDescriptor& norm, const Vector& x, const Vector& y);

OrthoResult is_bj_orthogonal(const NormDescriptor& norm, const Vector& x, const Vector& y,
                             double tol = 1e-9);

// Closed angular interval [lo, hi], lo in [0, 2pi), hi >= lo (hi may exceed 2pi
// when the arc wraps). lo == hi denotes a single direction.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  bool is_single() const { return lo == hi; }
  double width() const { return hi - lo; }
  bool contains(double phi) const;
};

// Directions phi with base _|_B sphere_point(phi), as disjoint arcs sorted by lo.
struct OrthoCone {
  Vector base;
  std::vector<Arc> arcs;
};

OrthoCone orthogonal_cone(const NormDescriptor& norm, const Vector& x, std::size_t resolution,
                          double tol = 1e-9);

// Norming functional f with f(x) = ||x|| and dual norm 1, as a coefficient vector.
Vector james_supporting_functional(const NormDescriptor& norm, const Vector& x);

// y = z - alpha * x / ||x|| with alpha the midpoint of the derivative bracket
// of (x, z); then x _|_B y. Returns the zero vector when z is parallel to x.
Vector orthogonal_companion(const NormDescriptor& norm, const Vector& x, const Vector& z);

}  // namespace rectconst
