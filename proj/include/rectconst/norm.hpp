#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rectconst/vector.hpp"

namespace rectconst {

// Linear functional z -> a . z on the plane. For a polyhedral norm each facet
// functional equals 1 on exactly one closed edge of the unit sphere.
struct FacetFunctional {
  std::array<double, 2> a{};

  double operator()(double z1, double z2) const { return a[0] * z1 + a[1] * z2; }
  double operator()(const Vector& z) const { return a[0] * z[0] + a[1] * z[1]; }
  friend bool operator==(const FacetFunctional&, const FacetFunctional&) = default;
};

// Closed edge [from, to] of a polygonal unit sphere, traversed counterclockwise.
struct Edge {
  Vector from;
  Vector to;
};

class NormDescriptor;
NormDescriptor canonicalize_polytope(std::span<const Vector> raw_vertices);

struct EuclideanNorm {
  std::size_t dim = 2;
};

// l_p norm, 1 <= p <= inf. p == +inf is the max norm.
struct LpNorm {
  double p = 2.0;
  std::size_t dim = 2;

  bool is_max() const { return p == std::numeric_limits<double>::infinity(); }
  bool is_sum() const { return p == 1.0; }
  bool is_smooth() const { return p > 1.0 && !is_max(); }
};

// Gauge of a centrally symmetric convex polygon. Only constructible through
// canonicalize_polytope, which establishes:
//   - vertices are the extreme points, counterclockwise, first one at the
//     smallest polar angle in [0, 2pi);
//   - the vertex set is exactly symmetric and 0 is strictly inside;
//   - facets[i] is the functional equal to 1 on edges[i]; both are ordered
//     counterclockwise by the polar angle of the facet normal, starting in [0, 2pi).
class PolygonNorm {
 public:
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<FacetFunctional>& facets() const { return facets_; }
  const std::vector<Edge>& edges() const { return edges_; }

  double eval(double z1, double z2) const;

 private:
  friend NormDescriptor canonicalize_polytope(std::span<const Vector>);
  PolygonNorm() = default;

  std::vector<Vector> vertices_;
  std::vector<FacetFunctional> facets_;
  std::vector<Edge> edges_;
};

enum class NormKind { euclidean, lp, polyhedral };

class NormDescriptor {
 public:
  using Variant = std::variant<EuclideanNorm, LpNorm, PolygonNorm>;

  static NormDescriptor euclidean(std::size_t dim);
  // p may be std::numeric_limits<double>::infinity().
  static NormDescriptor lp(double p, std::size_t dim);
  // Symmetrizes and canonicalizes the given points (see canonicalize_polytope).
  static NormDescriptor polyhedral(std::span<const Vector> raw_vertices);

  std::size_t dim() const;
  NormKind kind() const;
  const Variant& variant() const { return variant_; }

  const PolygonNorm* polygon() const { return std::get_if<PolygonNorm>(&variant_); }
  const LpNorm* lp_norm() const { return std::get_if<LpNorm>(&variant_); }
  bool is_euclidean() const;

  // Human-readable one-liner, e.g. "lp(p=1.5, dim=2)".
  std::string describe() const;

 private:
  friend NormDescriptor canonicalize_polytope(std::span<const Vector>);
  explicit NormDescriptor(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

double eval_norm(const NormDescriptor& norm, std::span<const double> v);
double eval_norm(const NormDescriptor& norm, const Vector& v);

Vector normalize(const NormDescriptor& norm, const Vector& v);

// normalize(norm, (cos theta, sin theta)); 2-D only.
Vector sphere_point(const NormDescriptor& norm, double theta);

NormDescriptor canonicalize_polytope(std::span<const Vector> raw_vertices);

std::vector<FacetFunctional> facet_functionals(const NormDescriptor& norm);

// Square for l_inf^2, diamond for l_1^2, the norm itself when polyhedral,
// nothing otherwise.
std::optional<NormDescriptor> polyhedral_equivalent(const NormDescriptor& norm);

struct ValidationReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

ValidationReport validate_norm(const NormDescriptor& norm, std::size_t samples,
                               std::uint64_t seed = 0);

// Polar angle mapped to [0, 2pi).
double polar_angle(double x, double y);

}  // namespace rectconst
