#include "rectconst/norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rectconst/error.hpp"
#include "rectconst/random.hpp"

namespace rectconst {
namespace {

constexpr double kCanonTol = 1e-12;

void check_finite(std::span<const double> v) {
  for (double c : v) {
    if (!std::isfinite(c)) throw DomainError("vector has a non-finite coordinate");
  }
}

double lp_eval(const LpNorm& n, std::span<const double> v) {
  if (n.is_max()) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::abs(c));
    return m;
  }
  if (n.is_sum()) {
    double s = 0.0;
    for (double c : v) s += std::abs(c);
    return s;
  }
  if (n.p == 2.0) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
  }
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double c : v) s += std::pow(std::abs(c) / m, n.p);
  return m * std::pow(s, 1.0 / n.p);
}

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Vector clean_zero(Vector v) {
  for (double& c : v.coords()) c += 0.0;  // -0.0 -> +0.0
  return v;
}

}  // namespace

double polar_angle(double x, double y) {
  double a = std::atan2(y, x);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

double PolygonNorm::eval(double z1, double z2) const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& f : facets_) m = std::max(m, f(z1, z2));
  return m;
}

NormDescriptor NormDescriptor::euclidean(std::size_t dim) {
  if (dim < 2) throw DimensionError("dimension must be at least 2");
  return NormDescriptor(EuclideanNorm{dim});
}

NormDescriptor NormDescriptor::lp(double p, std::size_t dim) {
  if (dim < 2) throw DimensionError("dimension must be at least 2");
  if (std::isnan(p) || p < 1.0) throw DomainError("l_p norm needs p >= 1");
  return NormDescriptor(LpNorm{p, dim});
}

NormDescriptor NormDescriptor::polyhedral(std::span<const Vector> raw_vertices) {
  return canonicalize_polytope(raw_vertices);
}

std::size_t NormDescriptor::dim() const {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PolygonNorm>) {
          return 2;
        } else {
          return n.dim;
        }
      },
      variant_);
}

NormKind NormDescriptor::kind() const {
  switch (variant_.index()) {
    case 0: return NormKind::euclidean;
    case 1: return NormKind::lp;
    default: return NormKind::polyhedral;
  }
}

bool NormDescriptor::is_euclidean() const {
  if (kind() == NormKind::euclidean) return true;
  const LpNorm* l = lp_norm();
  return l != nullptr && l->p == 2.0;
}

std::string NormDescriptor::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EuclideanNorm>) {
          os << "euclidean(dim=" << n.dim << ")";
        } else if constexpr (std::is_same_v<T, LpNorm>) {
          os << "lp(p=";
          if (n.is_max()) {
            os << "inf";
          } else {
            os << n.p;
          }
          os << ", dim=" << n.dim << ")";
        } else {
          os << "polyhedral(" << n.vertices().size() << " vertices)";
        }
      },
      variant_);
  return os.str();
}

double eval_norm(const NormDescriptor& norm, std::span<const double> v) {
  if (v.size() != norm.dim()) throw DimensionError("vector dimension does not match the norm");
  check_finite(v);
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EuclideanNorm>) {
          double s = 0.0;
          for (double c : v) s += c * c;
          return std::sqrt(s);
        } else if constexpr (std::is_same_v<T, LpNorm>) {
          return lp_eval(n, v);
        } else {
          return n.eval(v[0], v[1]);
        }
      },
      norm.variant());
}

double eval_norm(const NormDescriptor& norm, const Vector& v) { return eval_norm(norm, v.coords()); }

Vector normalize(const NormDescriptor& norm, const Vector& v) {
  const double n = eval_norm(norm, v);
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  Vector out = v * (1.0 / n);
  // One correction step keeps the result within a few ulps of the sphere.
  const double n2 = eval_norm(norm, out);
  if (n2 != 1.0) out *= 1.0 / n2;
  return out;
}

Vector sphere_point(const NormDescriptor& norm, double theta) {
  if (norm.dim() != 2) throw DimensionError("sphere_point needs a two-dimensional norm");
  if (!std::isfinite(theta)) throw DomainError("angle must be finite");
  return normalize(norm, Vector{std::cos(theta), std::sin(theta)});
}

NormDescriptor canonicalize_polytope(std::span<const Vector> raw_vertices) {
  if (raw_vertices.empty()) throw DomainError("polytope needs at least two points");
  std::vector<Vector> pts;
  pts.reserve(2 * raw_vertices.size());
  double scale = 0.0;
  for (const auto& v : raw_vertices) {
    if (v.dim() != 2) throw DimensionError("polyhedral norms are two-dimensional");
    if (!v.is_finite()) throw DomainError("vertex has a non-finite coordinate");
    pts.push_back(clean_zero(v));
    pts.push_back(clean_zero(-v));
    scale = std::max(scale, v.max_abs());
  }
  if (scale == 0.0) throw DegenerateError("all points are zero");

  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  const double merge_tol = kCanonTol * scale;
  std::vector<Vector> uniq;
  for (const auto& p : pts) {
    if (!uniq.empty() && std::abs(uniq.back()[0] - p[0]) <= merge_tol &&
        std::abs(uniq.back()[1] - p[1]) <= merge_tol) {
      continue;
    }
    uniq.push_back(p);
  }

  // Andrew's monotone chain; near-collinear points are dropped so only
  // extreme points survive.
  const double area_tol = kCanonTol * scale * scale;
  std::vector<Vector> hull;
  if (uniq.size() >= 3) {
    std::vector<Vector> h(2 * uniq.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      while (k >= 2 && cross2(h[k - 2], h[k - 1], uniq[i]) <= area_tol) --k;
      h[k++] = uniq[i];
    }
    for (std::size_t i = uniq.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross2(h[k - 2], h[k - 1], uniq[i]) <= area_tol) --k;
      h[k++] = uniq[i];
    }
    h.resize(k - 1);
    hull = std::move(h);
  }
  if (hull.size() < 3) throw DegenerateError("points are collinear through the origin");

  // Rebuild from the upper half so that the vertex set is exactly symmetric.
  std::vector<Vector> verts;
  for (const auto& v : hull) {
    const double a = polar_angle(v[0], v[1]);
    if (a < std::numbers::pi) {
      verts.push_back(v);
      verts.push_back(clean_zero(-v));
    }
  }
  std::sort(verts.begin(), verts.end(), [](const Vector& a, const Vector& b) {
    return polar_angle(a[0], a[1]) < polar_angle(b[0], b[1]);
  });
  if (verts.size() < 4) throw DegenerateError("points are collinear through the origin");

  const std::size_t n = verts.size();
  std::vector<std::pair<FacetFunctional, Edge>> facets;
  facets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& p = verts[i];
    const Vector& q = verts[(i + 1) % n];
    const double c = cross(p, q);
    if (!(c > area_tol)) throw DegenerateError("origin is not strictly inside the polygon");
    FacetFunctional f{{(q[1] - p[1]) / c, (p[0] - q[0]) / c}};
    f.a[0] += 0.0;
    f.a[1] += 0.0;
    facets.push_back({f, Edge{p, q}});
  }
  std::stable_sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
    return polar_angle(a.first.a[0], a.first.a[1]) < polar_angle(b.first.a[0], b.first.a[1]);
  });

  PolygonNorm poly;
  poly.vertices_ = std::move(verts);
  for (auto& [f, e] : facets) {
    poly.facets_.push_back(f);
    poly.edges_.push_back(std::move(e));
  }
  return NormDescriptor(std::move(poly));
}

std::vector<FacetFunctional> facet_functionals(const NormDescriptor& norm) {
  const PolygonNorm* poly = norm.polygon();
  if (poly == nullptr) throw DomainError("facet functionals need a polyhedral norm");
  return poly->facets();
}

std::optional<NormDescriptor> polyhedral_equivalent(const NormDescriptor& norm) {
  if (norm.polygon() != nullptr) return norm;
  const LpNorm* l = norm.lp_norm();
  if (l == nullptr || l->dim != 2) return std::nullopt;
  if (l->is_max()) {
    const std::vector<Vector> sq{{1.0, 1.0}, {-1.0, 1.0}};
    return canonicalize_polytope(sq);
  }
  if (l->is_sum()) {
    const std::vector<Vector> dm{{1.0, 0.0}, {0.0, 1.0}};
    return canonicalize_polytope(dm);
  }
  return std::nullopt;
}

ValidationReport validate_norm(const NormDescriptor& norm, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("validate_norm needs at least one sample");
  ValidationReport report;
  report.samples = samples;
  report.seed = seed;
  Rng rng(seed);
  const std::size_t n = norm.dim();
  auto record = [&](std::size_t i, const std::string& what) {
    std::ostringstream os;
    os << "sample " << i << ": " << what;
    report.violations.push_back(os.str());
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const double sx = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double sy = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const Vector x = random_vector(rng, n) * sx;
    const Vector y = random_vector(rng, n) * sy;
    const double alpha = rng.uniform(-10.0, 10.0);
    const double nx = eval_norm(norm, x);
    const double ny = eval_norm(norm, y);
    if (std::abs(eval_norm(norm, alpha * x) - std::abs(alpha) * nx) > 1e-9 * nx * std::abs(alpha)) {
      record(i, "absolute homogeneity");
    }
    if (eval_norm(norm, x + y) > nx + ny + 1e-9) record(i, "triangle inequality");
    if (std::abs(eval_norm(norm, -x) - nx) > 1e-12 * nx) record(i, "symmetry");
    if (!(nx > 0.0)) record(i, "definiteness");
  }
  return report;
}

Vector random_vector(Rng& rng, std::size_t dim) {
  Vector v(dim);
  do {
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
  } while (v.max_abs() < 1e-3);
  return v;
}

NormDescriptor random_polygon(Rng& rng, std::size_t k_min, std::size_t k_max) {
  const std::size_t k = k_min + rng.index(k_max - k_min + 1);
  std::vector<Vector> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = rng.uniform(0.5, 1.5);
    pts.push_back(Vector{r * std::cos(a), r * std::sin(a)});
  }
  return canonicalize_polytope(pts);
}

std::vector<NormDescriptor> random_polygons(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NormDescriptor> out;
  out.reserve(count);
  while (out.size() < count) {
    try {
      out.push_back(random_polygon(rng));
    } catch (const DegenerateError&) {
      // a draw with all angles nearly aligned; draw again
    }
  }
  return out;
}

}  // namespace rectconst
