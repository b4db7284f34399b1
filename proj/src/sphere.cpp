#include "rectconst/sphere.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rectconst/error.hpp"
#include "rectconst/random.hpp"
#include "sweep.hpp"

namespace rectconst {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSphereTol = 1e-9;
constexpr double kGrowthMargin = 1e-9;

void require_planar(const NormDescriptor& norm) {
  if (norm.dim() != 2) throw DimensionError("sphere geometry is implemented for planar norms only");
}

}  // namespace

SegmentReport max_segment_length(const NormDescriptor& norm) {
  require_planar(norm);
  if (const auto poly = polyhedral_equivalent(norm)) {
    SegmentReport best;
    best.length = -1.0;
    for (const Edge& e : poly->polygon()->edges()) {
      const double len = eval_norm(*poly, e.to - e.from);
      if (len > best.length) best = SegmentReport{e.from, e.to, len, true};
    }
    return best;
  }
  const bool strictly_convex =
      norm.kind() == NormKind::euclidean || (norm.lp_norm() && norm.lp_norm()->is_smooth());
  if (!strictly_convex) throw DomainError("unsupported norm for segment detection: " + norm.describe());
  const Vector p = sphere_point(norm, 0.0);
  return SegmentReport{p, p, 0.0, true};
}

SegmentCheck segment_orthogonality_check(const NormDescriptor& norm, const Vector& u, const Vector& v) {
  if (u.dim() != norm.dim() || v.dim() != norm.dim()) {
    throw DimensionError("vector dimension does not match the norm");
  }
  if (!u.is_finite() || !v.is_finite()) throw DomainError("vector has a non-finite coordinate");
  auto on_sphere = [&](const Vector& p) { return std::abs(eval_norm(norm, p) - 1.0) <= kSphereTol; };
  if (!on_sphere(u) || !on_sphere(v)) throw PreconditionError("segment endpoints are not on the unit sphere");
  for (double s : {0.25, 0.5, 0.75}) {
    if (!on_sphere(u * (1.0 - s) + v * s)) {
      throw PreconditionError("the segment [u, v] does not lie in the unit sphere");
    }
  }
  const OrthoResult r = is_bj_orthogonal(norm, u, v - u);
  return SegmentCheck{r.orthogonal, r.certificate, !r.orthogonal};
}

FlatnessReport flatness_growth_check(const NormDescriptor& norm, double l, std::size_t trials,
                                     std::uint64_t seed) {
  require_planar(norm);
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("flatness bound l must be positive");
  if (trials == 0) throw DomainError("flatness check needs at least one trial");

  FlatnessReport rep;
  rep.l = l;
  rep.seed = seed;
  rep.max_segment = max_segment_length(norm).length;
  rep.hypothesis_a = rep.max_segment < l;
  rep.min_growth = std::numeric_limits<double>::infinity();

  std::vector<Vector> bases;
  if (const auto poly = polyhedral_equivalent(norm)) {
    for (const Vector& v : poly->polygon()->vertices()) bases.push_back(v);
  }
  Rng rng(seed);
  const double lambdas[] = {l, -l, 1.25 * l, -1.25 * l, 2.0 * l, -2.0 * l, 5.0 * l, -5.0 * l};
  bool strict_b = true;
  for (std::size_t i = 0; i < trials; ++i) {
    const Vector x = i < bases.size() ? bases[i] : sphere_point(norm, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const OrthoCone cone = orthogonal_cone(norm, x, 64);
    const Arc& arc = cone.arcs[rng.index(cone.arcs.size())];
    double phi = arc.lo;
    if (i % 3 == 1) phi = arc.hi;
    if (i % 3 == 2) phi = rng.uniform(arc.lo, arc.hi);
    const Vector y = sphere_point(norm, phi);
    if (!is_bj_orthogonal(norm, x, y).orthogonal) continue;
    ++rep.samples;
    for (double lambda : lambdas) {
      const double g = eval_norm(norm, x + y * lambda);
      if (g < rep.min_growth) {
        rep.min_growth = g;
        rep.min_x = x;
        rep.min_y = y;
        rep.min_lambda = lambda;
      }
      if (!(g > 1.0 + kGrowthMargin)) strict_b = false;
      if (rep.hypothesis_a && !(g > 1.0 - kGrowthMargin)) rep.growth_violation = true;
    }
  }
  rep.conclusion_b = rep.samples > 0 && strict_b;
  rep.converse_candidate = rep.conclusion_b && rep.max_segment >= l + kGrowthMargin;
  return rep;
}

IpsWindow ips_window() {
  return IpsWindow{3.0 - 2.0 * kSqrt2 + 1e-9, kSqrt2 + 1.0 - 1e-9};
}

IpsReport ips_test(const NormDescriptor& norm, const SearchConfig& config) {
  require_planar(norm);
  config.validate();
  const IpsWindow w = ips_window();
  const detail::LineProblem problem{detail::LineProblem::Form::y_plus_t_x, 1.0,
                                    {{-w.hi, -w.lo}, {w.lo, w.hi}}};
  const detail::SweepHit hit = detail::sweep_maximize(norm, config, problem);
  IpsReport rep;
  rep.window_lo = w.lo;
  rep.window_hi = w.hi;
  rep.threshold = kSqrt2 + 1e-6;
  MuWitness witness{hit.x, hit.y, hit.t, mu_ratio(norm, hit.x, hit.y, hit.t)};
  rep.sup_found = witness.value;
  rep.passed = rep.sup_found <= rep.threshold;
  if (!rep.passed) rep.witness = witness;
  return rep;
}

}  // namespace rectconst
