#include "rectconst/rectangular.hpp"

#include <cmath>
#include <numbers>

#include "polyhedral_exact.hpp"
#include "rectconst/error.hpp"
#include "rectconst/kernels.hpp"
#include "rectconst/orthogonality.hpp"
#include "sweep.hpp"

namespace rectconst {
namespace {

void check_vectors(const NormDescriptor& norm, const Vector& x, const Vector& y) {
  if (x.dim() != norm.dim() || y.dim() != norm.dim()) {
    throw DimensionError("vector dimension does not match the norm");
  }
  if (!x.is_finite() || !y.is_finite()) throw DomainError("vector has a non-finite coordinate");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
}

// Beyond this t the ratio (lambda + t) / ||u + t v|| <= (lambda + t) / (t - 1)
// drops below sqrt(1 + lambda^2) <= mu*(lambda).
double star_t_cap(double lambda, const SearchConfig& config) {
  const double s = std::sqrt(1.0 + lambda * lambda);
  return std::max({config.t_max, 2.0 + 1.0 / lambda, (lambda + s) / (s - 1.0)});
}

MuWitness to_witness(const detail::SweepHit& h) { return MuWitness{h.x, h.y, h.t, h.value}; }

NormDescriptor require_polygon(const NormDescriptor& norm) {
  auto poly = polyhedral_equivalent(norm);
  if (!poly) throw DomainError("norm has no polyhedral description: " + norm.describe());
  return *poly;
}

}  // namespace

void SearchConfig::validate() const {
  if (theta_resolution < 16 || phi_resolution < 16 || t_grid < 16) {
    throw DomainError("search resolutions must be at least 16");
  }
  if (!(t_max >= 3.0) || !std::isfinite(t_max)) throw DomainError("t_max must be at least 3");
  if (!(refine_tol > 0.0 && refine_tol <= 1e-3)) throw DomainError("refine_tol must lie in (0, 1e-3]");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tol must be positive");
}

double mu_pair(const NormDescriptor& norm, const Vector& x, const Vector& y) {
  check_vectors(norm, x, y);
  if (x.is_zero() || y.is_zero()) throw DomainError("mu(x, y) needs nonzero x and y");
  const double nx = eval_norm(norm, x), ny = eval_norm(norm, y);
  const double den = eval_norm(norm, x + y);
  if (den <= 1e-14 * (nx + ny)) throw DomainError("x + y vanishes, the ratio is undefined");
  return (nx + ny) / den;
}

double mu_ratio(const NormDescriptor& norm, const Vector& x, const Vector& y, double t) {
  check_vectors(norm, x, y);
  const double den = eval_norm(norm, y + x * t);
  if (!(den > 0.0)) throw DomainError("y + t x vanishes, the ratio is undefined");
  return (1.0 + std::abs(t)) / den;
}

double star_ratio(const NormDescriptor& norm, const Vector& x, const Vector& y, double t, double lambda) {
  check_vectors(norm, x, y);
  const double den = eval_norm(norm, x + y * t);
  if (!(den > 0.0)) throw DomainError("x + t y vanishes, the ratio is undefined");
  return (lambda + t) / den;
}

LineMax best_t(const NormDescriptor& norm, const Vector& x, const Vector& y, double t_lo, double t_hi,
               double refine_tol, std::size_t grid) {
  check_vectors(norm, x, y);
  if (!(t_lo <= t_hi)) throw DomainError("best_t needs t_lo <= t_hi");
  const kernels::LineNorm line(norm, y, x);
  return maximize_on_line(line, 1.0, t_lo, t_hi, grid, refine_tol);
}

MuWitness mu_estimate(const NormDescriptor& norm, const SearchConfig& config) {
  config.validate();
  const detail::LineProblem problem{detail::LineProblem::Form::y_plus_t_x, 1.0,
                                    {{-config.t_max, config.t_max}}};
  const detail::SweepHit hit = norm.dim() == 2 ? detail::sweep_maximize(norm, config, problem)
                                               : detail::monte_carlo_maximize(norm, config, problem);
  MuWitness w = to_witness(hit);
  w.value = mu_ratio(norm, w.x, w.y, w.t);
  return w;
}

MuWitness mu_polyhedral_exact(const NormDescriptor& norm, const SearchConfig& config) {
  config.validate();
  const NormDescriptor poly = require_polygon(norm);
  const detail::ExactHit hit = detail::polyhedral_line_max(*poly.polygon(), 1.0);
  const double nw = eval_norm(norm, hit.w);
  MuWitness w{hit.u, hit.w * (1.0 / nw), 1.0 / nw, 0.0};
  w.value = mu_ratio(norm, w.x, w.y, w.t);
  return w;
}

MuWitness rectangular_constant(const NormDescriptor& norm, const SearchConfig& config) {
  if (polyhedral_equivalent(norm)) return mu_polyhedral_exact(norm, config);
  return mu_estimate(norm, config);
}

StarModulus modulus_star_exact(const NormDescriptor& norm, double lambda) {
  check_lambda(lambda);
  const NormDescriptor poly = require_polygon(norm);
  const detail::ExactHit hit = detail::polyhedral_line_max(*poly.polygon(), lambda);
  const double nw = eval_norm(norm, hit.w);
  MuWitness w{hit.u, hit.w * (1.0 / nw), nw, 0.0};
  w.value = star_ratio(norm, w.x, w.y, w.t, lambda);
  return StarModulus{lambda, w.value, w, "polyhedral-exact"};
}

StarModulus modulus_star_sweep(const NormDescriptor& norm, double lambda, const SearchConfig& config) {
  check_lambda(lambda);
  config.validate();
  const detail::LineProblem problem{detail::LineProblem::Form::x_plus_t_y, lambda,
                                    {{0.0, star_t_cap(lambda, config)}}};
  const bool planar = norm.dim() == 2;
  const detail::SweepHit hit = planar ? detail::sweep_maximize(norm, config, problem)
                                      : detail::monte_carlo_maximize(norm, config, problem);
  MuWitness w = to_witness(hit);
  w.value = star_ratio(norm, w.x, w.y, w.t, lambda);
  return StarModulus{lambda, w.value, w, planar ? "sweep" : "monte-carlo"};
}

StarModulus modulus_star(const NormDescriptor& norm, double lambda, const SearchConfig& config) {
  check_lambda(lambda);
  if (polyhedral_equivalent(norm)) return modulus_star_exact(norm, lambda);
  return modulus_star_sweep(norm, lambda, config);
}

ModulusPoint modulus(const NormDescriptor& norm, double lambda, const SearchConfig& config) {
  check_lambda(lambda);
  const StarModulus direct = modulus_star(norm, lambda, config);
  const StarModulus inverse = modulus_star(norm, 1.0 / lambda, config);
  ModulusPoint p;
  p.lambda = lambda;
  p.star_value = direct.value;
  p.reciprocal_value = lambda * inverse.value;
  p.method = direct.method;
  if (p.reciprocal_value > p.star_value) {
    p.branch = ModulusBranch::reciprocal;
    p.value = p.reciprocal_value;
    p.witness = inverse.witness;
  } else {
    p.branch = ModulusBranch::star;
    p.value = p.star_value;
    p.witness = direct.witness;
  }
  p.witness.value = modulus_witness_value(norm, p);
  return p;
}

double modulus_witness_value(const NormDescriptor& norm, const ModulusPoint& point) {
  const MuWitness& w = point.witness;
  if (point.branch == ModulusBranch::star) return star_ratio(norm, w.x, w.y, w.t, point.lambda);
  return point.lambda * star_ratio(norm, w.x, w.y, w.t, 1.0 / point.lambda);
}

ModulusCurve modulus_curve(const NormDescriptor& norm, std::span<const double> lambdas,
                           const SearchConfig& config) {
  ModulusCurve curve;
  for (double lambda : lambdas) {
    try {
      curve.points.push_back(modulus(norm, lambda, config));
    } catch (const Error& e) {
      curve.failures.push_back({lambda, e.what()});
    }
  }
  return curve;
}

}  // namespace rectconst
