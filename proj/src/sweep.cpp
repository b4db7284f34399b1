#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rectconst/error.hpp"
#include "rectconst/kernels.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/parallel.hpp"
#include "rectconst/random.hpp"

namespace rectconst::detail {
namespace {

constexpr double kPi = std::numbers::pi;

LineMax maximize_ranges(const kernels::LineNorm& line, const LineProblem& problem,
                        const SearchConfig& config) {
  LineMax best{0.0, -1.0};
  for (const auto& [lo, hi] : problem.ranges) {
    const LineMax m = maximize_on_line(line, problem.weight, lo, hi, config.t_grid, config.refine_tol);
    if (m.value > best.value) best = m;
  }
  return best;
}

void offer_pair(const NormDescriptor& norm, const SearchConfig& config, const LineProblem& problem,
                const Vector& x, const Vector& y, double theta, double phi, SweepHit& best) {
  const bool y_base = problem.form == LineProblem::Form::y_plus_t_x;
  const kernels::LineNorm line(norm, y_base ? y : x, y_base ? x : y);
  const LineMax m = maximize_ranges(line, problem, config);
  if (!best.found || strictly_better(m.value, best.value)) {
    best = SweepHit{true, m.value, x, y, m.t, theta, phi};
  }
}

}  // namespace

bool strictly_better(double a, double b) { return a > b + 1e-12 * std::abs(b); }

std::vector<double> sweep_base_angles(const NormDescriptor& norm, std::size_t resolution) {
  if (norm.dim() != 2) throw DimensionError("the sweep needs a two-dimensional norm");
  std::vector<double> out(resolution);
  for (std::size_t i = 0; i < resolution; ++i) out[i] = kPi * double(i) / double(resolution);
  if (const auto poly = polyhedral_equivalent(norm)) {
    for (const Vector& v : poly->polygon()->vertices()) {
      const double a = polar_angle(v[0], v[1]);
      if (a < kPi) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<double> dedup;
  dedup.reserve(out.size());
  for (double a : out) {
    if (!dedup.empty() && a - dedup.back() <= 1e-12) continue;
    dedup.push_back(a);
  }
  return dedup;
}

std::vector<double> cone_samples(const OrthoCone& cone, std::size_t samples) {
  std::vector<double> out;
  for (const Arc& arc : cone.arcs) {
    if (arc.width() < 1e-6) {
      out.push_back(0.5 * (arc.lo + arc.hi));
      continue;
    }
    for (std::size_t j = 0; j < samples; ++j) {
      out.push_back(arc.lo + arc.width() * double(j) / double(samples - 1));
    }
  }
  return out;
}

SweepHit sweep_maximize(const NormDescriptor& norm, const SearchConfig& config, const LineProblem& problem) {
  config.validate();
  const std::vector<double> bases = sweep_base_angles(norm, config.theta_resolution);
  const auto per_base = parallel_map<SweepHit>(bases.size(), config.threads, [&](std::size_t i) {
    SweepHit best;
    const double theta = bases[i];
    const Vector x = sphere_point(norm, theta);
    const OrthoCone cone = orthogonal_cone(norm, x, config.phi_resolution, config.tol);
    const DirectionalDerivatives probe(norm, x);
    for (double phi : cone_samples(cone, config.phi_resolution)) {
      const Vector y = sphere_point(norm, phi);
      if (!probe.check(y, config.tol).orthogonal) continue;
      offer_pair(norm, config, problem, x, y, theta, phi, best);
    }
    return best;
  });

  SweepHit best;
  for (const SweepHit& h : per_base) {
    if (h.found && (!best.found || strictly_better(h.value, best.value))) best = h;
  }
  if (!best.found) throw NumericalError("sweep found no certified orthogonal pair");
  return best;
}

SweepHit monte_carlo_maximize(const NormDescriptor& norm, const SearchConfig& config,
                              const LineProblem& problem) {
  config.validate();
  const std::size_t n = config.theta_resolution * 4;
  // One independent stream per sample keeps results independent of the thread count.
  const auto per_sample = parallel_map<SweepHit>(n, config.threads, [&](std::size_t i) {
    SweepHit best;
    Rng rng(config.seed * 0x9E3779B97F4A7C15ULL + i);
    const Vector x = normalize(norm, random_vector(rng, norm.dim()));
    const Vector z = random_vector(rng, norm.dim());
    const Vector yc = orthogonal_companion(norm, x, z);
    if (yc.is_zero()) return best;
    const Vector y = normalize(norm, yc);
    if (!is_bj_orthogonal(norm, x, y, config.tol).orthogonal) return best;
    offer_pair(norm, config, problem, x, y, double(i), 0.0, best);
    return best;
  });
  SweepHit best;
  for (const SweepHit& h : per_sample) {
    if (h.found && (!best.found || strictly_better(h.value, best.value))) best = h;
  }
  if (!best.found) throw NumericalError("sampling found no certified orthogonal pair");
  return best;
}

}  // namespace rectconst::detail
