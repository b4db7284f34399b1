#pragma once

#include <utility>
#include <vector>

#include "rectconst/norm.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/rectangular.hpp"

namespace rectconst::detail {

// One line objective (weight + |t|) / ||base + t dir|| over a union of
// t-ranges, evaluated on every certified orthogonal pair (x, y).
struct LineProblem {
  enum class Form {
    y_plus_t_x,  // base y, direction x: the rectangular constant and the IPS window
    x_plus_t_y,  // base x, direction y: the *-modulus
  };
  Form form = Form::y_plus_t_x;
  double weight = 1.0;
  std::vector<std::pair<double, double>> ranges;
};

struct SweepHit {
  bool found = false;
  double value = -1.0;
  Vector x;
  Vector y;
  double t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// True when `a` beats `b` by more than the 1e-12 relative tie tolerance.
bool strictly_better(double a, double b);

// Base angles in [0, pi): the uniform grid plus, for polyhedral norms, the
// exact vertex angles (the kinks, where the orthogonal cone opens up).
// Restricting to a half-turn loses nothing since (x, y, t) and (-x, -y, t)
// give the same ratios.
std::vector<double> sweep_base_angles(const NormDescriptor& norm, std::size_t resolution);

// Directions sampled from the orthogonal cone: arcs narrower than 1e-6 give
// their midpoint, wider arcs `samples` equispaced points including the ends.
std::vector<double> cone_samples(const OrthoCone& cone, std::size_t samples);

// 2-D sweep over base angles and their orthogonal cones.
SweepHit sweep_maximize(const NormDescriptor& norm, const SearchConfig& config, const LineProblem& problem);

// Seeded Monte-Carlo over orthogonal pairs, any dimension; a lower bound only.
SweepHit monte_carlo_maximize(const NormDescriptor& norm, const SearchConfig& config,
                              const LineProblem& problem);

}  // namespace rectconst::detail
