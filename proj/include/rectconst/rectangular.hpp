#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rectconst/norm.hpp"

namespace rectconst {

// (x, y, t, value) with x, y on the unit sphere, x _|_B y. As a witness of the
// rectangular constant: value = (1 + |t|) / ||y + t x||. As a witness of the
// *-modulus at lambda: value = (lambda + t) / ||x + t y||, t > 0.
struct MuWitness {
  Vector x;
  Vector y;
  double t = 0.0;
  double value = 0.0;
};

struct SearchConfig {
  std::size_t theta_resolution = 4096;  // base points x on the sphere
  std::size_t phi_resolution = 512;     // cone sweep grid and samples per arc
  double t_max = 6.0;                   // |t| <= t_max for the rectangular constant
  std::size_t t_grid = 512;             // grid points per half-line before golden section
  double refine_tol = 1e-6;
  double tol = 1e-9;                    // orthogonality tolerance
  std::size_t threads = 0;              // 0: hardware concurrency
  std::uint64_t seed = 0;               // Monte-Carlo sampling in dimension >= 3

  // Throws DomainError unless counts >= 16, t_max >= 3 and refine_tol in (0, 1e-3].
  void validate() const;
};

struct LineMax {
  double t = 0.0;
  double value = 0.0;
};

// (||x|| + ||y||) / ||x + y||
double mu_pair(const NormDescriptor& norm, const Vector& x, const Vector& y);

// (1 + |t|) / ||y + t x||
double mu_ratio(const NormDescriptor& norm, const Vector& x, const Vector& y, double t);

// (lambda + t) / ||x + t y||
double star_ratio(const NormDescriptor& norm, const Vector& x, const Vector& y, double t, double lambda);

// Maximizes (weight + |t|) / line(t) over [t_lo, t_hi]: a grid of `grid`
// points per side of t = 0, then golden section over the best grid cell and
// its neighbours down to refine_tol.
template <class Line>
LineMax maximize_on_line(const Line& line, double weight, double t_lo, double t_hi,
                         std::size_t grid, double refine_tol);

// Maximizes mu_ratio(x, y, .) over [t_lo, t_hi]. Orthogonality of (x, y) is the
// caller's responsibility.
LineMax best_t(const NormDescriptor& norm, const Vector& x, const Vector& y, double t_lo, double t_hi,
               double refine_tol, std::size_t grid = 512);

// Lower estimate of the rectangular constant by sweeping base points and
// their orthogonal cones (2-D), or by Monte-Carlo over orthogonal pairs (3-D+).
MuWitness mu_estimate(const NormDescriptor& norm, const SearchConfig& config = {});

// Rectangular constant of a planar polyhedral norm (l_1^2 and l_inf^2 are
// accepted through their polygons), maximizing over extreme points only.
MuWitness mu_polyhedral_exact(const NormDescriptor& norm, const SearchConfig& config = {});

// Exact path when a polygon is available, sweep otherwise.
MuWitness rectangular_constant(const NormDescriptor& norm, const SearchConfig& config = {});

struct StarModulus {
  double lambda = 1.0;
  double value = 0.0;
  MuWitness witness;     // value == star_ratio(x, y, t, lambda)
  std::string method;    // "polyhedral-exact" | "sweep" | "monte-carlo"
};

StarModulus modulus_star(const NormDescriptor& norm, double lambda, const SearchConfig& config = {});
StarModulus modulus_star_sweep(const NormDescriptor& norm, double lambda, const SearchConfig& config = {});
StarModulus modulus_star_exact(const NormDescriptor& norm, double lambda);

enum class ModulusBranch { star, reciprocal };

// mu_X(lambda) = max(mu*(lambda), lambda * mu*(1 / lambda)). The witness is the
// one of the winning branch: for `star` it satisfies
// value = (lambda + t) / ||x + t y||, for `reciprocal` value = (1 + lambda t) / ||x + t y||.
struct ModulusPoint {
  double lambda = 1.0;
  double star_value = 0.0;        // mu*(lambda)
  double reciprocal_value = 0.0;  // lambda * mu*(1 / lambda)
  double value = 0.0;
  ModulusBranch branch = ModulusBranch::star;
  MuWitness witness;
  std::string method;
};

ModulusPoint modulus(const NormDescriptor& norm, double lambda, const SearchConfig& config = {});

// Re-evaluates a modulus witness with the formula of its branch.
double modulus_witness_value(const NormDescriptor& norm, const ModulusPoint& point);

struct ModulusCurve {
  struct Failure {
    double lambda = 0.0;
    std::string message;
  };
  std::vector<ModulusPoint> points;
  std::vector<Failure> failures;
};

ModulusCurve modulus_curve(const NormDescriptor& norm, std::span<const double> lambdas,
                           const SearchConfig& config = {});

}  // namespace rectconst

#include "rectconst/detail/line_search.ipp"
