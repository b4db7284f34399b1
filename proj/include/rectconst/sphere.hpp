#pragma once

#include <cstdint>
#include <optional>

#include "rectconst/norm.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/rectangular.hpp"

namespace rectconst {

// Straight segment [u, v] of the unit sphere. length = ||v - u|| in the same
// norm; is_max marks a segment of largest length among all sphere segments.
// A strictly convex sphere reports the degenerate segment u = v, length 0.
struct SegmentReport {
  Vector u;
  Vector v;
  double length = 0.0;
  bool is_max = false;
};

// Longest edge for polyhedral norms (l_1^2 and l_inf^2 through their
// polygons), 0 for the Euclidean and smooth l_p norms. 2-D only.
SegmentReport max_segment_length(const NormDescriptor& norm);

struct SegmentCheck {
  bool orthogonal = false;
  OrthoCertificate certificate;
  // [u, v] lies in the sphere but u is not orthogonal to v - u: this
  // contradicts the segment lemma and can only come from a numerical defect.
  bool lemma_violation = false;
};

// Decides u _|_B (v - u) for a sphere segment [u, v]. Throws PreconditionError
// unless ||u|| = ||v|| = 1 and the points at s = 1/4, 1/2, 3/4 of the segment
// have norm 1, all within 1e-9.
SegmentCheck segment_orthogonality_check(const NormDescriptor& norm, const Vector& u, const Vector& v);

// Flatness bound l against norm growth along orthogonal lines.
//   hypothesis_a: every sphere segment is shorter than l.
//   conclusion_b: ||x + lambda y|| > 1 + 1e-9 on every sampled orthogonal pair
//                 and lambda in {+-l, +-1.25 l, +-2 l, +-5 l}.
// growth_violation flags a sample with ||x + lambda y|| <= 1 - 1e-9 while A
// holds (impossible in exact arithmetic). converse_candidate flags B holding
// on all samples although a segment of length >= l + 1e-9 exists; sampling
// cannot certify B, so this is a lead to investigate, never a proof.
struct FlatnessReport {
  double l = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // certified orthogonal pairs used
  double max_segment = 0.0;
  bool hypothesis_a = false;
  bool conclusion_b = false;
  bool growth_violation = false;
  bool converse_candidate = false;
  // Smallest ||x + lambda y|| seen, with its pair.
  double min_growth = 0.0;
  Vector min_x;
  Vector min_y;
  double min_lambda = 0.0;
};

// Pairs: x runs through the polygon vertices (if any), then seeded random
// sphere points; y through the endpoints and interior points of the
// orthogonal cone of x.
FlatnessReport flatness_growth_check(const NormDescriptor& norm, double l, std::size_t trials,
                                     std::uint64_t seed = 0);

// Open window (3 - 2 sqrt 2, sqrt 2 + 1) for |lambda|, shrunk by 1e-9 at both ends.
struct IpsWindow {
  double lo = 0.0;
  double hi = 0.0;
};
IpsWindow ips_window();

// A planar norm is Euclidean iff (1 + |t|) / ||y + t x|| <= sqrt 2 for all
// orthogonal unit pairs and |t| in the window. passed iff the sweep's sup is
// <= sqrt 2 + 1e-6; the witness is reported only on failure.
struct IpsReport {
  bool passed = false;
  double sup_found = 0.0;
  std::optional<MuWitness> witness;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double threshold = 0.0;
};

IpsReport ips_test(const NormDescriptor& norm, const SearchConfig& config = {});

}  // namespace rectconst
