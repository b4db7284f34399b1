#pragma once

#include "rectconst/norm.hpp"

namespace rectconst::detail {

struct ExactHit {
  double value = 0.0;
  Vector u;  // extreme point of the unit ball
  Vector w;  // u _|_B w, w != 0
};

// max of (a + ||w||) / ||u + w|| over extreme points u and w with u _|_B w.
//
// Both the rectangular constant (a = 1, w = y / t) and the *-modulus
// (a = lambda, w = t v) reduce to this. For fixed u the feasible w form a
// closed double cone bounded by the kernels of the two facets active at u.
// ||w|| is linear between consecutive rays 0 + s v_j and ||u + w|| is linear
// between consecutive rays -u + s v_j, so the ratio is linear-fractional on
// every cell of that arrangement and its maximum over the cone sits at an
// intersection of a ray through 0 with a ray through -u. The ratio tends to
// 1 at infinity and its supremum exceeds 1, so only finite vertices matter.
ExactHit polyhedral_line_max(const PolygonNorm& poly, double a);

}  // namespace rectconst::detail
