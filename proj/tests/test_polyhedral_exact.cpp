#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "polyhedral_exact.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/random.hpp"
#include "rectconst/rectangular.hpp"

using namespace rectconst;

namespace {

bool is_vertex(const PolygonNorm& p, const Vector& u) {
  for (const auto& v : p.vertices()) {
    if (u == v || u == v * -1.0) return true;
  }
  return false;
}

void check_hit(const NormDescriptor& n, const detail::ExactHit& h, double a) {
  CHECK(is_vertex(*n.polygon(), h.u));
  CHECK_FALSE(h.w.is_zero());
  CHECK(is_bj_orthogonal(n, h.u, h.w).orthogonal);
  const double v = (a + eval_norm(n, h.w)) / eval_norm(n, h.u + h.w);
  CHECK(h.value == doctest::Approx(v).epsilon(1e-12));
}

}  // namespace

TEST_CASE("square: value 3 with the vertex witness") {
  const auto sq = oracle::square_polygon();
  const auto h = detail::polyhedral_line_max(*sq.polygon(), 1.0);
  CHECK(std::abs(h.value - 3.0) <= 1e-12);
  check_hit(sq, h, 1.0);

  const auto w = mu_polyhedral_exact(oracle::square());
  CHECK(std::abs(w.value - 3.0) <= 1e-9);
  // the witness is (1, 1) with y along (-1, 0) up to the symmetries of the square
  CHECK(std::abs(std::abs(w.x[0]) - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(w.x[1]) - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(w.y[0]) + std::abs(w.y[1]) - 1.0) <= 1e-9);
  CHECK(std::min(std::abs(w.y[0]), std::abs(w.y[1])) <= 1e-9);
}

TEST_CASE("diamond: value 3") {
  const auto d = oracle::diamond_polygon();
  const auto h = detail::polyhedral_line_max(*d.polygon(), 1.0);
  CHECK(std::abs(h.value - 3.0) <= 1e-12);
  check_hit(d, h, 1.0);
}

TEST_CASE("regular hexagon lies strictly between the bounds") {
  const auto hx = oracle::hexagon();
  const auto h = detail::polyhedral_line_max(*hx.polygon(), 1.0);
  check_hit(hx, h, 1.0);
  CHECK(h.value > std::numbers::sqrt2 + 0.01);
  CHECK(h.value < 3.0 - 0.01);
  CHECK(h.value == doctest::Approx(oracle::dense_mu(hx, 2048)).epsilon(2e-3));
  CHECK(h.value >= oracle::dense_mu(hx, 2048) - 1e-9);
}

TEST_CASE("random polygons agree with the dense oracle") {
  for (const auto& n : random_polygons(12, 77)) {
    const auto h = detail::polyhedral_line_max(*n.polygon(), 1.0);
    check_hit(n, h, 1.0);
    const double ref = oracle::dense_mu(n, 1024);
    CHECK(h.value >= ref - 1e-9);
    CHECK(h.value - ref <= 2e-3);
  }
}

TEST_CASE("star form agrees with the dense oracle") {
  for (const auto& n : {oracle::square_polygon(), oracle::hexagon(), random_polygons(1, 3).front()}) {
    for (double a : {0.3, 0.5, 1.0, 2.0, 5.0}) {
      const auto h = detail::polyhedral_line_max(*n.polygon(), a);
      check_hit(n, h, a);
      const double ref = oracle::dense_star(n, a, 40.0, 1024);
      CHECK(h.value >= ref - 1e-9);
      CHECK(h.value - ref <= 2e-3);
    }
  }
}

TEST_CASE("exact engine is deterministic and invariant under vertex listing") {
  const std::vector<Vector> a{{1.0, 0.2}, {0.3, 1.0}, {-0.7, 0.8}};
  const std::vector<Vector> b{{-0.3, -1.0}, {0.7, -0.8}, {1.0, 0.2}, {-1.0, -0.2}};
  const auto na = NormDescriptor::polyhedral(a), nb = NormDescriptor::polyhedral(b);
  const auto ha = detail::polyhedral_line_max(*na.polygon(), 1.0);
  const auto hb = detail::polyhedral_line_max(*nb.polygon(), 1.0);
  CHECK(ha.value == hb.value);
  CHECK(ha.u == hb.u);
  CHECK(ha.w == hb.w);
}
