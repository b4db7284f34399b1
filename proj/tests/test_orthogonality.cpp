#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "rectconst/error.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/random.hpp"

using namespace rectconst;

namespace {
constexpr double kPi = std::numbers::pi;

// Directional derivative from a one-sided difference quotient, for oracles.
double quotient(const NormDescriptor& n, const Vector& x, const Vector& y, double h) {
  return (eval_norm(n, x + y * h) - eval_norm(n, x)) / h;
}

std::vector<NormDescriptor> planar_norms() {
  std::vector<NormDescriptor> out{NormDescriptor::euclidean(2), oracle::square(), oracle::diamond(), oracle::hexagon(),
                                  NormDescriptor::lp(1.5, 2), NormDescriptor::lp(4.0, 2)};
  for (auto& p : random_polygons(5, 13)) out.push_back(p);
  return out;
}
}  // namespace

TEST_CASE("one-sided derivatives on the reference examples") {
  auto d = one_sided_derivatives(NormDescriptor::euclidean(2), Vector{1.0, 0.0}, Vector{0.0, 1.0});
  CHECK(d.d_minus == doctest::Approx(0.0));
  CHECK(d.d_plus == doctest::Approx(0.0));
  d = one_sided_derivatives(oracle::square(), Vector{1.0, 1.0}, Vector{1.0, -1.0});
  CHECK(d.d_minus == -1.0);
  CHECK(d.d_plus == 1.0);
  d = one_sided_derivatives(oracle::diamond(), Vector{1.0, 0.0}, Vector{0.0, 1.0});
  CHECK(d.d_minus == -1.0);
  CHECK(d.d_plus == 1.0);
  d = one_sided_derivatives(oracle::square_polygon(), Vector{1.0, 1.0}, Vector{1.0, -1.0});
  CHECK(d.d_minus == -1.0);
  CHECK(d.d_plus == 1.0);
}

TEST_CASE("one-sided derivatives match difference quotients") {
  Rng rng(4);
  for (const auto& n : planar_norms()) {
    for (int i = 0; i < 200; ++i) {
      const Vector x = random_vector(rng, 2), y = random_vector(rng, 2);
      const auto d = one_sided_derivatives(n, x, y);
      CHECK(d.d_minus <= d.d_plus + 1e-12);
      // away from kinks both quotients converge to the derivative
      const double qp = quotient(n, x, y, 1e-7), qm = -quotient(n, x, y * -1.0, 1e-7);
      CHECK(d.d_plus == doctest::Approx(qp).epsilon(1e-5).scale(1.0));
      CHECK(d.d_minus == doctest::Approx(qm).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("higher-dimensional l_1 and l_inf derivatives") {
  const auto linf = NormDescriptor::lp(std::numeric_limits<double>::infinity(), 3);
  auto d = one_sided_derivatives(linf, Vector{1.0, -1.0, 0.5}, Vector{2.0, 3.0, 7.0});
  CHECK(d.d_minus == -3.0);
  CHECK(d.d_plus == 2.0);
  const auto l1 = NormDescriptor::lp(1.0, 3);
  d = one_sided_derivatives(l1, Vector{1.0, 0.0, -2.0}, Vector{1.0, -3.0, 1.0});
  CHECK(d.d_minus == -3.0);  // 1 - 1 - 3
  CHECK(d.d_plus == 3.0);
}

TEST_CASE("bracketed quotients contain the exact derivatives") {
  Rng rng(6);
  for (const auto& n : random_polygons(10, 3)) {
    const auto& verts = n.polygon()->vertices();
    for (std::size_t i = 0; i < 300; ++i) {
      const Vector x = i < verts.size() ? verts[i] : random_vector(rng, 2);
      const Vector y = random_vector(rng, 2);
      const auto exact = one_sided_derivatives(n, x, y);
      const auto br = bracketed_derivatives(n, x, y);
      CHECK(br.d_minus <= exact.d_minus + 1e-12);
      CHECK(br.d_plus >= exact.d_plus - 1e-12);
      CHECK(std::abs(br.d_minus - exact.d_minus) <= 1e-6);
      CHECK(std::abs(br.d_plus - exact.d_plus) <= 1e-6);
    }
  }
}

TEST_CASE("is_bj_orthogonal reference examples") {
  const auto sq = oracle::square();
  CHECK(is_bj_orthogonal(sq, Vector{1.0, 1.0}, Vector{1.0, -1.0}).orthogonal);
  CHECK(is_bj_orthogonal(sq, Vector{1.0, 1.0}, Vector{-2.0, 0.0}).orthogonal);
  for (double k : {-3.0, -0.5, 0.25, 7.0}) CHECK(is_bj_orthogonal(sq, Vector{1.0, 1.0}, Vector{k, -k}).orthogonal);
  const auto r = is_bj_orthogonal(NormDescriptor::euclidean(2), Vector{1.0, 0.0}, Vector{1.0, 1.0});
  CHECK_FALSE(r.orthogonal);
  CHECK(r.certificate.method == OrthoMethod::closed_form_lp);
  CHECK(r.certificate.tol == 1e-9);
  CHECK(is_bj_orthogonal(sq, Vector{1.0, 0.0}, Vector{0.0, 0.0}).orthogonal);
  CHECK_THROWS_AS(is_bj_orthogonal(sq, Vector{0.0, 0.0}, Vector{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(is_bj_orthogonal(sq, Vector{1.0, 0.0, 0.0}, Vector{1.0, 0.0}), DimensionError);
}

TEST_CASE("certificates are consistent") {
  Rng rng(1);
  for (const auto& n : planar_norms()) {
    for (int i = 0; i < 100; ++i) {
      const auto r = is_bj_orthogonal(n, random_vector(rng, 2), random_vector(rng, 2));
      CHECK(r.certificate.d_minus <= r.certificate.d_plus + r.certificate.tol);
      CHECK(r.orthogonal == r.certificate.asserts_orthogonal());
    }
  }
}

TEST_CASE("orthogonality agrees with the sampled definition") {
  Rng rng(9);
  for (const auto& n : planar_norms()) {
    for (int i = 0; i < 300; ++i) {
      const Vector x = random_vector(rng, 2);
      Vector y = random_vector(rng, 2);
      if (i % 2 == 0) y = orthogonal_companion(n, x, y);
      if (y.is_zero()) continue;
      const auto r = is_bj_orthogonal(n, x, y);
      const double margin = std::min(std::abs(r.certificate.d_minus), std::abs(r.certificate.d_plus));
      if (!r.orthogonal && margin < 1e-5) continue;  // too close to call by sampling
      CHECK(r.orthogonal == oracle::sampled_orthogonal(n, x, y, 1e-12));
    }
  }
}

TEST_CASE("orthogonal_companion produces orthogonal vectors in any dimension") {
  Rng rng(17);
  for (const auto& n : {NormDescriptor::euclidean(4), NormDescriptor::lp(1.0, 3), NormDescriptor::lp(3.0, 3),
                        NormDescriptor::lp(std::numeric_limits<double>::infinity(), 5), oracle::hexagon()}) {
    for (int i = 0; i < 200; ++i) {
      const Vector x = random_vector(rng, n.dim());
      const Vector y = orthogonal_companion(n, x, random_vector(rng, n.dim()));
      if (y.is_zero()) continue;
      CHECK(is_bj_orthogonal(n, x, y).orthogonal);
      CHECK(oracle::sampled_orthogonal(n, x, y, 1e-11));
    }
  }
  CHECK(orthogonal_companion(oracle::square(), Vector{1.0, 0.5}, Vector{2.0, 1.0}).is_zero());
}

TEST_CASE("Euclidean orthogonal cone is a pair of single directions") {
  const auto c = orthogonal_cone(NormDescriptor::euclidean(2), Vector{1.0, 0.0}, 512);
  REQUIRE(c.arcs.size() == 2);
  CHECK(c.arcs[0].contains(kPi / 2));
  CHECK(c.arcs[1].contains(3 * kPi / 2));
  for (const auto& a : c.arcs) CHECK(a.width() <= 1e-8);
}

TEST_CASE("square cone at a vertex") {
  // x = (1, 1) is orthogonal to exactly the directions of the second and
  // fourth quadrants, phi in [pi/2, pi] and [3 pi/2, 2 pi].
  const auto c = orthogonal_cone(oracle::square(), Vector{1.0, 1.0}, 512);
  REQUIRE(c.arcs.size() == 2);
  CHECK(c.arcs[0].lo == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(c.arcs[0].hi == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(c.arcs[1].lo == doctest::Approx(3 * kPi / 2).epsilon(1e-9));
  CHECK(c.arcs[1].hi == doctest::Approx(2 * kPi).epsilon(1e-9));
  CHECK(c.arcs[0].contains(kPi * 3 / 4));
  CHECK_FALSE(c.arcs[0].contains(kPi / 4));
  CHECK_FALSE(is_bj_orthogonal(oracle::square(), Vector{1.0, 1.0}, Vector{-1.0, -1.0}).orthogonal);
}

TEST_CASE("square cone at an edge midpoint") {
  const auto c = orthogonal_cone(oracle::square(), Vector{1.0, 0.0}, 512);
  bool up = false, down = false;
  for (const auto& a : c.arcs) {
    up = up || a.contains(kPi / 2);
    down = down || a.contains(3 * kPi / 2);
  }
  CHECK(up);
  CHECK(down);
}

TEST_CASE("orthogonal cones agree with a dense sampling oracle") {
  Rng rng(12);
  for (const auto& n : planar_norms()) {
    for (int i = 0; i < 6; ++i) {
      const Vector x = i < 2 && n.polygon() ? n.polygon()->vertices()[i] : sphere_point(n, rng.uniform(0, 2 * kPi));
      const auto c = orthogonal_cone(n, x, 256);
      REQUIRE_FALSE(c.arcs.empty());
      for (std::size_t j = 1; j < c.arcs.size(); ++j) CHECK(c.arcs[j].lo > c.arcs[j - 1].hi);
      // every grid direction the oracle accepts lies in (or within 1e-6 of) an arc
      for (double phi : oracle::orthogonal_directions(n, x, 720)) {
        bool near = false;
        for (const auto& a : c.arcs) {
          near = near || a.contains(phi) || a.contains(phi + 1e-6) || a.contains(phi - 1e-6);
        }
        CHECK(near);
      }
      // arc interiors are orthogonal by the definition
      for (const auto& a : c.arcs) {
        for (int s = 0; s < 5; ++s) {
          const double phi = a.lo + a.width() * (s + 0.5) / 5.0;
          const Vector y{std::cos(phi), std::sin(phi)};
          CHECK(is_bj_orthogonal(n, x, y).orthogonal);
          CHECK(oracle::sampled_orthogonal(n, x, y, 1e-8));
        }
      }
    }
  }
}

TEST_CASE("orthogonal_cone preconditions") {
  CHECK_THROWS_AS(orthogonal_cone(NormDescriptor::euclidean(3), Vector{1.0, 0.0, 0.0}, 64), DimensionError);
  CHECK_THROWS_AS(orthogonal_cone(NormDescriptor::euclidean(2), Vector{1.0, 0.0}, 8), DomainError);
}

TEST_CASE("james supporting functional") {
  auto f = james_supporting_functional(NormDescriptor::euclidean(2), Vector{0.6, 0.8});
  CHECK(f[0] == doctest::Approx(0.6));
  CHECK(f[1] == doctest::Approx(0.8));
  f = james_supporting_functional(oracle::square(), Vector{1.0, 1.0});
  CHECK(f == Vector{1.0, 0.0});
  f = james_supporting_functional(oracle::square_polygon(), Vector{1.0, 1.0});
  CHECK(f == Vector{1.0, 0.0});
  f = james_supporting_functional(oracle::diamond(), Vector{1.0, 0.0});
  CHECK(f == Vector{1.0, 0.0});

  Rng rng(2);
  for (const auto& n : planar_norms()) {
    for (int i = 0; i < 50; ++i) {
      const Vector x = sphere_point(n, rng.uniform(0, 2 * kPi));
      const Vector g = james_supporting_functional(n, x);
      CHECK(dot(g, x) == doctest::Approx(1.0).epsilon(1e-9));
      // dual norm 1: sup of g over a dense sample of the unit sphere
      double sup = 0.0;
      for (int k = 0; k < 2000; ++k) sup = std::max(sup, dot(g, sphere_point(n, 2 * kPi * k / 2000.0)));
      CHECK(sup <= 1.0 + 1e-9);
      CHECK(sup >= 1.0 - 1e-3);
    }
  }
}
