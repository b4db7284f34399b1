// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rectconst/kernels.hpp"
#include "rectconst/properties.hpp"
#include "rectconst/random.hpp"
#include "rectconst/rectangular.hpp"
#include "rectconst/sphere.hpp"

using namespace rectconst;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kPolygonSeed = 7;
const std::vector<double> kLambdas{0.5, 1.0, 2.0};

int g_failed = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] %2d  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

NormDescriptor hexagon() {
  std::vector<Vector> v;
  for (int k = 0; k < 3; ++k) v.push_back(Vector{std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3)});
  return NormDescriptor::polyhedral(v);
}

}  // namespace

int main() {
  const SearchConfig def;
  const auto euclid = NormDescriptor::euclidean(2);
  const auto square = NormDescriptor::lp(kInf, 2);
  const auto diamond = NormDescriptor::lp(1.0, 2);
  const auto hex = hexagon();
  const auto polygons = random_polygons(20, kPolygonSeed);
  std::printf("isa: %s\n", kernels::isa_name(kernels::active_isa()));

  {  // 1
    const auto t0 = std::chrono::steady_clock::now();
    const auto w = mu_estimate(euclid, def);
    const double s = seconds_since(t0);
    report(1, std::abs(w.value - kSqrt2) <= 1e-3 && s < 30.0,
           fmt("mu(l2) = %.12f (|err| %.2e), %.2f s", w.value, std::abs(w.value - kSqrt2), s));
  }
  {  // 2
    const auto exact = mu_polyhedral_exact(square, def);
    const auto sweep = mu_estimate(square, def);
    const auto l1 = mu_estimate(diamond, def);
    const bool ok = std::abs(exact.value - 3.0) <= 1e-9 && std::abs(sweep.value - 3.0) <= 1e-3 &&
                    std::abs(l1.value - 3.0) <= 1e-3;
    report(2, ok, fmt("mu(l_inf) exact %.15f, sweep %.9f; mu(l1) sweep %.9f", exact.value, sweep.value, l1.value));
  }
  {  // 3
    bool ok = true;
    double worst = 0.0;
    for (double lambda : kLambdas) {
      const auto star = modulus_star(square, lambda, def);
      const auto full = modulus(square, lambda, def);
      const double e1 = std::abs(star.value - (lambda + 2.0));
      const double e2 = std::abs(full.value - std::max(2.0 + lambda, 1.0 + 2.0 * lambda));
      worst = std::max({worst, e1, e2});
      ok = ok && e1 <= 1e-6 && e2 <= 1e-6;
    }
    report(3, ok, fmt("l_inf star modulus = lambda+2 and modulus = max{2+lambda,1+2lambda}, worst |err| %.2e", worst));
  }
  {  // 4
    bool ok = true;
    double worst = 0.0;
    for (double lambda : kLambdas) {
      const double err = std::abs(modulus(euclid, lambda, def).value - std::sqrt(1.0 + lambda * lambda));
      worst = std::max(worst, err);
      ok = ok && err <= 1e-3;
    }
    report(4, ok, fmt("l2 modulus = sqrt(1+lambda^2), worst |err| %.2e", worst));
  }
  std::vector<double> exact_mu;
  {  // 5
    bool ok = true;
    double lo = 3.0, hi = 0.0;
    for (const auto& n : polygons) {
      const double mu = mu_polyhedral_exact(n, def).value;
      exact_mu.push_back(mu);
      lo = std::min(lo, mu);
      hi = std::max(hi, mu);
      ok = ok && mu >= kSqrt2 - 1e-9 && mu <= 3.0 + 1e-9;
      for (double lambda : kLambdas) {
        const double v = modulus(n, lambda, def).value;
        ok = ok && v >= std::sqrt(1.0 + lambda * lambda) - 1e-6 &&
             v <= std::max(lambda + 2.0, 1.0 + 2.0 * lambda) + 1e-6;
      }
    }
    report(5, ok, fmt("20 polygons: mu in [%.6f, %.6f], modulus sandwiches hold", lo, hi));
  }
  {  // 6
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
      const double gap = std::abs(exact_mu[i] - mu_estimate(polygons[i], def).value);
      worst = std::max(worst, gap);
      ok = ok && gap <= 2e-3;
    }
    report(6, ok, fmt("exact vs sweep on 20 polygons, worst gap %.2e", worst));
  }
  {  // 7
    std::vector<NormDescriptor> norms = polygons;
    norms.push_back(square);
    norms.push_back(diamond);
    norms.push_back(hex);
    int consistent = 0, with_segment = 0;
    for (const auto& n : norms) {
      const bool three = std::abs(mu_polyhedral_exact(n, def).value - 3.0) <= 1e-6;
      const bool two = std::abs(max_segment_length(n).length - 2.0) <= 1e-6;
      consistent += three == two;
      with_segment += two;
    }
    report(7, consistent == int(norms.size()),
           fmt("mu = 3 iff segment of length 2: %.0f/%.0f consistent (%.0f with a length-2 segment)", consistent,
               double(norms.size()), with_segment));
  }
  {  // 8
    std::vector<NormDescriptor> norms{euclid, square, diamond, hex, NormDescriptor::lp(3.0, 2)};
    for (std::size_t i = 0; i < 5; ++i) norms.push_back(polygons[i]);
    VerifyOptions opt;
    opt.trials = 1000;
    opt.seed = kPolygonSeed;
    opt.config.theta_resolution = 512;
    opt.config.phi_resolution = 128;
    const auto results = run_verification(norms, opt);
    const std::vector<std::string> required{"orthogonality-homogeneity", "euclidean-orthogonality",
                                            "orthogonal-line-monotonicity", "segment-orthogonality",
                                            "edge-inheritance", "derivative-bracket"};
    bool ok = true;
    std::size_t seen = 0, violations = 0;
    for (const auto& r : results) {
      for (const auto& name : required) {
        if (r.name != name) continue;
        ++seen;
        violations += r.violations;
        // segment-orthogonality is exhaustive over all edges instead of sampled
        const std::size_t need = name == "segment-orthogonality" ? 1 : 1000;
        ok = ok && r.status == PropertyStatus::passed && r.trials >= need;
        std::printf("      %-30s %-7s %6zu trials  %s\n", r.name.c_str(), status_name(r.status), r.trials,
                    r.detail.c_str());
      }
    }
    ok = ok && seen == required.size() && violations == 0;
    report(8, ok, fmt("property suites: %.0f/%.0f passed, %.0f violations", double(seen), double(required.size()),
                      double(violations)));
  }
  {  // 9
    const auto e = ips_test(euclid, def);
    bool ok = e.passed && e.sup_found <= kSqrt2 + 1e-6;
    double linf = 0.0, lowest = kInf;
    for (const auto* n : {&square, &diamond, &hex}) {
      const auto r = ips_test(*n, def);
      const double v = r.witness ? r.witness->value : 0.0;
      ok = ok && !r.passed && v >= kSqrt2 + 0.01;
      lowest = std::min(lowest, v);
      if (n == &square) linf = v;
    }
    ok = ok && linf >= 2.0 - 1e-6;
    report(9, ok, fmt("ips: l2 sup %.9f passes; l_inf witness %.6f; lowest failing witness %.6f", e.sup_found, linf,
                      lowest));
  }
  {  // 10
    const auto sq = flatness_growth_check(square, 2.5, 1000, kPolygonSeed);
    const auto hx = flatness_growth_check(hex, 1.01, 1000, kPolygonSeed);
    bool ok = sq.hypothesis_a && sq.conclusion_b && hx.hypothesis_a && hx.conclusion_b;
    std::size_t violations = 0;
    for (const auto& n : polygons) {
      const double seg = max_segment_length(n).length;
      for (double l : {seg + 1e-3, 0.5 * (seg + 2.0), 2.0, 2.5}) {
        violations += flatness_growth_check(n, l, 500, kPolygonSeed).growth_violation;
      }
    }
    ok = ok && violations == 0;
    report(10, ok, fmt("flatness: square l=2.5 A&B=%.0f, hexagon l=1.01 A&B=%.0f, growth violations %.0f",
                       sq.hypothesis_a && sq.conclusion_b, hx.hypothesis_a && hx.conclusion_b, double(violations)));
  }

  std::printf("%s: %d criteria failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
  return g_failed == 0 ? 0 : 1;
}
