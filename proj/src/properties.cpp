#include "rectconst/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "rectconst/error.hpp"
#include "rectconst/orthogonality.hpp"
#include "rectconst/random.hpp"
#include "rectconst/sphere.hpp"

namespace rectconst {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxListed = 3;

class Tally {
 public:
  Tally(std::string name, std::string description) {
    r_.name = std::move(name);
    r_.description = std::move(description);
  }

  void check(bool ok, const std::string& context) {
    ++r_.trials;
    if (ok) return;
    ++r_.violations;
    if (r_.violations <= kMaxListed) failures_.push_back(context);
  }

  void set_summary(std::string s) { summary_ = std::move(s); }

  PropertyResult finish() {
    PropertyResult r = r_;
    if (r.trials == 0) {
      r.status = PropertyStatus::skipped;
      r.detail = "not applicable to the given norms";
      return r;
    }
    r.status = r.violations == 0 ? PropertyStatus::passed : PropertyStatus::failed;
    if (r.violations == 0) {
      r.detail = summary_.empty() ? "no violations" : summary_;
    } else {
      std::ostringstream os;
      os << r.violations << " violation(s)";
      for (const auto& f : failures_) os << "; " << f;
      r.detail = os.str();
    }
    return r;
  }

 private:
  PropertyResult r_;
  std::vector<std::string> failures_;
  std::string summary_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string where(const NormDescriptor& norm, std::size_t i) {
  return norm.describe() + " trial " + std::to_string(i);
}

bool planar(const NormDescriptor& norm) { return norm.dim() == 2; }

Vector random_sphere_point(const NormDescriptor& norm, Rng& rng) {
  if (planar(norm)) return sphere_point(norm, rng.uniform(0.0, 2.0 * kPi));
  return normalize(norm, random_vector(rng, norm.dim()));
}

// Unit x and unit y with x _|_B y by construction.
std::pair<Vector, Vector> random_orthogonal_pair(const NormDescriptor& norm, Rng& rng) {
  for (;;) {
    const Vector x = random_sphere_point(norm, rng);
    const Vector y = orthogonal_companion(norm, x, random_vector(rng, norm.dim()));
    if (y.max_abs() > 1e-6) return {x, normalize(norm, y)};
  }
}

double random_nonzero(Rng& rng, double lo, double hi) {
  const double m = std::pow(10.0, rng.uniform(lo, hi));
  return rng.uniform() < 0.5 ? -m : m;
}

// Per-norm results of the expensive computations, shared by several properties.
struct Computed {
  MuWitness mu;
  bool mu_exact = false;
  std::vector<ModulusPoint> moduli;  // lambda = 0.5, 1, 2
  std::vector<StarModulus> stars;
  std::optional<SegmentReport> segment;
};

constexpr double kLambdas[] = {0.5, 1.0, 2.0};

}  // namespace

const char* status_name(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::passed: return "passed";
    case PropertyStatus::failed: return "failed";
    case PropertyStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool all_passed(std::span<const PropertyResult> results) {
  return std::none_of(results.begin(), results.end(),
                      [](const PropertyResult& r) { return r.status == PropertyStatus::failed; });
}

std::vector<PropertyResult> run_verification(std::span<const NormDescriptor> norms,
                                             const VerifyOptions& options) {
  options.config.validate();
  const std::size_t trials = options.trials;

  Tally axioms("norm-axioms", "homogeneity, triangle inequality, symmetry and definiteness on random vectors");
  Tally normalize_p("normalize", "normalize(v) has norm 1 within 1e-12");
  Tally facets("facet-representation", "polyhedral norm equals the max of its facet functionals; l_1 / l_inf agree with their polygons");
  Tally homogeneity("orthogonality-homogeneity", "x _|_B y iff (a x) _|_B (b y) for nonzero a, b");
  Tally euclid("euclidean-orthogonality", "Euclidean x _|_B y iff |<x, y>| <= 1e-9 ||x|| ||y||");
  Tally minimality("orthogonality-minimality", "x _|_B y implies ||x + l y|| >= ||x|| - 1e-8 for sampled l");
  Tally monotone("orthogonal-line-monotonicity", "x _|_B y: ||x + l1 y|| >= ||x + l2 y|| - 1e-9 for l1 > l2 > 0 and l1 < l2 < 0");
  Tally bracket("derivative-bracket", "exact polyhedral derivatives lie in the difference-quotient bracket and agree within 1e-6");
  Tally cone("orthogonal-cone", "directions sampled inside orthogonal-cone arcs are orthogonal");
  Tally inherit("edge-inheritance", "x inside an edge [x1, x2] and x _|_B y imply x1 _|_B y and x2 _|_B y");
  Tally segment_lemma("segment-orthogonality", "every sphere edge [u, v] has u _|_B (v - u) and v _|_B (u - v)");
  Tally supform("sup-form", "mu(t x, y) = (1 + |t|) / ||y + t x|| within 1e-12 on orthogonal pairs");
  Tally truncation("t-truncation", "(1 + |t|) / ||y + t x|| < max(2, mu) for |t| in {6.5, 10, 100}");
  Tally witness("witness-consistency", "reported witnesses re-evaluate to their value within 1e-12 and are orthogonal");
  Tally mu_bounds("mu-bounds", "sqrt 2 - 1e-9 <= mu <= 3 + 1e-9");
  Tally sandwich("modulus-sandwich", "sqrt(1 + l^2) - 1e-6 <= mu(l) <= max(l + 2, 1 + 2 l) + 1e-6 and the max identity for l in {0.5, 1, 2}");
  Tally oracle("oracle-equivalence", "exact polyhedral mu and sweep estimate agree within 2e-3, sweep never above");
  Tally seg_crit("segment-criterion", "|mu - 3| <= 1e-6 iff the longest sphere segment has length 2 (within 1e-6)");
  Tally mod_crit("modulus-criterion", "|mu*(l) - (l + 2)| <= 1e-6 iff the longest sphere segment has length 2, l in {0.5, 1, 2}");
  Tally ips("ips-consistency", "window test passes on Euclidean norms and fails whenever mu > sqrt 2 + 0.01");
  Tally flat("flatness-growth", "no sample with ||x + l y|| <= 1 when every segment is shorter than l");
  Tally window("window-constants", "3 - 2 sqrt 2 = (sqrt 2 - 1)^2 and (sqrt 2 + 1)(sqrt 2 - 1) = 1");

  std::size_t seg_consistent = 0;
  std::size_t ips_pass = 0, ips_fail = 0;

  for (std::size_t ni = 0; ni < norms.size(); ++ni) {
    const NormDescriptor& norm = norms[ni];
    const std::uint64_t seed = options.seed + 0x1000 * ni;
    const auto poly = planar(norm) ? polyhedral_equivalent(norm) : std::nullopt;

    // norm-core
    const ValidationReport vr = validate_norm(norm, trials, seed);
    for (const auto& v : vr.violations) axioms.check(false, norm.describe() + " " + v);
    for (std::size_t i = vr.violations.size(); i < vr.samples; ++i) axioms.check(true, "");
    {
      Rng rng(seed + 1);
      for (std::size_t i = 0; i < trials; ++i) {
        const Vector v = random_vector(rng, norm.dim()) * std::pow(10.0, rng.uniform(-3.0, 3.0));
        normalize_p.check(std::abs(eval_norm(norm, normalize(norm, v)) - 1.0) <= 1e-12, where(norm, i));
      }
    }
    if (poly) {
      Rng rng(seed + 2);
      const auto& fs = poly->polygon()->facets();
      for (std::size_t i = 0; i < trials; ++i) {
        const Vector z = random_vector(rng, 2);
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& f : fs) m = std::max(m, f(z));
        const double n1 = eval_norm(norm, z), n2 = eval_norm(*poly, z);
        facets.check(std::abs(m - n2) <= 1e-12 * n2 && std::abs(n1 - n2) <= 1e-12 * n2, where(norm, i));
      }
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const Edge& e = poly->polygon()->edges()[k];
        facets.check(std::abs(fs[k](e.from) - 1.0) <= 1e-12 && std::abs(fs[k](e.to) - 1.0) <= 1e-12,
                     norm.describe() + " facet " + std::to_string(k));
      }
    }

    // bj-orthogonality
    {
      Rng rng(seed + 3);
      for (std::size_t i = 0; i < trials; ++i) {
        const auto [x, y] = random_orthogonal_pair(norm, rng);
        const double a = random_nonzero(rng, -2.0, 2.0), b = random_nonzero(rng, -2.0, 2.0);
        const bool base = is_bj_orthogonal(norm, x, y).orthogonal;
        homogeneity.check(base && is_bj_orthogonal(norm, x * a, y * b).orthogonal == base,
                          where(norm, i) + " a=" + fmt(a) + " b=" + fmt(b));
        const double nx = eval_norm(norm, x);
        bool minimal = true;
        for (double l : {1e-3, -1e-3, 0.1, -0.1, 1.0, -1.0, 10.0, -10.0}) {
          minimal = minimal && eval_norm(norm, x + y * l) >= nx - 1e-8;
        }
        minimality.check(minimal, where(norm, i));
        double l1 = rng.uniform(0.0, 10.0), l2 = rng.uniform(0.0, 10.0);
        if (l1 < l2) std::swap(l1, l2);
        monotone.check(eval_norm(norm, x + y * l1) >= eval_norm(norm, x + y * l2) - 1e-9 &&
                           eval_norm(norm, x - y * l1) >= eval_norm(norm, x - y * l2) - 1e-9,
                       where(norm, i));
      }
    }
    if (norm.is_euclidean()) {
      Rng rng(seed + 4);
      for (std::size_t i = 0; i < trials; ++i) {
        const Vector x = random_vector(rng, norm.dim());
        Vector y = random_vector(rng, norm.dim());
        // Half of the pairs exactly or nearly orthogonal, to exercise the boundary.
        if (i % 2 == 0) {
          y = y - x * (dot(x, y) / dot(x, x));
          if (i % 4 == 0) y = y + x * rng.uniform(-1e-6, 1e-6);
        }
        const double ip = std::abs(dot(x, y));
        const double scale = eval_norm(norm, x) * eval_norm(norm, y);
        // Pairs within rounding of the tolerance boundary are not decidable.
        if (std::abs(ip - 1e-9 * scale) <= 1e-15 * scale) continue;
        euclid.check(is_bj_orthogonal(norm, x, y).orthogonal == (ip <= 1e-9 * scale), where(norm, i));
      }
    }
    if (poly) {
      Rng rng(seed + 5);
      const auto& verts = poly->polygon()->vertices();
      for (std::size_t i = 0; i < trials; ++i) {
        const Vector x = i < verts.size() ? verts[i] : random_sphere_point(norm, rng);
        const Vector y = random_vector(rng, 2);
        const DerivativeBracket exact = DirectionalDerivatives(*poly, x)(y);
        const DerivativeBracket ladder = bracketed_derivatives(*poly, x, y);
        const bool inside = ladder.d_minus <= exact.d_minus + 1e-12 && exact.d_plus <= ladder.d_plus + 1e-12;
        const bool close = std::abs(ladder.d_minus - exact.d_minus) <= 1e-6 &&
                           std::abs(ladder.d_plus - exact.d_plus) <= 1e-6;
        bracket.check(inside && close, where(norm, i));
      }
    }
    if (planar(norm)) {
      Rng rng(seed + 6);
      const std::size_t bases = std::max<std::size_t>(1, trials / 20);
      for (std::size_t i = 0; i < bases; ++i) {
        const Vector x = random_sphere_point(norm, rng);
        const OrthoCone c = orthogonal_cone(norm, x, 256);
        for (const Arc& arc : c.arcs) {
          for (int j = 0; j < 5; ++j) {
            const double phi = arc.is_single() ? arc.lo : rng.uniform(arc.lo, arc.hi);
            cone.check(is_bj_orthogonal(norm, x, sphere_point(norm, phi)).orthogonal,
                       where(norm, i) + " phi=" + fmt(phi));
          }
        }
      }
    }
    if (poly) {
      Rng rng(seed + 7);
      const auto& edges = poly->polygon()->edges();
      for (std::size_t i = 0; i < trials; ++i) {
        const Edge& e = edges[rng.index(edges.size())];
        const double s = rng.uniform(0.05, 0.95);
        const Vector x = e.from * s + e.to * (1.0 - s);
        const Vector y = i % 2 == 0 ? (e.to - e.from) * random_nonzero(rng, -1.0, 1.0) : random_vector(rng, 2);
        if (!is_bj_orthogonal(*poly, x, y).orthogonal) {
          inherit.check(true, "");
          continue;
        }
        inherit.check(is_bj_orthogonal(*poly, e.from, y).orthogonal && is_bj_orthogonal(*poly, e.to, y).orthogonal,
                      where(norm, i));
      }
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        bool ok = false;
        try {
          ok = segment_orthogonality_check(norm, e.from, e.to).orthogonal &&
               segment_orthogonality_check(norm, e.to, e.from).orthogonal;
        } catch (const PreconditionError&) {
          ok = false;
        }
        segment_lemma.check(ok, norm.describe() + " edge " + std::to_string(k));
      }
    }

    // rect-constants
    Computed c;
    c.mu_exact = poly.has_value();
    c.mu = rectangular_constant(norm, options.config);
    for (double l : kLambdas) {
      c.moduli.push_back(modulus(norm, l, options.config));
      c.stars.push_back(modulus_star(norm, l, options.config));
    }
    {
      Rng rng(seed + 8);
      const std::size_t n = std::min<std::size_t>(trials, 200);
      for (std::size_t i = 0; i < n; ++i) {
        const auto [x, y] = random_orthogonal_pair(norm, rng);
        const double t = random_nonzero(rng, -2.0, 1.0);
        const double a = mu_pair(norm, x * t, y), b = mu_ratio(norm, x, y, t);
        supform.check(std::abs(a - b) <= 1e-12, where(norm, i) + " t=" + fmt(t));
        bool below = true;
        for (double tt : {6.5, 10.0, 100.0}) {
          below = below && mu_ratio(norm, x, y, tt) < std::max(2.0, c.mu.value) &&
                  mu_ratio(norm, x, y, -tt) < std::max(2.0, c.mu.value);
        }
        truncation.check(below, where(norm, i));
      }
    }
    {
      auto witness_ok = [&](const MuWitness& w, double value) {
        return std::abs(w.value - value) <= 1e-12 && is_bj_orthogonal(norm, w.x, w.y).orthogonal &&
               std::abs(eval_norm(norm, w.x) - 1.0) <= 1e-12 && std::abs(eval_norm(norm, w.y) - 1.0) <= 1e-12;
      };
      witness.check(witness_ok(c.mu, mu_ratio(norm, c.mu.x, c.mu.y, c.mu.t)), norm.describe() + " mu");
      for (const auto& p : c.moduli) {
        witness.check(witness_ok(p.witness, modulus_witness_value(norm, p)) &&
                          std::abs(p.witness.value - p.value) <= 1e-12,
                      norm.describe() + " modulus lambda=" + fmt(p.lambda));
      }
      for (const auto& s : c.stars) {
        witness.check(witness_ok(s.witness, star_ratio(norm, s.witness.x, s.witness.y, s.witness.t, s.lambda)),
                      norm.describe() + " mu* lambda=" + fmt(s.lambda));
      }
    }
    mu_bounds.check(c.mu.value >= kSqrt2 - 1e-9 && c.mu.value <= 3.0 + 1e-9,
                    norm.describe() + " mu=" + fmt(c.mu.value));
    for (const auto& p : c.moduli) {
      const double l = p.lambda;
      const bool bounds = p.value >= std::sqrt(1.0 + l * l) - 1e-6 && p.value <= std::max(l + 2.0, 1.0 + 2.0 * l) + 1e-6;
      const bool identity = std::abs(p.value - std::max(p.star_value, p.reciprocal_value)) <= 1e-9;
      sandwich.check(bounds && identity, norm.describe() + " lambda=" + fmt(l) + " value=" + fmt(p.value));
    }
    if (poly) {
      const MuWitness est = mu_estimate(norm, options.config);
      const double gap = c.mu.value - est.value;
      oracle.check(gap >= -1e-9 && gap <= 2e-3,
                   norm.describe() + " exact=" + fmt(c.mu.value) + " sweep=" + fmt(est.value));
    }

    // sphere-geometry
    if (planar(norm)) {
      const SegmentReport seg = max_segment_length(norm);
      const bool long_seg = std::abs(seg.length - 2.0) <= 1e-6;
      const bool mu3 = std::abs(c.mu.value - 3.0) <= 1e-6;
      seg_crit.check(mu3 == long_seg, norm.describe() + " mu=" + fmt(c.mu.value) + " segment=" + fmt(seg.length));
      if (mu3 == long_seg) ++seg_consistent;
      for (const auto& s : c.stars) {
        const bool top = std::abs(s.value - (s.lambda + 2.0)) <= 1e-6;
        mod_crit.check(top == long_seg, norm.describe() + " lambda=" + fmt(s.lambda) + " mu*=" + fmt(s.value));
      }

      const bool euclidean = norm.is_euclidean();
      if (euclidean || c.mu.value > kSqrt2 + 0.01) {
        const IpsReport r = ips_test(norm, options.config);
        const bool ok = euclidean ? r.passed : !r.passed;
        ips.check(ok, norm.describe() + " sup=" + fmt(r.sup_found));
        (r.passed ? ips_pass : ips_fail) += 1;
      }

      const std::size_t n = std::min<std::size_t>(trials, 200);
      for (double l : {seg.length + 0.01, std::max(seg.length, 0.01)}) {
        const FlatnessReport fr = flatness_growth_check(norm, l, n, seed + 9);
        flat.check(!fr.growth_violation, norm.describe() + " l=" + fmt(l) + " min=" + fmt(fr.min_growth));
      }
    }
  }

  {
    const double s = kSqrt2;
    const double lo = 3.0 - 2.0 * s, hi = s + 1.0;
    const double eps = 4.0 * std::numeric_limits<double>::epsilon();
    window.check(std::abs(lo - (s - 1.0) * (s - 1.0)) <= eps && std::abs(hi * (s - 1.0) - 1.0) <= eps,
                 "window constants");
    const IpsWindow w = ips_window();
    window.check(std::abs(w.lo - lo - 1e-9) <= eps && std::abs(hi - w.hi - 1e-9) <= eps, "shrunk window");
  }

  seg_crit.set_summary("μ=3 ⟺ segment length 2: consistent (" + std::to_string(seg_consistent) + " norm(s))");
  if (ips_fail == 0 && ips_pass > 0) {
    ips.set_summary("passed");
  } else {
    std::ostringstream os;
    os << "passed on " << ips_pass << " Euclidean norm(s), failed as expected on " << ips_fail << " other norm(s)";
    ips.set_summary(os.str());
  }

  std::vector<PropertyResult> out;
  for (Tally* t : {&axioms, &normalize_p, &facets, &homogeneity, &euclid, &minimality, &monotone, &bracket, &cone,
                   &inherit, &segment_lemma, &supform, &truncation, &witness, &mu_bounds, &sandwich, &oracle,
                   &seg_crit, &mod_crit, &ips, &flat, &window}) {
    out.push_back(t->finish());
  }
  return out;
}

}  // namespace rectconst
