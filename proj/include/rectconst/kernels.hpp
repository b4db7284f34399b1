#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rectconst/norm.hpp"

// Batched evaluation of t -> ||base + t * dir|| along a line. This is the
// inner loop of every sweep (a few hundred t values per orthogonal pair), so
// it has a scalar reference implementation and an AVX2 variant chosen at
// runtime. Both variants perform the same IEEE operations in the same order
// and agree bit for bit.
namespace rectconst::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

// Best instruction set supported by both the build and the running CPU.
Isa detected_isa();

// Instruction set used by line evaluations: the override if one is set,
// otherwise RECTCONST_ISA=scalar|avx2 from the environment, otherwise detected_isa().
Isa active_isa();

// Forces a variant (tests, benchmarks). Requesting avx2 on a machine without
// it falls back to scalar. std::nullopt restores the default.
void set_isa_override(std::optional<Isa> isa);

// Raw kernels; out[i] = ||base + ts[i] * dir|| for the given planar norm.
// Exposed for equivalence tests.
namespace scalar {
void euclid_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                 std::size_t n);
void max_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n);
void sum_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n);
// out[i] = max_f (c[f] + ts[i] * d[f])
void facet_line(const double* c, const double* d, std::size_t nf, const double* ts, double* out,
                std::size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
void euclid_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                 std::size_t n);
void max_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n);
void sum_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n);
void facet_line(const double* c, const double* d, std::size_t nf, const double* ts, double* out,
                std::size_t n);
}  // namespace avx2

// t -> ||base + t * dir|| for a fixed line. Two-dimensional norms take the
// kernel path; other dimensions fall back to eval_norm on a scratch buffer
// (so a LineNorm must not be shared between threads).
class LineNorm {
 public:
  LineNorm(const NormDescriptor& norm, const Vector& base, const Vector& dir);

  double operator()(double t) const;
  void eval(std::span<const double> ts, std::span<double> out) const;

 private:
  enum class Path { euclid, max_abs, sum_abs, facets, generic };

  const NormDescriptor* norm_;
  Path path_;
  double b1_ = 0.0, b2_ = 0.0, d1_ = 0.0, d2_ = 0.0;
  std::vector<double> c_, d_;  // facet path: f(base), f(dir)
  Vector base_, dir_;
  mutable Vector scratch_;
};

}  // namespace rectconst::kernels
