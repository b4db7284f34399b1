// Compiled with -mavx2 (no FMA, so rounding matches the scalar kernels).
// Only raw pointers cross this translation unit's boundary: no inline
// library templates get instantiated with AVX2 code.
#include <immintrin.h>

#include "rectconst/kernels.hpp"

namespace rectconst::kernels::avx2 {
namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// Scalar tail with the same operation order as the vector body.
inline double max_sd(double a, double b) { return b > a ? b : a; }

}  // namespace

void euclid_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                 std::size_t n) {
  const __m256d vb1 = _mm256_set1_pd(b1), vb2 = _mm256_set1_pd(b2);
  const __m256d vd1 = _mm256_set1_pd(d1), vd2 = _mm256_set1_pd(d2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    const __m256d z1 = _mm256_add_pd(vb1, _mm256_mul_pd(t, vd1));
    const __m256d z2 = _mm256_add_pd(vb2, _mm256_mul_pd(t, vd2));
    const __m256d s = _mm256_add_pd(_mm256_mul_pd(z1, z1), _mm256_mul_pd(z2, z2));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  if (i < n) scalar::euclid_line(b1, b2, d1, d2, ts + i, out + i, n - i);
}

void max_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n) {
  const __m256d vb1 = _mm256_set1_pd(b1), vb2 = _mm256_set1_pd(b2);
  const __m256d vd1 = _mm256_set1_pd(d1), vd2 = _mm256_set1_pd(d2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    const __m256d z1 = abs_pd(_mm256_add_pd(vb1, _mm256_mul_pd(t, vd1)));
    const __m256d z2 = abs_pd(_mm256_add_pd(vb2, _mm256_mul_pd(t, vd2)));
    _mm256_storeu_pd(out + i, _mm256_max_pd(z2, z1));
  }
  if (i < n) scalar::max_abs_line(b1, b2, d1, d2, ts + i, out + i, n - i);
}

void sum_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n) {
  const __m256d vb1 = _mm256_set1_pd(b1), vb2 = _mm256_set1_pd(b2);
  const __m256d vd1 = _mm256_set1_pd(d1), vd2 = _mm256_set1_pd(d2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    const __m256d z1 = abs_pd(_mm256_add_pd(vb1, _mm256_mul_pd(t, vd1)));
    const __m256d z2 = abs_pd(_mm256_add_pd(vb2, _mm256_mul_pd(t, vd2)));
    _mm256_storeu_pd(out + i, _mm256_add_pd(z1, z2));
  }
  if (i < n) scalar::sum_abs_line(b1, b2, d1, d2, ts + i, out + i, n - i);
}

void facet_line(const double* c, const double* d, std::size_t nf, const double* ts, double* out,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    __m256d m = _mm256_add_pd(_mm256_set1_pd(c[0]), _mm256_mul_pd(t, _mm256_set1_pd(d[0])));
    for (std::size_t f = 1; f < nf; ++f) {
      const __m256d v =
          _mm256_add_pd(_mm256_set1_pd(c[f]), _mm256_mul_pd(t, _mm256_set1_pd(d[f])));
      // _mm256_max_pd(a, b) returns b unless a > b: same selection as the scalar loop.
      m = _mm256_max_pd(v, m);
    }
    _mm256_storeu_pd(out + i, m);
  }
  for (; i < n; ++i) {
    const double t = ts[i];
    double m = c[0] + t * d[0];
    for (std::size_t f = 1; f < nf; ++f) m = max_sd(m, c[f] + t * d[f]);
    out[i] = m;
  }
}

}  // namespace rectconst::kernels::avx2
