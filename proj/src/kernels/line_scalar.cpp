#include <cmath>

#include "rectconst/kernels.hpp"

namespace rectconst::kernels::scalar {

void euclid_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double z1 = b1 + ts[i] * d1;
    const double z2 = b2 + ts[i] * d2;
    out[i] = std::sqrt(z1 * z1 + z2 * z2);
  }
}

void max_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double z1 = std::abs(b1 + ts[i] * d1);
    const double z2 = std::abs(b2 + ts[i] * d2);
    out[i] = z1 > z2 ? z1 : z2;
  }
}

void sum_abs_line(double b1, double b2, double d1, double d2, const double* ts, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::abs(b1 + ts[i] * d1) + std::abs(b2 + ts[i] * d2);
  }
}

void facet_line(const double* c, const double* d, std::size_t nf, const double* ts, double* out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = ts[i];
    double m = c[0] + t * d[0];
    for (std::size_t f = 1; f < nf; ++f) {
      const double v = c[f] + t * d[f];
      m = v > m ? v : m;
    }
    out[i] = m;
  }
}

}  // namespace rectconst::kernels::scalar
