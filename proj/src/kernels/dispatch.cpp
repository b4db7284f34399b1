#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rectconst/error.hpp"
#include "rectconst/kernels.hpp"

namespace rectconst::kernels {
namespace {

// -1: no override; otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

Isa env_or_detected() {
  static const Isa isa = [] {
    const char* env = std::getenv("RECTCONST_ISA");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return detected_isa();
  }();
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2::available() {
#if defined(RECTCONST_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa detected_isa() { return avx2::available() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  return env_or_detected();
}

void set_isa_override(std::optional<Isa> isa) {
  if (!isa) {
    g_override.store(-1);
    return;
  }
  const Isa chosen = (*isa == Isa::avx2 && !avx2::available()) ? Isa::scalar : *isa;
  g_override.store(static_cast<int>(chosen));
}

LineNorm::LineNorm(const NormDescriptor& norm, const Vector& base, const Vector& dir)
    : norm_(&norm), path_(Path::generic) {
  if (base.dim() != norm.dim() || dir.dim() != norm.dim()) {
    throw DimensionError("line endpoints do not match the norm dimension");
  }
  if (norm.dim() == 2) {
    b1_ = base[0];
    b2_ = base[1];
    d1_ = dir[0];
    d2_ = dir[1];
    if (const PolygonNorm* poly = norm.polygon()) {
      path_ = Path::facets;
      c_.reserve(poly->facets().size());
      d_.reserve(poly->facets().size());
      for (const auto& f : poly->facets()) {
        c_.push_back(f(b1_, b2_));
        d_.push_back(f(d1_, d2_));
      }
      return;
    }
    const LpNorm* lp = norm.lp_norm();
    if (norm.is_euclidean()) {
      path_ = Path::euclid;
      return;
    }
    if (lp != nullptr && lp->is_max()) {
      path_ = Path::max_abs;
      return;
    }
    if (lp != nullptr && lp->is_sum()) {
      path_ = Path::sum_abs;
      return;
    }
  }
  base_ = base;
  dir_ = dir;
  scratch_ = Vector(norm.dim());
}

double LineNorm::operator()(double t) const {
  double out = 0.0;
  switch (path_) {
    case Path::euclid: scalar::euclid_line(b1_, b2_, d1_, d2_, &t, &out, 1); return out;
    case Path::max_abs: scalar::max_abs_line(b1_, b2_, d1_, d2_, &t, &out, 1); return out;
    case Path::sum_abs: scalar::sum_abs_line(b1_, b2_, d1_, d2_, &t, &out, 1); return out;
    case Path::facets: scalar::facet_line(c_.data(), d_.data(), c_.size(), &t, &out, 1); return out;
    case Path::generic: break;
  }
  for (std::size_t i = 0; i < scratch_.dim(); ++i) scratch_[i] = base_[i] + t * dir_[i];
  return eval_norm(*norm_, scratch_);
}

void LineNorm::eval(std::span<const double> ts, std::span<double> out) const {
  if (out.size() < ts.size()) throw DimensionError("output span too short");
  const std::size_t n = ts.size();
#if defined(RECTCONST_HAVE_AVX2)
  if (path_ != Path::generic && active_isa() == Isa::avx2) {
    switch (path_) {
      case Path::euclid: avx2::euclid_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
      case Path::max_abs: avx2::max_abs_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
      case Path::sum_abs: avx2::sum_abs_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
      case Path::facets:
        avx2::facet_line(c_.data(), d_.data(), c_.size(), ts.data(), out.data(), n);
        return;
      case Path::generic: break;
    }
  }
#endif
  switch (path_) {
    case Path::euclid: scalar::euclid_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
    case Path::max_abs: scalar::max_abs_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
    case Path::sum_abs: scalar::sum_abs_line(b1_, b2_, d1_, d2_, ts.data(), out.data(), n); return;
    case Path::facets:
      scalar::facet_line(c_.data(), d_.data(), c_.size(), ts.data(), out.data(), n);
      return;
    case Path::generic: break;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(ts[i]);
}

}  // namespace rectconst::kernels
