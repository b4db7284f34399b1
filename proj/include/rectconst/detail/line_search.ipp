#pragma once

#include <cmath>
#include <vector>

#include "rectconst/error.hpp"

namespace rectconst {
namespace detail {

template <class Line>
void maximize_segment(const Line& line, double weight, double a, double b, std::size_t grid,
                      double refine_tol, LineMax& best) {
  auto ratio = [&](double t) {
    const double d = line(t);
    if (!(d > 0.0)) throw DomainError("||base + t dir|| vanished on the search line");
    return (weight + std::abs(t)) / d;
  };
  auto offer = [&](double t, double v) {
    if (v > best.value) best = LineMax{t, v};
  };
  if (!(b > a)) {
    offer(a, ratio(a));
    return;
  }

  std::vector<double> ts(grid), norms(grid);
  const double step = (b - a) / double(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) ts[i] = a + step * double(i);
  ts[grid - 1] = b;
  line.eval(ts, norms);
  std::size_t arg = 0;
  double top = -1.0;
  for (std::size_t i = 0; i < grid; ++i) {
    if (!(norms[i] > 0.0)) throw DomainError("||base + t dir|| vanished on the search line");
    const double v = (weight + std::abs(ts[i])) / norms[i];
    if (v > top) {
      top = v;
      arg = i;
    }
  }
  offer(ts[arg], top);

  double lo = ts[arg == 0 ? 0 : arg - 1];
  double hi = ts[arg + 1 >= grid ? grid - 1 : arg + 1];
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = ratio(c), fd = ratio(d);
  offer(c, fc);
  offer(d, fd);
  while (hi - lo > refine_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = ratio(c);
      offer(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = ratio(d);
      offer(d, fd);
    }
  }
}

}  // namespace detail

template <class Line>
LineMax maximize_on_line(const Line& line, double weight, double t_lo, double t_hi,
                         std::size_t grid, double refine_tol) {
  if (grid < 2) throw DomainError("line search grid needs at least two points");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
  if (t_hi < t_lo) throw DomainError("empty search interval");
  LineMax best{t_lo, -1.0};
  if (t_lo < 0.0 && t_hi > 0.0) {
    detail::maximize_segment(line, weight, t_lo, 0.0, grid, refine_tol, best);
    detail::maximize_segment(line, weight, 0.0, t_hi, grid, refine_tol, best);
  } else {
    detail::maximize_segment(line, weight, t_lo, t_hi, grid, refine_tol, best);
  }
  return best;
}

}  // namespace rectconst
