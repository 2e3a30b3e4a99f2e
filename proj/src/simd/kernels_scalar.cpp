#include <cmath>

#include "simd/kernel_decls.hpp"
#include "tgraph/detail/cone.hpp"

namespace tgraph::simd::scalar {

std::size_t collect_within(const double* xs, const double* ys, std::size_t n, double cx, double cy,
                           double r2, std::uint32_t* out) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - cx;
    const double dy = ys[i] - cy;
    if (dx * dx + dy * dy <= r2) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

void chebyshev(const double* xs, const double* ys, std::size_t n, double qx, double qy,
               double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = std::abs(xs[i] - qx);
    const double ay = std::abs(ys[i] - qy);
    out[i] = ax > ay ? ax : ay;
  }
}

static int cone_of(double dx, double dy) {
  if (dx == 0.0 && dy == 0.0) return 1;
  const double c60 = 0.5 * dy - detail::kSin60 * dx;
  const double c120 = -0.5 * dy - detail::kSin60 * dx;
  if (dy > 0.0 || (dy == 0.0 && dx > 0.0)) {
    if (c60 < 0.0) return 1;
    return c120 < 0.0 ? 2 : 3;
  }
  if (c60 > 0.0) return 4;
  return c120 > 0.0 ? 5 : 6;
}

std::size_t first_sector_hit(const double* xs, const double* ys, const double* r2, std::size_t n,
                             double tx, double ty, int cone) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - tx;
    const double dy = ys[i] - ty;
    if (dx * dx + dy * dy <= r2[i] && cone_of(dx, dy) == cone) return i;
  }
  return n;
}

bool any_leq(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] <= b[i]) return true;
  }
  return false;
}

}  // namespace tgraph::simd::scalar
