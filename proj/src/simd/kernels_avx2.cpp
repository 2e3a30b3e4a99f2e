// AVX2 variants. Each loop mirrors the scalar reference operation for
// operation (no FMA, same comparison semantics) so results match bit for bit.

#include <immintrin.h>

#include <cmath>

#include "simd/kernel_decls.hpp"
#include "tgraph/detail/cone.hpp"

namespace tgraph::simd::avx2 {

std::size_t collect_within(const double* xs, const double* ys, std::size_t n, double cx, double cy,
                           double r2, std::uint32_t* out) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  const __m256d vr2 = _mm256_set1_pd(r2);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ));
    while (mask != 0) {
      const int bit = __builtin_ctz(static_cast<unsigned>(mask));
      out[count++] = static_cast<std::uint32_t>(i + bit);
      mask &= mask - 1;
    }
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - cx;
    const double dy = ys[i] - cy;
    if (dx * dx + dy * dy <= r2) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

void chebyshev(const double* xs, const double* ys, std::size_t n, double qx, double qy,
               double* out) {
  const __m256d vqx = _mm256_set1_pd(qx);
  const __m256d vqy = _mm256_set1_pd(qy);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = _mm256_andnot_pd(sign, _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx));
    const __m256d ay = _mm256_andnot_pd(sign, _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy));
    _mm256_storeu_pd(out + i, _mm256_max_pd(ax, ay));
  }
  for (; i < n; ++i) {
    const double ax = std::abs(xs[i] - qx);
    const double ay = std::abs(ys[i] - qy);
    out[i] = ax > ay ? ax : ay;
  }
}

namespace {

int cone_of(double dx, double dy) {
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

// Lanes whose offset (dx, dy) falls in `cone`.
__m256d cone_mask(__m256d dx, __m256d dy, int cone) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d at_apex =
      _mm256_and_pd(_mm256_cmp_pd(dx, zero, _CMP_EQ_OQ), _mm256_cmp_pd(dy, zero, _CMP_EQ_OQ));
  const __m256d upper = _mm256_or_pd(
      _mm256_cmp_pd(dy, zero, _CMP_GT_OQ),
      _mm256_and_pd(_mm256_cmp_pd(dy, zero, _CMP_EQ_OQ), _mm256_cmp_pd(dx, zero, _CMP_GT_OQ)));
  const __m256d ks = _mm256_set1_pd(detail::kSin60);
  const __m256d kdx = _mm256_mul_pd(ks, dx);
  const __m256d c60 = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), dy), kdx);
  const __m256d c120 = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(-0.5), dy), kdx);
  switch (cone) {
    case 1:
      return _mm256_or_pd(at_apex, _mm256_and_pd(upper, _mm256_cmp_pd(c60, zero, _CMP_LT_OQ)));
    case 2:
      return _mm256_and_pd(upper, _mm256_and_pd(_mm256_cmp_pd(c60, zero, _CMP_GE_OQ),
                                                _mm256_cmp_pd(c120, zero, _CMP_LT_OQ)));
    case 3:
      return _mm256_and_pd(upper, _mm256_and_pd(_mm256_cmp_pd(c60, zero, _CMP_GE_OQ),
                                                _mm256_cmp_pd(c120, zero, _CMP_GE_OQ)));
    case 4:
      return _mm256_andnot_pd(_mm256_or_pd(upper, at_apex), _mm256_cmp_pd(c60, zero, _CMP_GT_OQ));
    case 5:
      return _mm256_andnot_pd(_mm256_or_pd(upper, at_apex),
                              _mm256_and_pd(_mm256_cmp_pd(c60, zero, _CMP_LE_OQ),
                                            _mm256_cmp_pd(c120, zero, _CMP_GT_OQ)));
    default:
      return _mm256_andnot_pd(_mm256_or_pd(upper, at_apex),
                              _mm256_and_pd(_mm256_cmp_pd(c60, zero, _CMP_LE_OQ),
                                            _mm256_cmp_pd(c120, zero, _CMP_LE_OQ)));
  }
}

}  // namespace

std::size_t first_sector_hit(const double* xs, const double* ys, const double* r2, std::size_t n,
                             double tx, double ty, int cone) {
  const __m256d vtx = _mm256_set1_pd(tx);
  const __m256d vty = _mm256_set1_pd(ty);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vtx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vty);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d inside = _mm256_cmp_pd(d2, _mm256_loadu_pd(r2 + i), _CMP_LE_OQ);
    if (_mm256_movemask_pd(inside) == 0) continue;
    const int mask = _mm256_movemask_pd(_mm256_and_pd(inside, cone_mask(dx, dy, cone)));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - tx;
    const double dy = ys[i] - ty;
    if (dx * dx + dy * dy <= r2[i] && cone_of(dx, dy) == cone) return i;
  }
  return n;
}

bool any_leq(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpgt_epi32(va, vb)) != -1) return true;
  }
  for (; i < n; ++i) {
    if (a[i] <= b[i]) return true;
  }
  return false;
}

}  // namespace tgraph::simd::avx2
