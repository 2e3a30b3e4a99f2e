#pragma once

// Raw kernel entry points. Deliberately free of inline code so the AVX2
// translation unit (compiled with -mavx2) cannot leak AVX2 instructions into
// functions shared with the rest of the library.

#include <cstddef>
#include <cstdint>

namespace tgraph::simd::scalar {
std::size_t collect_within(const double* xs, const double* ys, std::size_t n, double cx, double cy,
                           double r2, std::uint32_t* out);
void chebyshev(const double* xs, const double* ys, std::size_t n, double qx, double qy,
               double* out);
std::size_t first_sector_hit(const double* xs, const double* ys, const double* r2, std::size_t n,
                             double tx, double ty, int cone);
bool any_leq(const std::int32_t* a, const std::int32_t* b, std::size_t n);
}  // namespace tgraph::simd::scalar

namespace tgraph::simd::avx2 {
std::size_t collect_within(const double* xs, const double* ys, std::size_t n, double cx, double cy,
                           double r2, std::uint32_t* out);
void chebyshev(const double* xs, const double* ys, std::size_t n, double qx, double qy,
               double* out);
std::size_t first_sector_hit(const double* xs, const double* ys, const double* r2, std::size_t n,
                             double tx, double ty, int cone);
bool any_leq(const std::int32_t* a, const std::int32_t* b, std::size_t n);
}  // namespace tgraph::simd::avx2
