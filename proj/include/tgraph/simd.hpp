#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version chosen at runtime. Both versions produce
// bit-identical results (tests/simd_equivalence_test.cpp).

#include <cstddef>
#include <cstdint>

namespace tgraph::simd {

enum class Level { Scalar, Avx2 };

struct Kernels {
  Level level;
  const char* name;

  /// Writes to out every i in [0, n) with (xs[i]-cx)^2 + (ys[i]-cy)^2 <= r2,
  /// in ascending order. Returns the number written; out holds n slots.
  std::size_t (*collect_within)(const double* xs, const double* ys, std::size_t n, double cx,
                                double cy, double r2, std::uint32_t* out);

  /// out[i] = max(|xs[i]-qx|, |ys[i]-qy|).
  void (*chebyshev)(const double* xs, const double* ys, std::size_t n, double qx, double qy,
                    double* out);

  /// Smallest i in [0, n) such that point i lies in cone `cone` seen from
  /// (tx, ty) and (xs[i]-tx)^2 + (ys[i]-ty)^2 <= r2[i]; n if none.
  std::size_t (*first_sector_hit)(const double* xs, const double* ys, const double* r2,
                                  std::size_t n, double tx, double ty, int cone);

  /// True iff a[i] <= b[i] for some i in [0, n).
  bool (*any_leq)(const std::int32_t* a, const std::int32_t* b, std::size_t n);
};

const Kernels& scalar_kernels();

/// nullptr when the AVX2 variants were not compiled in.
const Kernels* avx2_kernels();

bool cpu_has_avx2();

/// Kernel table currently in use. Defaults to the best level the CPU supports.
const Kernels& active();

/// Forces a level; requesting AVX2 on a machine without it falls back to scalar.
/// Returns the level actually selected.
Level set_level(Level requested);

const char* level_name(Level level);

}  // namespace tgraph::simd
