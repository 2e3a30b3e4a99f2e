#include <atomic>

#include "simd/kernel_decls.hpp"
#include "tgraph/simd.hpp"

namespace tgraph::simd {

namespace {

const Kernels kScalar{Level::Scalar,           "scalar",
                      &scalar::collect_within, &scalar::chebyshev,
                      &scalar::first_sector_hit, &scalar::any_leq};

#if defined(TGRAPH_HAVE_AVX2)
const Kernels kAvx2{Level::Avx2,           "avx2",
                    &avx2::collect_within, &avx2::chebyshev,
                    &avx2::first_sector_hit, &avx2::any_leq};
#endif

const Kernels* best_available() {
  if (const Kernels* k = avx2_kernels(); k != nullptr && cpu_has_avx2()) return k;
  return &kScalar;
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> table{best_available()};
  return table;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* avx2_kernels() {
#if defined(TGRAPH_HAVE_AVX2)
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(TGRAPH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels& active() { return *current().load(std::memory_order_relaxed); }

Level set_level(Level requested) {
  const Kernels* table = &kScalar;
  if (requested == Level::Avx2 && avx2_kernels() != nullptr && cpu_has_avx2()) {
    table = avx2_kernels();
  }
  current().store(table, std::memory_order_relaxed);
  return table->level;
}

const char* level_name(Level level) { return level == Level::Avx2 ? "avx2" : "scalar"; }

}  // namespace tgraph::simd
