#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/harness/instance.hpp"

namespace tgraph::harness {

struct BenchConfig {
  std::vector<std::size_t> sizes{1024, 2048, 4096, 8192, 16384};
  /// Set: benchmark the distance oracle with this eps. Unset: reachability.
  std::optional<double> eps;
  std::size_t reps = 5;  // seeds per size
  std::uint64_t seed = 1;
  std::size_t queries = 2000;
  std::size_t base_cutoff = 64;
  Generator generator = Generator::Uniform;
  double psi = 2.0;
  GeneratorOptions generator_options{};
};

/// One size, averaged over the repetitions (query time: median over all
/// timed batches).
struct BenchRecord {
  std::size_t n = 0;
  double build_ms = 0.0;
  double query_ns_median = 0.0;
  double stored_entries = 0.0;
  double separator_clique_count = 0.0;  // top level
  double recursion_depth = 0.0;
  std::optional<double> eps;
};

std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct BenchSlopes {
  double stored_entries = 0.0;
  double query_ns = 0.0;
  double separator_cliques = 0.0;
};

BenchSlopes bench_slopes(std::span<const BenchRecord> records);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);
void write_bench_json(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace tgraph::harness
