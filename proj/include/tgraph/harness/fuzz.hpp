#pragma once

// Differential testing of the oracles against BFS and linear scans.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgraph/harness/instance.hpp"

namespace tgraph::harness {

struct TrialOptions {
  std::vector<double> eps{0.1, 0.5, 1.0};
  std::size_t base_cutoff = 64;
  std::size_t targets = 20;  // random continuous targets
  std::uint64_t target_seed = 0;
};

/// Violation counters; every *_violations / *_mismatches field must be 0.
struct TrialResult {
  std::size_t pairs = 0;
  std::size_t reach_mismatches = 0;
  std::size_t dist_checks = 0;
  std::size_t dist_violations = 0;    // sandwich d <= d* <= (1+eps) d + 2
  std::size_t inf_mismatches = 0;     // d* infinite exactly when unreachable
  std::size_t tight_total = 0;        // reachable pairs with s != t
  std::size_t tight_hits = 0;         // ... meeting d* <= (1+eps) d + 1
  std::size_t target_checks = 0;
  std::size_t candidate_violations = 0;  // |Q(t)| > 6 or a candidate misses t
  std::size_t radius_mismatches = 0;     // tree minimum vs linear scan minimum
  std::size_t candidate_gap_violations = 0;
  std::size_t creach_mismatches = 0;
  std::size_t cdist_violations = 0;
  std::string first_failure;

  bool ok() const;
  TrialResult& operator+=(const TrialResult& other);
};

TrialResult check_instance(const Instance& inst, const TrialOptions& options);

struct FuzzConfig {
  std::size_t trials = 100;
  std::size_t min_n = 2;
  std::size_t max_n = 128;
  std::vector<double> eps{0.1, 0.5, 1.0};
  std::uint64_t seed = 1;
  std::size_t targets = 20;
  /// When unset, trials cycle through cutoffs 1, 4, 16 and 64.
  std::optional<std::size_t> base_cutoff;
  /// Where to write the shrunk failing instance; empty for no dump.
  std::string dump_path;
};

struct FuzzTrial {
  Instance instance;
  TrialOptions options;
};

/// The instance and options of trial `index`: generators, psi in
/// {1, 2, 10, 1e4} and cutoffs rotate with the index.
FuzzTrial fuzz_trial(const FuzzConfig& config, std::size_t index);

struct FuzzReport {
  std::size_t trials = 0;
  TrialResult totals;
  std::optional<Instance> failing;  // shrunk
  bool ok() const { return totals.ok(); }
};

/// Stops at the first failing trial, shrinks it by halving and dumps it.
FuzzReport run_fuzz(const FuzzConfig& config);

/// Halves the point set while `options` still fails on it.
Instance shrink_failure(const Instance& inst, const TrialOptions& options);

}  // namespace tgraph::harness
