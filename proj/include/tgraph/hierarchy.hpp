#pragma once

// Shared vocabulary of the recursive separator oracles.

#include <cstddef>
#include <vector>

#include "tgraph/geometry.hpp"
#include "tgraph/via_oracles.hpp"

namespace tgraph {

struct OracleOptions {
  /// Sub-instances with at most this many points store an exact table.
  std::size_t base_cutoff = 64;
  /// Keep every level's transitive paths (in original ids) for inspection.
  bool keep_paths = false;
};

/// One node of the recursion, in pre-order.
struct LevelStats {
  std::size_t depth = 0;
  std::size_t size = 0;
  bool base = false;
  bool degenerate = false;
  std::size_t cliques = 0;
  std::size_t paths = 0;
  std::size_t separator_nodes = 0;
  std::size_t part_a = 0;
  std::size_t part_b = 0;
  double weight = 0.0;
  double t_star = 0.0;
  std::size_t stored_entries = 0;
};

/// Transitive paths of one recursion node. `nodes` lists the sub-instance's
/// original ids; the paths use original ids too.
struct LevelPaths {
  std::size_t depth = 0;
  std::vector<NodeId> nodes;
  std::vector<TransitivePath> paths;
};

/// Depth allowed by the 144/145 balance guarantee.
double max_recursion_depth(std::size_t n);

}  // namespace tgraph
