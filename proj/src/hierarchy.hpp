#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "tgraph/clique_separator.hpp"
#include "tgraph/hierarchy.hpp"
#include "tgraph/transmission_graph.hpp"

namespace tgraph::detail {

enum class Side : std::uint8_t { Separator, A, B };

/// Separator of one level expressed over the level graph's local ids.
struct LevelSplit {
  CliqueSeparator separator;
  std::vector<TransitivePath> paths;
  std::vector<Side> side;
  std::vector<NodeId> child_local;  // id inside the node's part, kUnreached for separator nodes
};

LevelSplit split_level(const TransmissionGraph& g);

/// Recursion node shared by the reachability and distance oracles. The level
/// tables are node-major: a node's entries for every path (and, for distances,
/// every level) are contiguous.
struct HierarchyNode {
  std::size_t size = 0;
  bool base = false;
  std::vector<Side> side;
  std::vector<NodeId> child_local;
  std::array<std::unique_ptr<HierarchyNode>, 2> children;

  std::size_t path_count = 0;
  std::vector<Label> min_in;
  std::vector<Label> max_out;
  std::vector<double> thresholds;  // distances only: hop budget per level slot

  std::vector<std::uint64_t> reach_bits;  // base case, reachability
  std::vector<std::uint32_t> hops;        // base case, distances
};

/// Appends stats (and optionally paths) of one node; `nodes` holds the
/// original ids of the level graph.
void record_level(const LevelSplit* split, const HierarchyNode& node, std::size_t depth,
                  std::span<const NodeId> nodes, bool keep_paths, std::vector<LevelStats>& stats,
                  std::vector<LevelPaths>& paths);

std::size_t stored_entries(const HierarchyNode& node);

}  // namespace tgraph::detail
