#pragma once

// Exact reachability oracle built by recursive clique separators. Each level
// stores, for every transitive path of its separator, the MinIn / MaxOut index
// of every node of the level; a query walks down the levels that contain both
// endpoints.

#include <memory>
#include <span>
#include <vector>

#include "tgraph/hierarchy.hpp"
#include "tgraph/transmission_graph.hpp"

namespace tgraph {

namespace detail {
struct HierarchyNode;
}

class ReachabilityOracle {
 public:
  ReachabilityOracle();
  ReachabilityOracle(ReachabilityOracle&&) noexcept;
  ReachabilityOracle& operator=(ReachabilityOracle&&) noexcept;
  ~ReachabilityOracle();

  std::size_t size() const { return size_; }

  /// Throws UnknownNode for ids outside 0..size()-1.
  bool query(NodeId s, NodeId t) const;

  /// MinIn/MaxOut cells plus base-table entries over all levels.
  std::size_t stored_entries() const { return stored_entries_; }
  std::size_t depth() const { return depth_; }
  const std::vector<LevelStats>& levels() const { return levels_; }
  /// Empty unless built with keep_paths.
  const std::vector<LevelPaths>& paths() const { return paths_; }

 private:
  friend ReachabilityOracle build_reach_oracle(std::span<const TransmissionPoint>, const OracleOptions&);

  std::unique_ptr<detail::HierarchyNode> root_;
  std::size_t size_ = 0;
  std::size_t stored_entries_ = 0;
  std::size_t depth_ = 0;
  std::vector<LevelStats> levels_;
  std::vector<LevelPaths> paths_;
};

/// Point ids must be a permutation of 0..n-1.
ReachabilityOracle build_reach_oracle(std::span<const TransmissionPoint> pts, const OracleOptions& options);
ReachabilityOracle build_reach_oracle(std::span<const TransmissionPoint> pts, std::size_t base_cutoff = 64);

bool query_reach(const ReachabilityOracle& o, NodeId s, NodeId t);

}  // namespace tgraph
