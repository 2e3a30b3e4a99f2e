#pragma once

// Approximate hop-distance oracle on the same recursion as the reachability
// oracle. For reachable pairs the answer d* satisfies
// d_hop(s,t) <= d* <= (1+eps) * d_hop(s,t) + 2; unreachable pairs get +infinity.

#include <memory>
#include <span>
#include <vector>

#include "tgraph/hierarchy.hpp"
#include "tgraph/transmission_graph.hpp"

namespace tgraph {

namespace detail {
struct HierarchyNode;
}

class DistanceOracle {
 public:
  DistanceOracle();
  DistanceOracle(DistanceOracle&&) noexcept;
  DistanceOracle& operator=(DistanceOracle&&) noexcept;
  ~DistanceOracle();

  std::size_t size() const { return size_; }
  double eps() const { return eps_; }

  /// 0 for s == t. Throws UnknownNode for ids outside 0..size()-1.
  double query(NodeId s, NodeId t) const;

  /// Per-level answers along the query's descent, for diagnostics: entry d is
  /// the best via-path estimate at depth d (the exact hop count at a base case).
  std::vector<double> query_by_level(NodeId s, NodeId t) const;

  std::size_t stored_entries() const { return stored_entries_; }
  std::size_t depth() const { return depth_; }
  const std::vector<LevelStats>& levels() const { return levels_; }
  const std::vector<LevelPaths>& paths() const { return paths_; }

 private:
  friend DistanceOracle build_dist_oracle(std::span<const TransmissionPoint>, double, const OracleOptions&);

  std::unique_ptr<detail::HierarchyNode> root_;
  std::size_t size_ = 0;
  double eps_ = 1.0;
  std::size_t stored_entries_ = 0;
  std::size_t depth_ = 0;
  std::vector<LevelStats> levels_;
  std::vector<LevelPaths> paths_;
};

/// Requires eps > 0; point ids must be a permutation of 0..n-1.
DistanceOracle build_dist_oracle(std::span<const TransmissionPoint> pts, double eps, const OracleOptions& options);
DistanceOracle build_dist_oracle(std::span<const TransmissionPoint> pts, double eps, std::size_t base_cutoff = 64);

double query_dist(const DistanceOracle& o, NodeId s, NodeId t);

}  // namespace tgraph
