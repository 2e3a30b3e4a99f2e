#pragma once

// Directed transmission graph: arc (p, q) iff p != q and q lies in D_p.
// Provides the exact BFS oracles, SCC condensation and label propagation
// that back the via-path arrays.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph {

/// Hop count along a directed path, or the distinguished unreachable value.
class HopDistance {
 public:
  explicit HopDistance(std::uint32_t hops) : hops_(hops) {}
  static HopDistance unreachable() { return HopDistance(); }

  bool reachable() const { return hops_ != kNone; }
  /// Throws InvalidArgument when unreachable.
  std::uint32_t value() const;

  friend bool operator==(const HopDistance&, const HopDistance&) = default;

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  HopDistance() = default;
  std::uint32_t hops_ = kNone;
};

enum class Direction { Forward, Reverse };

/// Raw BFS distance marker used by the internal hop-distance arrays.
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

class TransmissionGraph {
 public:
  enum class Method { Auto, Pairwise, Grid };

  /// Builds the graph; point ids must be a permutation of 0..n-1 and each
  /// point ends up at index id. Throws DuplicateId / InvalidArgument.
  static TransmissionGraph build(std::vector<TransmissionPoint> points, Method method = Method::Auto);

  std::size_t size() const { return points_.size(); }
  std::size_t arc_count() const { return out_targets_.size(); }
  const std::vector<TransmissionPoint>& points() const { return points_; }
  const TransmissionPoint& point(NodeId v) const { return points_[v]; }

  /// Successors / predecessors in ascending id order.
  std::span<const NodeId> out(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in(NodeId v) const {
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }
  std::span<const NodeId> neighbors(NodeId v, Direction dir) const {
    return dir == Direction::Forward ? out(v) : in(v);
  }

  bool has_arc(NodeId from, NodeId to) const;

  /// Subgraph induced by `nodes`; node k of the result is nodes[k] (its id is
  /// renumbered to k).
  TransmissionGraph induced(std::span<const NodeId> nodes) const;

  /// Throws UnknownNode when v is not a node.
  void check_node(NodeId v) const;

 private:
  void set_arcs(std::vector<std::vector<NodeId>> out_lists);

  std::vector<TransmissionPoint> points_;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<NodeId> out_targets_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<NodeId> in_targets_;
};

TransmissionGraph build_graph(std::vector<TransmissionPoint> points);

HopDistance hop_distance_bfs(const TransmissionGraph& g, NodeId s, NodeId t);

/// Forward: d(source, v) for every v. Reverse: d(v, source).
std::vector<HopDistance> all_hop_distances(const TransmissionGraph& g, NodeId source, Direction dir);

/// Same as all_hop_distances but with kUnreached markers; `dist` is resized.
void bfs_distances(const TransmissionGraph& g, NodeId source, Direction dir,
                   std::vector<std::uint32_t>& dist);

/// Strongly connected components numbered in topological order: every DAG
/// arc goes from a smaller to a larger component id.
struct Condensation {
  std::vector<std::uint32_t> component_of;
  std::vector<std::uint32_t> dag_offsets;
  std::vector<std::uint32_t> dag_targets;

  std::size_t component_count() const { return dag_offsets.empty() ? 0 : dag_offsets.size() - 1; }
  std::span<const std::uint32_t> successors(std::uint32_t c) const {
    return {dag_targets.data() + dag_offsets[c], dag_targets.data() + dag_offsets[c + 1]};
  }
};

Condensation condense(const TransmissionGraph& g);

/// Extended-integer labels: path indices, with +/- infinity as identities.
using Label = std::int32_t;
inline constexpr Label kPlusInfinity = std::numeric_limits<Label>::max();
inline constexpr Label kMinusInfinity = std::numeric_limits<Label>::min();

enum class LabelMode { Min, Max };

/// result[v] = best label over every w reachable from v (Forward) or every w
/// that reaches v (Reverse), v itself included. O(n + m).
std::vector<Label> propagate_labels(const Condensation& c, std::span<const Label> labels,
                                    LabelMode mode, Direction dir);

/// Forward min/max propagation on g; MaxOut is obtained with Direction::Reverse
/// (equivalently, on the transpose).
std::vector<Label> min_label_reach(const TransmissionGraph& g, std::span<const Label> labels,
                                   LabelMode mode, Direction dir = Direction::Forward);

}  // namespace tgraph
