#pragma once

// Queries whose target is an arbitrary plane point t. Q(t) holds, for each
// cone i, a minimum-radius point p with t in the sector D_p^(i); any s that
// reaches t does so through one of these at most six points.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/distance_oracle.hpp"
#include "tgraph/geometry.hpp"
#include "tgraph/reachability_oracle.hpp"

namespace tgraph {

/// Points in ascending radius order (ties by id), stored column-wise.
struct RadiusOrder {
  std::vector<TransmissionPoint> points;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> r2;
};

/// Balanced binary tree over the radius order for one cone. Nodes are heap
/// numbered (root 1, children 2v and 2v+1) and each covers a contiguous leaf
/// range. Membership of t in the union of a node's sectors is answered by a
/// bounding-box test followed by a scan of the node's leaves.
class SectorTree {
 public:
  using NodeRef = std::uint32_t;

  SectorTree(ConeIndex cone, std::shared_ptr<const RadiusOrder> order);

  ConeIndex cone() const { return cone_; }
  std::size_t leaf_count() const { return order_->points.size(); }
  const TransmissionPoint& leaf(std::size_t position) const { return order_->points[position]; }

  static constexpr NodeRef root() { return 1; }
  bool valid(NodeRef v) const { return v < lo_.size() && lo_[v] < hi_[v]; }
  bool is_leaf(NodeRef v) const { return hi_[v] - lo_[v] == 1; }
  NodeRef left(NodeRef v) const { return 2 * v; }
  NodeRef right(NodeRef v) const { return 2 * v + 1; }
  /// Leaf positions [first, last) under v.
  std::pair<std::size_t, std::size_t> leaf_range(NodeRef v) const { return {lo_[v], hi_[v]}; }

  /// True iff some leaf p under v has t in its sector for this cone. False
  /// for invalid nodes (including the root of an empty tree).
  bool membership(NodeRef v, Point t) const;

  /// Leftmost leaf whose sector contains t, found by left-first descent.
  std::optional<std::size_t> descend(Point t) const;

 private:
  struct Box {
    double x0, y0, x1, y1;
  };

  bool box_hit(NodeRef v, Point t) const;
  std::size_t scan(std::size_t first, std::size_t last, Point t) const;

  ConeIndex cone_;
  std::shared_ptr<const RadiusOrder> order_;
  std::vector<std::uint32_t> lo_;
  std::vector<std::uint32_t> hi_;
  std::vector<Box> boxes_;
};

class ContinuousIndex {
 public:
  explicit ContinuousIndex(std::span<const TransmissionPoint> pts);

  const SectorTree& tree(ConeIndex i) const { return trees_[static_cast<std::size_t>(i.slot())]; }

 private:
  std::vector<SectorTree> trees_;
};

ContinuousIndex build_continuous_index(std::span<const TransmissionPoint> pts);

bool node_membership(const SectorTree& tree, SectorTree::NodeRef v, Point t);

/// Q(t): at most one minimum-radius point per cone, in cone order.
std::vector<TransmissionPoint> query_candidates(const ContinuousIndex& idx, Point t);

/// Whether s reaches the plane point t (some q with |qt| <= r(q) is reachable
/// from s, q = s included).
bool query_continuous_reach(const ReachabilityOracle& r, const ContinuousIndex& idx, NodeId s, Point t);

/// min over q in Q(t) of query_dist(s, q) + 1; +infinity when none.
double query_continuous_dist(const DistanceOracle& d, const ContinuousIndex& idx, NodeId s, Point t);

}  // namespace tgraph
