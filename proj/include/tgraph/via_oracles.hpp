#pragma once

// Via-path and via-clique oracles.
//
// A transitive path q_1..q_k has an arc from every node to every later node,
// so s reaches t through the path iff the smallest path index reachable from s
// is at most the largest index that reaches t. The distance variant stores the
// same two arrays once per hop budget (1+eps)^j.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tgraph/geometry.hpp"
#include "tgraph/transmission_graph.hpp"

namespace tgraph {

struct TransitivePath {
  std::vector<NodeId> node_ids;  // q_1 first
};

/// Splits a clique stabbed by x_c into at most six transitive paths, one per
/// cone around x_c, each ordered by decreasing radius (ties: ascending id).
/// Members at x_c itself join cone 1. Throws NotStabbed when a member's disk
/// misses x_c.
std::vector<TransitivePath> decompose_stabbed_clique(std::span<const TransmissionPoint> members,
                                                     Point x_c);

struct StabGroup {
  Point stab_point;
  std::vector<TransmissionPoint> members;
};

/// Partitions a clique of pairwise intersecting disks into at most 49 stabbed
/// groups using a 7x7 grid of spacing r0 around the smallest disk. Throws
/// NotAClique when two members are disjoint.
std::vector<StabGroup> stab_general_clique(std::span<const TransmissionPoint> members);

/// True when every node of the path has an arc to every later node.
bool is_transitive(const TransmissionGraph& g, const TransitivePath& path);

class ViaPathReachOracle {
 public:
  /// Path indices are 1-based; unreachable entries hold kPlusInfinity (min_in)
  /// and kMinusInfinity (max_out).
  static ViaPathReachOracle build(const TransmissionGraph& g, const TransitivePath& path);

  bool query(NodeId s, NodeId t) const { return min_in_.at(s) <= max_out_.at(t); }

  Label min_in(NodeId p) const { return min_in_.at(p); }
  Label max_out(NodeId p) const { return max_out_.at(p); }

 private:
  std::vector<Label> min_in_;
  std::vector<Label> max_out_;
};

/// Hop budgets (1+eps)^j for j = -1..J, where J is the smallest level with
/// (1+eps)^J >= n. Level -1 admits only zero-hop paths.
std::vector<double> level_thresholds(double eps, std::size_t n);

/// Smallest level whose threshold is >= hops (hops = 0 maps to level -1),
/// returned as a 0-based slot into level_thresholds; thresholds.size() if none.
std::size_t level_slot(std::span<const double> thresholds, std::uint32_t hops);

/// min over level slots (j, k) with min_in[j] <= max_out[k] of
/// thresholds[j] + thresholds[k] + 1, or +infinity. Uses the fact that min_in
/// is non-increasing and max_out non-decreasing in the level.
double scan_level_pairs(std::span<const Label> min_in, std::span<const Label> max_out,
                        std::span<const double> thresholds);

/// Fills the leveled arrays of one path. Row p of `min_in` / `max_out` (each
/// `stride` wide, thresholds.size() cells used starting at `offset`) receives
/// node p's levels. Costs two BFS runs per path node.
void fill_via_path_levels(const TransmissionGraph& g, const TransitivePath& path,
                          std::span<const double> thresholds, std::span<Label> min_in,
                          std::span<Label> max_out, std::size_t stride, std::size_t offset);

class ViaPathDistOracle {
 public:
  /// Requires eps > 0 (InvalidArgument otherwise).
  static ViaPathDistOracle build(const TransmissionGraph& g, const TransitivePath& path, double eps);

  /// Estimate of the shortest s-t path through the path, +infinity if none.
  double query(NodeId s, NodeId t) const;

  double eps() const { return eps_; }
  static constexpr int min_level() { return -1; }
  int max_level() const { return static_cast<int>(thresholds_.size()) - 2; }
  double threshold(int level) const { return thresholds_.at(static_cast<std::size_t>(level + 1)); }
  Label min_in(NodeId p, int level) const { return min_in_.at(cell(p, level)); }
  Label max_out(NodeId p, int level) const { return max_out_.at(cell(p, level)); }

 private:
  std::size_t cell(NodeId p, int level) const {
    return static_cast<std::size_t>(p) * thresholds_.size() + static_cast<std::size_t>(level + 1);
  }
  std::span<const Label> row(const std::vector<Label>& table, NodeId p) const;

  double eps_ = 1.0;
  std::vector<double> thresholds_;
  std::vector<Label> min_in_;   // [node][level]
  std::vector<Label> max_out_;  // [node][level]
};

enum class ViaMode { Reach, Dist };

/// Transitive paths covering one clique, with per-path oracles for the
/// requested mode.
class ViaCliqueOracle {
 public:
  /// Members must be node ids of g. With a stab point the clique is split by
  /// cones directly; without one it is first split by stab_general_clique.
  static ViaCliqueOracle build(const TransmissionGraph& g, std::span<const NodeId> members,
                               std::optional<Point> stab_point, ViaMode mode, double eps = 1.0);

  ViaMode mode() const { return mode_; }
  const std::vector<TransitivePath>& paths() const { return paths_; }

  bool query_reach(NodeId s, NodeId t) const;
  double query_dist(NodeId s, NodeId t) const;

 private:
  ViaMode mode_ = ViaMode::Reach;
  std::vector<TransitivePath> paths_;
  std::vector<ViaPathReachOracle> reach_;
  std::vector<ViaPathDistOracle> dist_;
};

/// Reach mode yields a bool, dist mode a double (+infinity when no path).
std::variant<bool, double> query_via_clique(const ViaCliqueOracle& o, NodeId s, NodeId t, ViaMode mode);

}  // namespace tgraph
