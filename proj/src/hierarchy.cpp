#include "hierarchy.hpp"

#include <cmath>

namespace tgraph {

double max_recursion_depth(std::size_t n) {
  if (n <= 1) return 2.0;
  return std::log(static_cast<double>(n)) / std::log(145.0 / 144.0) + 2.0;
}

namespace detail {

LevelSplit split_level(const TransmissionGraph& g) {
  LevelSplit split;
  split.separator = build_separator(g.points());
  const std::size_t n = g.size();
  split.side.assign(n, Side::Separator);
  split.child_local.assign(n, kUnreached);
  for (std::size_t k = 0; k < split.separator.part_a.size(); ++k) {
    const NodeId v = split.separator.part_a[k];
    split.side[v] = Side::A;
    split.child_local[v] = static_cast<NodeId>(k);
  }
  for (std::size_t k = 0; k < split.separator.part_b.size(); ++k) {
    const NodeId v = split.separator.part_b[k];
    split.side[v] = Side::B;
    split.child_local[v] = static_cast<NodeId>(k);
  }
  std::vector<TransmissionPoint> members;
  for (const StabbedClique& clique : split.separator.cliques) {
    members.clear();
    for (NodeId v : clique.member_ids) members.push_back(g.point(v));
    for (auto& path : decompose_stabbed_clique(members, clique.stab_point)) {
      split.paths.push_back(std::move(path));
    }
  }
  return split;
}

std::size_t stored_entries(const HierarchyNode& node) {
  std::size_t total = node.min_in.size() + node.max_out.size() + node.hops.size();
  if (!node.reach_bits.empty()) total += node.size * node.size;
  return total;
}

void record_level(const LevelSplit* split, const HierarchyNode& node, std::size_t depth,
                  std::span<const NodeId> nodes, bool keep_paths, std::vector<LevelStats>& stats,
                  std::vector<LevelPaths>& paths) {
  LevelStats s;
  s.depth = depth;
  s.size = node.size;
  s.base = node.base;
  s.stored_entries = stored_entries(node);
  if (split != nullptr) {
    const CliqueSeparator& sep = split->separator;
    s.degenerate = sep.degenerate;
    s.cliques = sep.cliques.size();
    s.paths = split->paths.size();
    s.separator_nodes = sep.separator_size();
    s.part_a = sep.part_a.size();
    s.part_b = sep.part_b.size();
    s.weight = sep.weight;
    s.t_star = sep.t_star;
    if (keep_paths) {
      LevelPaths lp;
      lp.depth = depth;
      lp.nodes.assign(nodes.begin(), nodes.end());
      for (const TransitivePath& path : split->paths) {
        TransitivePath global;
        for (NodeId v : path.node_ids) global.node_ids.push_back(nodes[v]);
        lp.paths.push_back(std::move(global));
      }
      paths.push_back(std::move(lp));
    }
  }
  stats.push_back(s);
}

}  // namespace detail
}  // namespace tgraph
