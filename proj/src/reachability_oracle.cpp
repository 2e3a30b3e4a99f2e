#include "tgraph/reachability_oracle.hpp"

#include <stdexcept>

#include "hierarchy.hpp"
#include "tgraph/simd.hpp"

namespace tgraph {

namespace {

using detail::HierarchyNode;
using detail::Side;

struct ReachBuilder {
  const OracleOptions& options;
  std::vector<LevelStats>& stats;
  std::vector<LevelPaths>& paths;
  std::size_t depth = 0;

  std::unique_ptr<HierarchyNode> build(const TransmissionGraph& g, std::span<const NodeId> nodes,
                                       std::size_t level) {
    depth = std::max(depth, level + 1);
    auto node = std::make_unique<HierarchyNode>();
    const std::size_t n = g.size();
    node->size = n;

    if (n <= options.base_cutoff) {
      node->base = true;
      node->reach_bits.assign((n * n + 63) / 64, 0);
      std::vector<std::uint32_t> dist;
      for (NodeId v = 0; v < n; ++v) {
        bfs_distances(g, v, Direction::Forward, dist);
        for (NodeId w = 0; w < n; ++w) {
          if (dist[w] != kUnreached) node->reach_bits[(v * n + w) / 64] |= std::uint64_t{1} << ((v * n + w) % 64);
        }
      }
      detail::record_level(nullptr, *node, level, nodes, options.keep_paths, stats, paths);
      return node;
    }

    detail::LevelSplit split = detail::split_level(g);
    const std::size_t count = split.paths.size();
    node->path_count = count;
    node->min_in.assign(n * count, kPlusInfinity);
    node->max_out.assign(n * count, kMinusInfinity);
    const Condensation cond = condense(g);
    std::vector<Label> labels(n);
    for (std::size_t p = 0; p < count; ++p) {
      const auto& ids = split.paths[p].node_ids;
      std::fill(labels.begin(), labels.end(), kPlusInfinity);
      for (std::size_t i = 0; i < ids.size(); ++i) labels[ids[i]] = static_cast<Label>(i + 1);
      const auto min_in = propagate_labels(cond, labels, LabelMode::Min, Direction::Forward);
      std::fill(labels.begin(), labels.end(), kMinusInfinity);
      for (std::size_t i = 0; i < ids.size(); ++i) labels[ids[i]] = static_cast<Label>(i + 1);
      const auto max_out = propagate_labels(cond, labels, LabelMode::Max, Direction::Reverse);
      for (std::size_t v = 0; v < n; ++v) {
        node->min_in[v * count + p] = min_in[v];
        node->max_out[v * count + p] = max_out[v];
      }
    }
    node->side = std::move(split.side);
    node->child_local = std::move(split.child_local);
    detail::record_level(&split, *node, level, nodes, options.keep_paths, stats, paths);

    const std::array<const std::vector<NodeId>*, 2> parts{&split.separator.part_a, &split.separator.part_b};
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& part = *parts[c];
      if (part.empty()) continue;
      std::vector<NodeId> global;
      global.reserve(part.size());
      for (NodeId v : part) global.push_back(nodes[v]);
      node->children[c] = build(g.induced(part), global, level + 1);
    }
    return node;
  }
};

}  // namespace

ReachabilityOracle::ReachabilityOracle() = default;
ReachabilityOracle::ReachabilityOracle(ReachabilityOracle&&) noexcept = default;
ReachabilityOracle& ReachabilityOracle::operator=(ReachabilityOracle&&) noexcept = default;
ReachabilityOracle::~ReachabilityOracle() = default;

ReachabilityOracle build_reach_oracle(std::span<const TransmissionPoint> pts, const OracleOptions& options) {
  if (options.base_cutoff < 1) throw Error(ErrorCode::InvalidArgument, "base cutoff must be >= 1");
  const TransmissionGraph g = TransmissionGraph::build({pts.begin(), pts.end()});
  std::vector<NodeId> ids(g.size());
  for (NodeId v = 0; v < ids.size(); ++v) ids[v] = v;

  ReachabilityOracle o;
  o.size_ = g.size();
  ReachBuilder builder{options, o.levels_, o.paths_};
  o.root_ = builder.build(g, ids, 0);
  o.depth_ = builder.depth;
  for (const auto& level : o.levels_) o.stored_entries_ += level.stored_entries;
  if (static_cast<double>(o.depth_) > max_recursion_depth(o.size_)) {
    throw std::logic_error("reachability oracle recursion exceeds the balance depth bound");
  }
  return o;
}

ReachabilityOracle build_reach_oracle(std::span<const TransmissionPoint> pts, std::size_t base_cutoff) {
  OracleOptions options;
  options.base_cutoff = base_cutoff;
  return build_reach_oracle(pts, options);
}

bool ReachabilityOracle::query(NodeId s, NodeId t) const {
  if (s >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(s));
  if (t >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(t));
  if (s == t) return true;
  const simd::Kernels& kern = simd::active();
  const HierarchyNode* node = root_.get();
  while (node != nullptr) {
    if (node->base) {
      const std::size_t bit = static_cast<std::size_t>(s) * node->size + t;
      return (node->reach_bits[bit / 64] >> (bit % 64)) & 1U;
    }
    const std::size_t count = node->path_count;
    if (count > 0 && kern.any_leq(node->min_in.data() + s * count, node->max_out.data() + t * count, count)) {
      return true;
    }
    const Side side = node->side[s];
    if (side == Side::Separator || side != node->side[t]) return false;
    s = node->child_local[s];
    t = node->child_local[t];
    node = node->children[side == Side::A ? 0 : 1].get();
  }
  return false;
}

bool query_reach(const ReachabilityOracle& o, NodeId s, NodeId t) { return o.query(s, t); }

}  // namespace tgraph
