#include "tgraph/distance_oracle.hpp"

#include <limits>
#include <stdexcept>

#include "hierarchy.hpp"

namespace tgraph {

namespace {

using detail::HierarchyNode;
using detail::Side;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DistBuilder {
  double eps;
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
      node->hops.resize(n * n);
      std::vector<std::uint32_t> dist;
      for (NodeId v = 0; v < n; ++v) {
        bfs_distances(g, v, Direction::Forward, dist);
        std::copy(dist.begin(), dist.end(), node->hops.begin() + static_cast<std::ptrdiff_t>(v * n));
      }
      detail::record_level(nullptr, *node, level, nodes, options.keep_paths, stats, paths);
      return node;
    }

    detail::LevelSplit split = detail::split_level(g);
    node->thresholds = level_thresholds(eps, n);
    const std::size_t levels = node->thresholds.size();
    const std::size_t count = split.paths.size();
    const std::size_t stride = count * levels;
    node->path_count = count;
    node->min_in.resize(n * stride);
    node->max_out.resize(n * stride);
    for (std::size_t p = 0; p < count; ++p) {
      fill_via_path_levels(g, split.paths[p], node->thresholds, node->min_in, node->max_out, stride, p * levels);
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

double level_answer(const HierarchyNode& node, NodeId s, NodeId t) {
  if (node.base) {
    const std::uint32_t h = node.hops[static_cast<std::size_t>(s) * node.size + t];
    return h == kUnreached ? kInfinity : static_cast<double>(h);
  }
  const std::size_t levels = node.thresholds.size();
  const std::size_t stride = node.path_count * levels;
  const Label* in_row = node.min_in.data() + s * stride;
  const Label* out_row = node.max_out.data() + t * stride;
  double best = kInfinity;
  for (std::size_t p = 0; p < node.path_count; ++p) {
    best = std::min(best, scan_level_pairs({in_row + p * levels, levels}, {out_row + p * levels, levels},
                                           node.thresholds));
  }
  return best;
}

}  // namespace

DistanceOracle::DistanceOracle() = default;
DistanceOracle::DistanceOracle(DistanceOracle&&) noexcept = default;
DistanceOracle& DistanceOracle::operator=(DistanceOracle&&) noexcept = default;
DistanceOracle::~DistanceOracle() = default;

DistanceOracle build_dist_oracle(std::span<const TransmissionPoint> pts, double eps, const OracleOptions& options) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  if (options.base_cutoff < 1) throw Error(ErrorCode::InvalidArgument, "base cutoff must be >= 1");
  const TransmissionGraph g = TransmissionGraph::build({pts.begin(), pts.end()});
  std::vector<NodeId> ids(g.size());
  for (NodeId v = 0; v < ids.size(); ++v) ids[v] = v;

  DistanceOracle o;
  o.size_ = g.size();
  o.eps_ = eps;
  DistBuilder builder{eps, options, o.levels_, o.paths_};
  o.root_ = builder.build(g, ids, 0);
  o.depth_ = builder.depth;
  for (const auto& level : o.levels_) o.stored_entries_ += level.stored_entries;
  if (static_cast<double>(o.depth_) > max_recursion_depth(o.size_)) {
    throw std::logic_error("distance oracle recursion exceeds the balance depth bound");
  }
  return o;
}

DistanceOracle build_dist_oracle(std::span<const TransmissionPoint> pts, double eps, std::size_t base_cutoff) {
  OracleOptions options;
  options.base_cutoff = base_cutoff;
  return build_dist_oracle(pts, eps, options);
}

std::vector<double> DistanceOracle::query_by_level(NodeId s, NodeId t) const {
  if (s >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(s));
  if (t >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(t));
  std::vector<double> answers;
  const HierarchyNode* node = root_.get();
  while (node != nullptr) {
    answers.push_back(s == t ? 0.0 : level_answer(*node, s, t));
    if (node->base) break;
    const Side side = node->side[s];
    if (side == Side::Separator || side != node->side[t]) break;
    s = node->child_local[s];
    t = node->child_local[t];
    node = node->children[side == Side::A ? 0 : 1].get();
  }
  return answers;
}

double DistanceOracle::query(NodeId s, NodeId t) const {
  if (s >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(s));
  if (t >= size_) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(t));
  if (s == t) return 0.0;
  double best = kInfinity;
  const HierarchyNode* node = root_.get();
  while (node != nullptr) {
    best = std::min(best, level_answer(*node, s, t));
    if (node->base) break;
    const Side side = node->side[s];
    if (side == Side::Separator || side != node->side[t]) break;
    s = node->child_local[s];
    t = node->child_local[t];
    node = node->children[side == Side::A ? 0 : 1].get();
  }
  return best;
}

double query_dist(const DistanceOracle& o, NodeId s, NodeId t) { return o.query(s, t); }

}  // namespace tgraph
