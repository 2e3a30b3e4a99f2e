#include "tgraph/transmission_graph.hpp"

#include <algorithm>

#include "tgraph/simd.hpp"
#include "tgraph/uniform_grid.hpp"

namespace tgraph {

std::uint32_t HopDistance::value() const {
  if (!reachable()) throw Error(ErrorCode::InvalidArgument, "hop distance is unreachable");
  return hops_;
}

namespace {

constexpr std::size_t kPairwiseCutoff = 256;

std::vector<std::vector<NodeId>> pairwise_arcs(const std::vector<TransmissionPoint>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = pts[i].pos.x();
    ys[i] = pts[i].pos.y();
  }
  const simd::Kernels& k = simd::active();
  std::vector<std::uint32_t> hits(n);
  std::vector<std::vector<NodeId>> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    const double r = pts[p].radius;
    const std::size_t count = k.collect_within(xs.data(), ys.data(), n, xs[p], ys[p], r * r, hits.data());
    out[p].reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (hits[i] != p) out[p].push_back(hits[i]);
    }
  }
  return out;
}

std::vector<std::vector<NodeId>> grid_arcs(const std::vector<TransmissionPoint>& pts) {
  const std::size_t n = pts.size();
  std::vector<Point> positions;
  positions.reserve(n);
  double max_r = 0.0;
  for (const auto& p : pts) {
    positions.push_back(p.pos);
    max_r = std::max(max_r, p.radius);
  }
  const UniformGrid grid(positions, max_r);
  const simd::Kernels& k = simd::active();
  std::vector<std::uint32_t> hits(n);
  std::vector<std::vector<NodeId>> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    const double x = pts[p].pos.x(), y = pts[p].pos.y(), r = pts[p].radius;
    grid.for_each_run(x - r, y - r, x + r, y + r, [&](std::size_t first, std::size_t count) {
      const std::size_t found =
          k.collect_within(grid.xs() + first, grid.ys() + first, count, x, y, r * r, hits.data());
      for (std::size_t i = 0; i < found; ++i) {
        const NodeId q = grid.ids()[first + hits[i]];
        if (q != p) out[p].push_back(q);
      }
    });
    std::sort(out[p].begin(), out[p].end());
  }
  return out;
}

}  // namespace

TransmissionGraph TransmissionGraph::build(std::vector<TransmissionPoint> points, Method method) {
  const std::size_t n = points.size();
  std::vector<int> seen(n, 0);
  for (const auto& p : points) {
    if (p.id >= n) throw Error(ErrorCode::InvalidArgument, "point id out of range 0..n-1");
    if (seen[p.id]++) throw Error(ErrorCode::DuplicateId, "duplicate point id " + std::to_string(p.id));
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  TransmissionGraph g;
  g.points_ = std::move(points);
  if (method == Method::Auto) method = n <= kPairwiseCutoff ? Method::Pairwise : Method::Grid;
  g.set_arcs(method == Method::Pairwise ? pairwise_arcs(g.points_) : grid_arcs(g.points_));
  return g;
}

void TransmissionGraph::set_arcs(std::vector<std::vector<NodeId>> out_lists) {
  const std::size_t n = points_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + static_cast<std::uint32_t>(out_lists[v].size());
    for (NodeId w : out_lists[v]) ++in_offsets_[w + 1];
  }
  for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
  out_targets_.resize(out_offsets_[n]);
  in_targets_.resize(out_offsets_[n]);
  std::vector<std::uint32_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Walking sources in ascending order keeps every in-list sorted.
  for (std::size_t v = 0; v < n; ++v) {
    std::copy(out_lists[v].begin(), out_lists[v].end(), out_targets_.begin() + out_offsets_[v]);
    for (NodeId w : out_lists[v]) in_targets_[fill[w]++] = static_cast<NodeId>(v);
  }
}

bool TransmissionGraph::has_arc(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  const auto succ = out(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

void TransmissionGraph::check_node(NodeId v) const {
  if (v >= points_.size()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v));
}

TransmissionGraph TransmissionGraph::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> local(points_.size(), kUnreached);
  TransmissionGraph sub;
  sub.points_.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    check_node(nodes[k]);
    if (local[nodes[k]] != kUnreached) throw Error(ErrorCode::DuplicateId, "node listed twice");
    local[nodes[k]] = static_cast<NodeId>(k);
    const auto& p = points_[nodes[k]];
    sub.points_.emplace_back(static_cast<NodeId>(k), p.pos, p.radius);
  }
  std::vector<std::vector<NodeId>> out_lists(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (NodeId w : out(nodes[k])) {
      if (local[w] != kUnreached) out_lists[k].push_back(local[w]);
    }
    std::sort(out_lists[k].begin(), out_lists[k].end());
  }
  sub.set_arcs(std::move(out_lists));
  return sub;
}

TransmissionGraph build_graph(std::vector<TransmissionPoint> points) {
  return TransmissionGraph::build(std::move(points));
}

void bfs_distances(const TransmissionGraph& g, NodeId source, Direction dir,
                   std::vector<std::uint32_t>& dist) {
  g.check_node(source);
  dist.assign(g.size(), kUnreached);
  std::vector<NodeId> frontier{source}, next;
  dist[source] = 0;
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId v : frontier) {
      for (NodeId w : g.neighbors(v, dir)) {
        if (dist[w] == kUnreached) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
}

HopDistance hop_distance_bfs(const TransmissionGraph& g, NodeId s, NodeId t) {
  g.check_node(t);
  std::vector<std::uint32_t> dist;
  bfs_distances(g, s, Direction::Forward, dist);
  return dist[t] == kUnreached ? HopDistance::unreachable() : HopDistance(dist[t]);
}

std::vector<HopDistance> all_hop_distances(const TransmissionGraph& g, NodeId source, Direction dir) {
  std::vector<std::uint32_t> dist;
  bfs_distances(g, source, dir, dist);
  std::vector<HopDistance> result;
  result.reserve(dist.size());
  for (std::uint32_t d : dist) result.push_back(d == kUnreached ? HopDistance::unreachable() : HopDistance(d));
  return result;
}

Condensation condense(const TransmissionGraph& g) {
  // Iterative Tarjan. Components come out sinks first; they are renumbered
  // afterwards so that ids follow a topological order.
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnvisited = kUnreached;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::uint32_t>> call;  // node, next successor slot
  std::uint32_t next_index = 0, found = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto succ = g.out(v);
      if (slot < succ.size()) {
        const NodeId w = succ[slot++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          call.emplace_back(w, 0);
        } else if (comp[w] == kUnvisited) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = found;
        } while (w != done);
        ++found;
      }
    }
  }

  Condensation c;
  c.component_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.component_of[v] = found - 1 - comp[v];

  std::vector<std::vector<std::uint32_t>> succ(found);
  for (NodeId v = 0; v < n; ++v) {
    const std::uint32_t cv = c.component_of[v];
    for (NodeId w : g.out(v)) {
      if (c.component_of[w] != cv) succ[cv].push_back(c.component_of[w]);
    }
  }
  c.dag_offsets.assign(found + 1, 0);
  for (std::uint32_t k = 0; k < found; ++k) {
    std::sort(succ[k].begin(), succ[k].end());
    succ[k].erase(std::unique(succ[k].begin(), succ[k].end()), succ[k].end());
    c.dag_offsets[k + 1] = c.dag_offsets[k] + static_cast<std::uint32_t>(succ[k].size());
    c.dag_targets.insert(c.dag_targets.end(), succ[k].begin(), succ[k].end());
  }
  return c;
}

std::vector<Label> propagate_labels(const Condensation& c, std::span<const Label> labels,
                                    LabelMode mode, Direction dir) {
  if (labels.size() != c.component_of.size()) {
    throw Error(ErrorCode::InvalidArgument, "one label per node expected");
  }
  const bool is_min = mode == LabelMode::Min;
  auto better = [is_min](Label a, Label b) { return is_min ? std::min(a, b) : std::max(a, b); };
  const std::size_t comps = c.component_count();
  std::vector<Label> best(comps, is_min ? kPlusInfinity : kMinusInfinity);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    best[c.component_of[v]] = better(best[c.component_of[v]], labels[v]);
  }
  if (dir == Direction::Forward) {
    for (std::size_t k = comps; k-- > 0;) {
      for (std::uint32_t w : c.successors(static_cast<std::uint32_t>(k))) best[k] = better(best[k], best[w]);
    }
  } else {
    for (std::uint32_t k = 0; k < comps; ++k) {
      for (std::uint32_t w : c.successors(k)) best[w] = better(best[w], best[k]);
    }
  }
  std::vector<Label> result(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) result[v] = best[c.component_of[v]];
  return result;
}

std::vector<Label> min_label_reach(const TransmissionGraph& g, std::span<const Label> labels,
                                   LabelMode mode, Direction dir) {
  return propagate_labels(condense(g), labels, mode, dir);
}

}  // namespace tgraph
