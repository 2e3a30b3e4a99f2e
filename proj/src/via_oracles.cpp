#include "tgraph/via_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace tgraph {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr int kStabGridHalf = 3;  // 7x7 candidates

std::vector<TransmissionPoint> points_of(const TransmissionGraph& g, std::span<const NodeId> ids) {
  std::vector<TransmissionPoint> pts;
  pts.reserve(ids.size());
  for (NodeId id : ids) {
    g.check_node(id);
    pts.push_back(g.point(id));
  }
  return pts;
}

}  // namespace

std::vector<TransitivePath> decompose_stabbed_clique(std::span<const TransmissionPoint> members,
                                                     Point x_c) {
  std::array<std::vector<const TransmissionPoint*>, ConeIndex::kCount> cones;
  for (const auto& m : members) {
    if (!disk_contains(m.disk(), x_c)) {
      throw Error(ErrorCode::NotStabbed, "member " + std::to_string(m.id) + " misses the stab point");
    }
    cones[cone_of_offset(m.pos.x() - x_c.x(), m.pos.y() - x_c.y()) - 1].push_back(&m);
  }
  std::vector<TransitivePath> paths;
  for (auto& cone : cones) {
    if (cone.empty()) continue;
    std::sort(cone.begin(), cone.end(), [](const TransmissionPoint* a, const TransmissionPoint* b) {
      return a->radius != b->radius ? a->radius > b->radius : a->id < b->id;
    });
    TransitivePath path;
    for (const auto* m : cone) path.node_ids.push_back(m->id);
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<StabGroup> stab_general_clique(std::span<const TransmissionPoint> members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!disks_intersect(members[a].disk(), members[b].disk())) {
        throw Error(ErrorCode::NotAClique, "disks " + std::to_string(members[a].id) + " and " +
                                               std::to_string(members[b].id) + " are disjoint");
      }
    }
  }
  if (members.empty()) return {};
  const auto smallest = std::min_element(members.begin(), members.end(), [](const auto& a, const auto& b) {
    return a.radius != b.radius ? a.radius < b.radius : a.id < b.id;
  });
  const double r0 = smallest->radius;
  const Point c0 = smallest->pos;

  std::vector<Point> candidates;
  for (int j = -kStabGridHalf; j <= kStabGridHalf; ++j) {
    for (int i = -kStabGridHalf; i <= kStabGridHalf; ++i) {
      candidates.emplace_back(c0.x() + i * r0, c0.y() + j * r0);
    }
  }
  std::vector<StabGroup> groups;
  std::vector<int> group_of(candidates.size(), -1);
  for (const auto& m : members) {
    std::size_t c = 0;
    while (c < candidates.size() && !disk_contains(m.disk(), candidates[c])) ++c;
    if (c == candidates.size()) {
      // Only reachable through rounding at the grid's edge.
      groups.push_back({m.pos, {m}});
      continue;
    }
    if (group_of[c] < 0) {
      group_of[c] = static_cast<int>(groups.size());
      groups.push_back({candidates[c], {}});
    }
    groups[static_cast<std::size_t>(group_of[c])].members.push_back(m);
  }
  return groups;
}

bool is_transitive(const TransmissionGraph& g, const TransitivePath& path) {
  const auto& ids = path.node_ids;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (!g.has_arc(ids[a], ids[b])) return false;
    }
  }
  return true;
}

ViaPathReachOracle ViaPathReachOracle::build(const TransmissionGraph& g, const TransitivePath& path) {
  const Condensation cond = condense(g);
  std::vector<Label> min_labels(g.size(), kPlusInfinity);
  std::vector<Label> max_labels(g.size(), kMinusInfinity);
  for (std::size_t i = 0; i < path.node_ids.size(); ++i) {
    g.check_node(path.node_ids[i]);
    min_labels[path.node_ids[i]] = static_cast<Label>(i + 1);
    max_labels[path.node_ids[i]] = static_cast<Label>(i + 1);
  }
  ViaPathReachOracle o;
  o.min_in_ = propagate_labels(cond, min_labels, LabelMode::Min, Direction::Forward);
  o.max_out_ = propagate_labels(cond, max_labels, LabelMode::Max, Direction::Reverse);
  return o;
}

std::vector<double> level_thresholds(double eps, std::size_t n) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  const double base = 1.0 + eps;
  std::vector<double> th{1.0 / base};
  const double target = static_cast<double>(std::max<std::size_t>(n, 1));
  for (int j = 0;; ++j) {
    th.push_back(std::pow(base, j));
    if (th.back() >= target) break;
  }
  return th;
}

std::size_t level_slot(std::span<const double> thresholds, std::uint32_t hops) {
  const double d = static_cast<double>(hops);
  return static_cast<std::size_t>(std::lower_bound(thresholds.begin(), thresholds.end(), d) - thresholds.begin());
}

double scan_level_pairs(std::span<const Label> min_in, std::span<const Label> max_out,
                        std::span<const double> thresholds) {
  const std::size_t levels = thresholds.size();
  double best = kInfinity;
  // k is the smallest slot feasible for the current j; it only moves down as j grows.
  std::size_t k = levels;
  for (std::size_t j = 0; j < levels; ++j) {
    while (k > 0 && min_in[j] <= max_out[k - 1]) --k;
    if (k < levels) best = std::min(best, thresholds[j] + thresholds[k] + 1.0);
  }
  return best;
}

void fill_via_path_levels(const TransmissionGraph& g, const TransitivePath& path,
                          std::span<const double> thresholds, std::span<Label> min_in,
                          std::span<Label> max_out, std::size_t stride, std::size_t offset) {
  const std::size_t levels = thresholds.size();
  const std::size_t n = g.size();
  for (std::size_t p = 0; p < n; ++p) {
    std::fill_n(min_in.begin() + static_cast<std::ptrdiff_t>(p * stride + offset), levels, kPlusInfinity);
    std::fill_n(max_out.begin() + static_cast<std::ptrdiff_t>(p * stride + offset), levels, kMinusInfinity);
  }
  std::vector<std::uint32_t> dist;
  for (std::size_t i = 0; i < path.node_ids.size(); ++i) {
    const Label index = static_cast<Label>(i + 1);
    bfs_distances(g, path.node_ids[i], Direction::Reverse, dist);  // dist[p] = d(p, q_i)
    for (std::size_t p = 0; p < n; ++p) {
      if (dist[p] == kUnreached) continue;
      const std::size_t slot = level_slot(thresholds, dist[p]);
      if (slot == levels) continue;
      Label& cell = min_in[p * stride + offset + slot];
      cell = std::min(cell, index);
    }
    bfs_distances(g, path.node_ids[i], Direction::Forward, dist);  // dist[p] = d(q_i, p)
    for (std::size_t p = 0; p < n; ++p) {
      if (dist[p] == kUnreached) continue;
      const std::size_t slot = level_slot(thresholds, dist[p]);
      if (slot == levels) continue;
      Label& cell = max_out[p * stride + offset + slot];
      cell = std::max(cell, index);
    }
  }
  // Each entry so far covers exactly its level; widen to "within the budget".
  for (std::size_t p = 0; p < n; ++p) {
    Label* lo = &min_in[p * stride + offset];
    Label* hi = &max_out[p * stride + offset];
    for (std::size_t j = 1; j < levels; ++j) {
      lo[j] = std::min(lo[j], lo[j - 1]);
      hi[j] = std::max(hi[j], hi[j - 1]);
    }
  }
}

ViaPathDistOracle ViaPathDistOracle::build(const TransmissionGraph& g, const TransitivePath& path,
                                           double eps) {
  ViaPathDistOracle o;
  o.eps_ = eps;
  o.thresholds_ = level_thresholds(eps, g.size());
  const std::size_t levels = o.thresholds_.size();
  o.min_in_.resize(g.size() * levels);
  o.max_out_.resize(g.size() * levels);
  for (NodeId id : path.node_ids) g.check_node(id);
  fill_via_path_levels(g, path, o.thresholds_, o.min_in_, o.max_out_, levels, 0);
  return o;
}

std::span<const Label> ViaPathDistOracle::row(const std::vector<Label>& table, NodeId p) const {
  const std::size_t levels = thresholds_.size();
  if (static_cast<std::size_t>(p) * levels >= table.size()) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(p));
  }
  return {table.data() + static_cast<std::size_t>(p) * levels, levels};
}

double ViaPathDistOracle::query(NodeId s, NodeId t) const {
  return scan_level_pairs(row(min_in_, s), row(max_out_, t), thresholds_);
}

ViaCliqueOracle ViaCliqueOracle::build(const TransmissionGraph& g, std::span<const NodeId> members,
                                       std::optional<Point> stab_point, ViaMode mode, double eps) {
  ViaCliqueOracle o;
  o.mode_ = mode;
  const std::vector<TransmissionPoint> pts = points_of(g, members);
  if (stab_point) {
    o.paths_ = decompose_stabbed_clique(pts, *stab_point);
  } else {
    for (const StabGroup& group : stab_general_clique(pts)) {
      for (auto& path : decompose_stabbed_clique(group.members, group.stab_point)) {
        o.paths_.push_back(std::move(path));
      }
    }
  }
  for (const auto& path : o.paths_) {
    if (mode == ViaMode::Reach) {
      o.reach_.push_back(ViaPathReachOracle::build(g, path));
    } else {
      o.dist_.push_back(ViaPathDistOracle::build(g, path, eps));
    }
  }
  return o;
}

bool ViaCliqueOracle::query_reach(NodeId s, NodeId t) const {
  if (mode_ != ViaMode::Reach) throw Error(ErrorCode::InvalidArgument, "oracle was built in dist mode");
  return std::any_of(reach_.begin(), reach_.end(), [&](const auto& o) { return o.query(s, t); });
}

double ViaCliqueOracle::query_dist(NodeId s, NodeId t) const {
  if (mode_ != ViaMode::Dist) throw Error(ErrorCode::InvalidArgument, "oracle was built in reach mode");
  double best = kInfinity;
  for (const auto& o : dist_) best = std::min(best, o.query(s, t));
  return best;
}

std::variant<bool, double> query_via_clique(const ViaCliqueOracle& o, NodeId s, NodeId t, ViaMode mode) {
  if (mode == ViaMode::Reach) return o.query_reach(s, t);
  return o.query_dist(s, t);
}

}  // namespace tgraph
