#include "tgraph/continuous_query.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tgraph/simd.hpp"

namespace tgraph {

namespace {

constexpr std::size_t kScanLeaves = 32;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::shared_ptr<const RadiusOrder> make_order(std::span<const TransmissionPoint> pts) {
  auto order = std::make_shared<RadiusOrder>();
  order->points.assign(pts.begin(), pts.end());
  std::sort(order->points.begin(), order->points.end(), [](const auto& a, const auto& b) {
    return a.radius != b.radius ? a.radius < b.radius : a.id < b.id;
  });
  for (const auto& p : order->points) {
    order->xs.push_back(p.pos.x());
    order->ys.push_back(p.pos.y());
    order->r2.push_back(p.radius * p.radius);
  }
  return order;
}

}  // namespace

SectorTree::SectorTree(ConeIndex cone, std::shared_ptr<const RadiusOrder> order)
    : cone_(cone), order_(std::move(order)) {
  const std::size_t n = order_->points.size();
  const std::size_t slots = 4 * std::max<std::size_t>(n, 1);
  lo_.assign(slots, 0);
  hi_.assign(slots, 0);
  boxes_.assign(slots, Box{kInfinity, kInfinity, -kInfinity, -kInfinity});
  if (n == 0) return;

  // t is in the sector of p iff p - t lies in cone i within distance r, so the
  // sector is p minus the cone's wedge of radius r. Its box is spanned by the
  // apex, the two wedge corners and any axis direction inside the wedge.
  const double a0 = (cone.value() - 1) * std::numbers::pi / 3.0;
  const double a1 = cone.value() * std::numbers::pi / 3.0;
  std::vector<std::pair<double, double>> dirs{{0.0, 0.0}, {std::cos(a0), std::sin(a0)}, {std::cos(a1), std::sin(a1)}};
  for (int k = 0; k < 4; ++k) {
    const double a = k * std::numbers::pi / 2.0;
    if (a > a0 && a < a1) dirs.emplace_back(std::cos(a), std::sin(a));
  }
  auto leaf_box = [&](const TransmissionPoint& p) {
    Box b{kInfinity, kInfinity, -kInfinity, -kInfinity};
    for (const auto& [ux, uy] : dirs) {
      const double x = p.pos.x() - p.radius * ux;
      const double y = p.pos.y() - p.radius * uy;
      b = {std::min(b.x0, x), std::min(b.y0, y), std::max(b.x1, x), std::max(b.y1, y)};
    }
    const double margin = 1e-9 * (p.radius + std::abs(p.pos.x()) + std::abs(p.pos.y()));
    return Box{b.x0 - margin, b.y0 - margin, b.x1 + margin, b.y1 + margin};
  };

  // Post-order fill: ranges top-down, boxes bottom-up.
  auto fill = [&](auto&& self, NodeRef v, std::size_t first, std::size_t last) -> Box {
    lo_[v] = static_cast<std::uint32_t>(first);
    hi_[v] = static_cast<std::uint32_t>(last);
    Box box;
    if (last - first == 1) {
      box = leaf_box(order_->points[first]);
    } else {
      const std::size_t mid = first + (last - first) / 2;
      const Box l = self(self, left(v), first, mid);
      const Box r = self(self, right(v), mid, last);
      box = {std::min(l.x0, r.x0), std::min(l.y0, r.y0), std::max(l.x1, r.x1), std::max(l.y1, r.y1)};
    }
    boxes_[v] = box;
    return box;
  };
  fill(fill, root(), 0, n);
}

bool SectorTree::box_hit(NodeRef v, Point t) const {
  const Box& b = boxes_[v];
  return b.x0 <= t.x() && t.x() <= b.x1 && b.y0 <= t.y() && t.y() <= b.y1;
}

std::size_t SectorTree::scan(std::size_t first, std::size_t last, Point t) const {
  const std::size_t hit = simd::active().first_sector_hit(order_->xs.data() + first, order_->ys.data() + first,
                                                          order_->r2.data() + first, last - first, t.x(),
                                                          t.y(), cone_.value());
  return first + hit;
}

bool SectorTree::membership(NodeRef v, Point t) const {
  if (!valid(v) || !box_hit(v, t)) return false;
  if (hi_[v] - lo_[v] <= kScanLeaves) return scan(lo_[v], hi_[v], t) < hi_[v];
  return membership(left(v), t) || membership(right(v), t);
}

std::optional<std::size_t> SectorTree::descend(Point t) const {
  auto find = [&](auto&& self, NodeRef v) -> std::optional<std::size_t> {
    if (!valid(v) || !box_hit(v, t)) return std::nullopt;
    if (hi_[v] - lo_[v] <= kScanLeaves) {
      const std::size_t hit = scan(lo_[v], hi_[v], t);
      return hit < hi_[v] ? std::optional(hit) : std::nullopt;
    }
    if (auto hit = self(self, left(v))) return hit;
    return self(self, right(v));
  };
  return find(find, root());
}

ContinuousIndex::ContinuousIndex(std::span<const TransmissionPoint> pts) {
  const auto order = make_order(pts);
  for (int i = 1; i <= ConeIndex::kCount; ++i) trees_.emplace_back(ConeIndex(i), order);
}

ContinuousIndex build_continuous_index(std::span<const TransmissionPoint> pts) { return ContinuousIndex(pts); }

bool node_membership(const SectorTree& tree, SectorTree::NodeRef v, Point t) { return tree.membership(v, t); }

std::vector<TransmissionPoint> query_candidates(const ContinuousIndex& idx, Point t) {
  std::vector<TransmissionPoint> q;
  for (int i = 1; i <= ConeIndex::kCount; ++i) {
    const SectorTree& tree = idx.tree(ConeIndex(i));
    if (auto leaf = tree.descend(t)) q.push_back(tree.leaf(*leaf));
  }
  return q;
}

bool query_continuous_reach(const ReachabilityOracle& r, const ContinuousIndex& idx, NodeId s, Point t) {
  if (s >= r.size()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(s));
  for (const auto& q : query_candidates(idx, t)) {
    if (r.query(s, q.id)) return true;
  }
  return false;
}

double query_continuous_dist(const DistanceOracle& d, const ContinuousIndex& idx, NodeId s, Point t) {
  if (s >= d.size()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(s));
  double best = kInfinity;
  for (const auto& q : query_candidates(idx, t)) best = std::min(best, d.query(s, q.id) + 1.0);
  return best;
}

}  // namespace tgraph
