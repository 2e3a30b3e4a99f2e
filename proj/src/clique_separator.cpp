#include "tgraph/clique_separator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tgraph/simd.hpp"
#include "tgraph/uniform_grid.hpp"

namespace tgraph {

namespace {

// Constants below are in units where H_0 has half edge 1 (edge 2).
constexpr double kLargeRadius = 0.125;  // diameter >= 1/4
constexpr double kLargeSpacing = 0.125;
// A large disk meeting H(3) contains a ball of radius 1/8 centered in
// H(3 + 1/8); the grid point nearest that center is at most
// 0.125/sqrt(2) away, so indices |i| <= 26 (3.25) suffice.
constexpr int kLargeGridHalf = 26;
constexpr int kLargeGridWidth = 2 * kLargeGridHalf + 1;
constexpr int kSmallestClass = 3;

constexpr std::size_t kBruteForceCandidates = 512;

struct Normalized {
  double x;
  double y;
  double rho;
};

Normalized normalize(const TransmissionPoint& d, const Square& h0) {
  const double h = h0.half_edge();
  return {(d.pos.x() - h0.center().x()) / h, (d.pos.y() - h0.center().y()) / h, d.radius / h};
}

Point denormalize(double x, double y, const Square& h0) {
  const double h = h0.half_edge();
  return Point(h0.center().x() + x * h, h0.center().y() + y * h);
}

// Size class s: rho in [2^(-s-1), 2^(-s)).
int size_class(double rho) {
  int e = 0;
  std::frexp(rho, &e);
  return -e;
}

int max_size_class(std::size_t n) {
  int ceil_log2 = 0;
  while ((std::size_t{1} << ceil_log2) < n) ++ceil_log2;
  return (ceil_log2 + 1) / 2 + 2;
}

bool meets_h3(const Normalized& u) {
  const double zx = std::clamp(u.x, -3.0, 3.0);
  const double zy = std::clamp(u.y, -3.0, 3.0);
  const double dx = u.x - zx, dy = u.y - zy;
  return dx * dx + dy * dy <= u.rho * u.rho;
}

std::optional<std::pair<double, double>> clipped_range(const Normalized& u) {
  auto [lo, hi] = detail::crossing_range(u.x, u.y, u.rho);
  lo = std::max(lo, 1.0);
  hi = std::min(hi, 3.0);
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

struct IndexClique {
  std::vector<std::size_t> members;  // indices into the disk span
  Point stab;
  StabbedClique::Kind kind;
};

// Large disks: stab each with the lattice point (spacing 1/8) it contains that
// the most other large disks also contain.
std::vector<IndexClique> stab_large(std::span<const TransmissionPoint> disks,
                                    const std::vector<std::size_t>& large, const Square& h0) {
  constexpr int kCells = kLargeGridWidth * kLargeGridWidth;
  std::vector<std::vector<int>> contained(large.size());
  std::vector<std::uint32_t> coverage(kCells, 0);
  for (std::size_t k = 0; k < large.size(); ++k) {
    const TransmissionPoint& d = disks[large[k]];
    const Normalized u = normalize(d, h0);
    const auto lo_i = [](double v) { return std::max(-kLargeGridHalf, static_cast<int>(std::ceil(v / kLargeSpacing))); };
    const auto hi_i = [](double v) { return std::min(kLargeGridHalf, static_cast<int>(std::floor(v / kLargeSpacing))); };
    const int i0 = lo_i(u.x - u.rho - kLargeSpacing), i1 = hi_i(u.x + u.rho + kLargeSpacing);
    const int j0 = lo_i(u.y - u.rho - kLargeSpacing), j1 = hi_i(u.y + u.rho + kLargeSpacing);
    for (int j = j0; j <= j1; ++j) {
      for (int i = i0; i <= i1; ++i) {
        if (disk_contains(d.disk(), denormalize(i * kLargeSpacing, j * kLargeSpacing, h0))) {
          const int cell = (j + kLargeGridHalf) * kLargeGridWidth + (i + kLargeGridHalf);
          contained[k].push_back(cell);
          ++coverage[cell];
        }
      }
    }
  }

  std::map<int, IndexClique> by_cell;
  std::vector<IndexClique> orphans;
  for (std::size_t k = 0; k < large.size(); ++k) {
    if (contained[k].empty()) {
      // Not expected for a disk meeting H(3); stab it at its own center.
      orphans.push_back({{large[k]}, disks[large[k]].pos, StabbedClique::Kind::Large});
      continue;
    }
    int best = contained[k].front();
    for (int cell : contained[k]) {
      if (coverage[cell] > coverage[best]) best = cell;
    }
    auto [it, inserted] = by_cell.try_emplace(best);
    if (inserted) {
      const int i = best % kLargeGridWidth - kLargeGridHalf;
      const int j = best / kLargeGridWidth - kLargeGridHalf;
      it->second.stab = denormalize(i * kLargeSpacing, j * kLargeSpacing, h0);
      it->second.kind = StabbedClique::Kind::Large;
    }
    it->second.members.push_back(large[k]);
  }
  std::vector<IndexClique> out;
  for (auto& [cell, clique] : by_cell) out.push_back(std::move(clique));
  for (auto& c : orphans) out.push_back(std::move(c));
  return out;
}

// All candidate cliques over disk indices; large cliques come first.
std::vector<IndexClique> candidate_cliques(std::span<const TransmissionPoint> disks, const Square& h0,
                                           std::size_t* large_count) {
  if (!(h0.half_edge() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "candidate cliques need a square with positive size");
  }
  const int s_max = max_size_class(disks.size());
  std::vector<std::size_t> large;
  std::map<std::tuple<int, long long, long long>, IndexClique> classed;
  std::vector<IndexClique> singles;

  for (std::size_t idx = 0; idx < disks.size(); ++idx) {
    const TransmissionPoint& d = disks[idx];
    const Normalized u = normalize(d, h0);
    if (u.rho >= kLargeRadius && meets_h3(u)) {
      large.push_back(idx);
      continue;
    }
    if (!clipped_range(u)) continue;
    const int s = size_class(u.rho);
    if (s >= kSmallestClass && s <= s_max) {
      const double spacing = std::ldexp(std::sqrt(2.0), -s - 1);
      const long long gi = std::llround(u.x / spacing);
      const long long gj = std::llround(u.y / spacing);
      const Point stab = denormalize(static_cast<double>(gi) * spacing, static_cast<double>(gj) * spacing, h0);
      if (disk_contains(d.disk(), stab)) {
        auto [it, inserted] = classed.try_emplace({s, gi, gj});
        if (inserted) {
          it->second.stab = stab;
          it->second.kind = StabbedClique::Kind::SizeClass;
        }
        it->second.members.push_back(idx);
        continue;
      }
    }
    singles.push_back({{idx}, d.pos, StabbedClique::Kind::Singleton});
  }

  std::vector<IndexClique> out = stab_large(disks, large, h0);
  if (large_count != nullptr) *large_count = out.size();
  for (auto& [key, clique] : classed) out.push_back(std::move(clique));
  for (auto& c : singles) out.push_back(std::move(c));
  return out;
}

std::vector<NodeId> to_ids(std::span<const TransmissionPoint> disks, const std::vector<std::size_t>& idx) {
  std::vector<NodeId> ids;
  ids.reserve(idx.size());
  for (std::size_t i : idx) ids.push_back(disks[i].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

StabbedClique to_public(std::span<const TransmissionPoint> disks, const IndexClique& c) {
  return StabbedClique{to_ids(disks, c.members), c.stab, c.kind};
}

// True when disk d meets the boundary of the square (center c, half edge H),
// with a small slack so that near-tangent disks count as crossing.
bool crosses_boundary(const TransmissionPoint& d, Point c, double half) {
  const double dx = std::abs(d.pos.x() - c.x());
  const double dy = std::abs(d.pos.y() - c.y());
  const double scale = half + d.radius + std::max({std::abs(d.pos.x()), std::abs(d.pos.y()),
                                                   std::abs(c.x()), std::abs(c.y())});
  const double r = d.radius + 1e-9 * scale;
  if (dx <= half && dy <= half) return half - std::max(dx, dy) <= r;
  const double ox = std::max(dx - half, 0.0);
  const double oy = std::max(dy - half, 0.0);
  return ox * ox + oy * oy <= r * r;
}

}  // namespace

std::size_t CliqueSeparator::separator_size() const {
  std::size_t total = 0;
  for (const auto& c : cliques) total += c.member_ids.size();
  return total;
}

std::size_t separator_k_star(std::size_t n) { return std::max<std::size_t>(1, (n + 144) / 145); }

Square centered_k_enclosing_square(std::span<const Point> centers, std::size_t k, Point q) {
  if (k < 1 || k > centers.size()) throw Error(ErrorCode::BadK, "k must lie in 1..n");
  std::vector<double> xs(centers.size()), ys(centers.size()), dist(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    xs[i] = centers[i].x();
    ys[i] = centers[i].y();
  }
  simd::active().chebyshev(xs.data(), ys.data(), xs.size(), q.x(), q.y(), dist.data());
  std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k - 1), dist.end());
  return Square(q, dist[k - 1]);
}

Square approx_smallest_k_enclosing_square(std::span<const Point> centers, std::size_t k) {
  const std::size_t n = centers.size();
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k must lie in 1..n");
  const simd::Kernels& kern = simd::active();
  std::vector<double> xs(n), ys(n), dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = centers[i].x();
    ys[i] = centers[i].y();
  }
  auto exact_half = [&](std::size_t q) {
    kern.chebyshev(xs.data(), ys.data(), n, xs[q], ys[q], dist.data());
    std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k - 1), dist.end());
    return dist[k - 1];
  };

  std::size_t best_q = 0;
  double best = exact_half(0);
  if (n <= kBruteForceCandidates) {
    for (std::size_t q = 1; q < n && best > 0.0; ++q) {
      const double h = exact_half(q);
      if (h < best) {
        best = h;
        best_q = q;
      }
    }
    return Square(centers[best_q], best);
  }

  // Same minimum as the brute force, but candidate q only inspects centers
  // within L-infinity distance `best` of itself: if fewer than k lie there,
  // q cannot improve on the current best.
  for (std::size_t q = n / 4; q < n; q += n / 4) {
    const double h = exact_half(q);
    if (h < best) {
      best = h;
      best_q = q;
    }
  }
  std::optional<UniformGrid> grid;
  std::vector<double> near;
  for (std::size_t q = 0; q < n && best > 0.0; ++q) {
    if (!grid || best < grid->cell_size() / 4.0) grid.emplace(centers, best);
    near.clear();
    grid->for_each_run(xs[q] - best, ys[q] - best, xs[q] + best, ys[q] + best,
                       [&](std::size_t first, std::size_t count) {
                         const std::size_t at = near.size();
                         near.resize(at + count);
                         kern.chebyshev(grid->xs() + first, grid->ys() + first, count, xs[q], ys[q],
                                        near.data() + at);
                         std::size_t keep = at;
                         for (std::size_t i = at; i < at + count; ++i) {
                           if (near[i] <= best) near[keep++] = near[i];
                         }
                         near.resize(keep);
                       });
    if (near.size() < k) continue;
    std::nth_element(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k - 1), near.end());
    if (near[k - 1] < best) {
      best = near[k - 1];
      best_q = q;
    }
  }
  return Square(centers[best_q], best);
}

namespace detail {

std::pair<double, double> crossing_range(double x, double y, double rho) {
  const double a = std::max(std::abs(x), std::abs(y));
  const double b = std::min(std::abs(x), std::abs(y));
  const double hi = a + rho;
  double lo;
  if (a - b > rho) {
    lo = a - rho;  // the nearest part of H(t) is an edge
  } else {
    lo = 0.5 * ((a + b) - std::sqrt(2.0 * rho * rho - (a - b) * (a - b)));  // a corner
  }
  return {std::max(lo, 0.0), hi};
}

}  // namespace detail

std::vector<StabbedClique> build_candidate_cliques(std::span<const TransmissionPoint> disks,
                                                   const Square& h0) {
  std::vector<StabbedClique> out;
  for (const IndexClique& c : candidate_cliques(disks, h0, nullptr)) out.push_back(to_public(disks, c));
  return out;
}

std::optional<CrossingInterval> clique_interval(std::span<const Disk> members, const Square& h0) {
  if (!(h0.half_edge() > 0.0)) return std::nullopt;
  std::optional<CrossingInterval> hull;
  for (const Disk& d : members) {
    const double h = h0.half_edge();
    const Normalized u{(d.center().x() - h0.center().x()) / h, (d.center().y() - h0.center().y()) / h,
                       d.radius() / h};
    const auto range = clipped_range(u);
    if (!range) continue;
    if (!hull) {
      hull = CrossingInterval{range->first, range->second, 0, 1.0};
    } else {
      hull->lo = std::min(hull->lo, range->first);
      hull->hi = std::max(hull->hi, range->second);
    }
  }
  return hull;
}

TStar select_t_star(std::span<const CrossingInterval> intervals) {
  std::vector<double> breaks{1.0, 3.0};
  for (const auto& iv : intervals) {
    breaks.push_back(std::clamp(iv.lo, 1.0, 3.0));
    breaks.push_back(std::clamp(iv.hi, 1.0, 3.0));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<std::size_t> by_lo(intervals.size()), by_hi(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) by_lo[i] = by_hi[i] = i;
  std::sort(by_lo.begin(), by_lo.end(), [&](auto a, auto b) { return intervals[a].lo < intervals[b].lo; });
  std::sort(by_hi.begin(), by_hi.end(), [&](auto a, auto b) { return intervals[a].hi < intervals[b].hi; });

  // Sweep the breakpoints left to right. At breakpoint b: `started` holds
  // intervals with lo <= b; `ended_before` those with hi < b; `ended_at` those
  // with hi <= b. The point b is covered by started - ended_before, the open
  // gap right of b by started - ended_at.
  double started_w = 0.0, ended_w = 0.0;
  std::size_t started_n = 0, ended_before_n = 0, ended_at_n = 0;
  std::size_t lo_pos = 0, hi_pos = 0;
  bool have = false;
  TStar best;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double b = breaks[k];
    while (lo_pos < by_lo.size() && intervals[by_lo[lo_pos]].lo <= b) {
      started_w += intervals[by_lo[lo_pos]].weight;
      ++started_n;
      ++lo_pos;
    }
    ended_before_n = hi_pos;
    while (hi_pos < by_hi.size() && intervals[by_hi[hi_pos]].hi <= b) {
      ended_w += intervals[by_hi[hi_pos]].weight;
      ++hi_pos;
    }
    ended_at_n = hi_pos;
    const double gap_w = started_w - ended_w;
    if (!have || gap_w < best.weight) {
      have = true;
      const bool point_matches = (started_n - ended_before_n) == (started_n - ended_at_n);
      best.t = point_matches ? b : 0.5 * (b + breaks[k + 1]);
      best.weight = gap_w;
    }
  }
  return best;
}

CliqueSeparator build_separator(std::span<const TransmissionPoint> disks, const CliqueWeightFn& weight_fn) {
  const std::size_t n = disks.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a separator needs at least two disks");
  const CliqueWeightFn gamma = weight_fn ? weight_fn : [](std::size_t) { return 1.0; };

  std::vector<Point> centers;
  centers.reserve(n);
  for (const auto& d : disks) centers.push_back(d.pos);
  const std::size_t k_star = separator_k_star(n);

  CliqueSeparator sep;
  sep.h0 = approx_smallest_k_enclosing_square(centers, k_star);
  std::vector<char> in_separator(n, 0);

  if (sep.h0.half_edge() == 0.0) {
    // At least k* coincident centers: peel off every disk through that point.
    sep.degenerate = true;
    IndexClique all{{}, sep.h0.center(), StabbedClique::Kind::Fallback};
    for (std::size_t i = 0; i < n; ++i) {
      if (disk_contains(disks[i].disk(), sep.h0.center())) {
        all.members.push_back(i);
        in_separator[i] = 1;
      } else {
        sep.part_a.push_back(disks[i].id);
      }
    }
    sep.cliques.push_back(to_public(disks, all));
    sep.weight = gamma(all.members.size());
    std::sort(sep.part_a.begin(), sep.part_a.end());
    return sep;
  }

  std::size_t large_count = 0;
  std::vector<IndexClique> candidates = candidate_cliques(disks, sep.h0, &large_count);
  std::vector<CrossingInterval> intervals;
  std::vector<Disk> member_disks;
  for (std::size_t c = large_count; c < candidates.size(); ++c) {
    member_disks.clear();
    for (std::size_t i : candidates[c].members) member_disks.push_back(disks[i].disk());
    if (auto iv = clique_interval(member_disks, sep.h0)) {
      iv->clique_ref = static_cast<std::uint32_t>(c);
      iv->weight = gamma(candidates[c].members.size());
      intervals.push_back(*iv);
    }
  }
  sep.t_star = select_t_star(intervals).t;

  std::vector<IndexClique> chosen(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(large_count));
  for (const auto& iv : intervals) {
    if (iv.contains(sep.t_star)) chosen.push_back(candidates[iv.clique_ref]);
  }
  for (const auto& c : chosen) {
    for (std::size_t i : c.members) in_separator[i] = 1;
  }

  const double half = sep.t_star * sep.h0.half_edge();
  const Point c0 = sep.h0.center();
  for (std::size_t i = 0; i < n; ++i) {
    if (in_separator[i]) continue;
    const TransmissionPoint& d = disks[i];
    if (crosses_boundary(d, c0, half)) {
      // Rounding left this disk out of every chosen clique.
      chosen.push_back({{i}, d.pos, StabbedClique::Kind::Singleton});
      in_separator[i] = 1;
      continue;
    }
    const bool inside = std::abs(d.pos.x() - c0.x()) <= half && std::abs(d.pos.y() - c0.y()) <= half;
    (inside ? sep.part_a : sep.part_b).push_back(d.id);
  }
  std::sort(sep.part_a.begin(), sep.part_a.end());
  std::sort(sep.part_b.begin(), sep.part_b.end());

  for (const auto& c : chosen) {
    sep.cliques.push_back(to_public(disks, c));
    sep.weight += gamma(c.members.size());
  }

  const std::size_t bound = (144 * n + 144) / 145;
  if (sep.part_a.size() > bound || sep.part_b.size() > bound) {
    throw std::logic_error("clique separator violates the 144/145 balance bound");
  }
  return sep;
}

}  // namespace tgraph
