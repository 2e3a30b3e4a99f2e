#pragma once

// Balanced clique-based separator for a set of disks.
//
// Step 1 finds a 2-approximate smallest k*-enclosing square H_0 of the disk
// centers (k* = ceil(n/145)). Step 2 groups every disk that can meet the
// boundary of H(t) = t * H_0, t in [1, 3], into stabbed cliques, computes for
// each clique the interval of t for which dH(t) meets it, and picks the t*
// with minimum total clique weight. Disks inside H(t*) form part A, the rest
// part B; no disk of A intersects a disk of B.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph {

struct StabbedClique {
  enum class Kind {
    Large,      // radius >= 1/8 in H_0-normalized units, meets H(3)
    SizeClass,  // grouped around a grid point of its size class
    Singleton,  // below the smallest size class, or a boundary fix-up
    Fallback,   // degenerate H_0: all disks through the common center
  };

  std::vector<NodeId> member_ids;
  Point stab_point;
  Kind kind = Kind::Singleton;
};

struct CrossingInterval {
  double lo = 1.0;
  double hi = 3.0;
  std::uint32_t clique_ref = 0;
  double weight = 1.0;

  bool contains(double t) const { return lo <= t && t <= hi; }
};

struct CliqueSeparator {
  std::vector<StabbedClique> cliques;
  std::vector<NodeId> part_a;  // disks strictly inside H(t*)
  std::vector<NodeId> part_b;  // disks strictly outside H(t*)
  Square h0{Point(), 0.0};
  double t_star = 1.0;
  double weight = 0.0;  // sum of the weight function over `cliques`
  bool degenerate = false;

  std::size_t separator_size() const;
};

using CliqueWeightFn = std::function<double(std::size_t)>;

/// Square centered at q whose half edge is the k-th smallest L-infinity
/// distance from q to the centers. Throws BadK unless 1 <= k <= |centers|.
Square centered_k_enclosing_square(std::span<const Point> centers, std::size_t k, Point q);

/// Smallest centered_k_enclosing_square over all centers as candidate q.
/// Its edge is at most twice that of a smallest k-enclosing square.
Square approx_smallest_k_enclosing_square(std::span<const Point> centers, std::size_t k);

/// Cliques covering every disk that is large or meets dH(t) for some t in
/// [1, 3]; each such disk lands in exactly one clique. Member ids are the
/// `id` fields of the disks. Requires h0.half_edge() > 0.
std::vector<StabbedClique> build_candidate_cliques(std::span<const TransmissionPoint> disks,
                                                   const Square& h0);

/// t-interval, clipped to [1, 3], on which dH(t) meets the union of `members`
/// (hull of the per-disk intervals). nullopt when it never does.
std::optional<CrossingInterval> clique_interval(std::span<const Disk> members, const Square& h0);

struct TStar {
  double t = 1.0;
  double weight = 0.0;
};

/// t in [1, 3] minimizing the weight of intervals containing t; ties go to the
/// smallest such t (or the midpoint of the first minimizing gap when its
/// infimum is not attained).
TStar select_t_star(std::span<const CrossingInterval> intervals);

/// Requires |disks| >= 2. The default weight function counts cliques.
CliqueSeparator build_separator(std::span<const TransmissionPoint> disks,
                                const CliqueWeightFn& weight_fn = {});

/// k* used by build_separator for n disks.
std::size_t separator_k_star(std::size_t n);

namespace detail {

/// [lo, hi] (unclipped) of t >= 0 for which the boundary of the square of
/// half edge t centered at the origin meets the disk with center (x, y) and
/// radius rho. lo is 0 when the disk covers the origin.
std::pair<double, double> crossing_range(double x, double y, double rho);

}  // namespace detail

}  // namespace tgraph
