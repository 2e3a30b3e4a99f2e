#include "tgraph/harness/fuzz.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "tgraph/continuous_query.hpp"
#include "tgraph/distance_oracle.hpp"
#include "tgraph/reachability_oracle.hpp"
#include "tgraph/transmission_graph.hpp"

namespace tgraph::harness {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr std::array<double, 4> kPsi{1.0, 2.0, 10.0, 1e4};
constexpr std::array<std::size_t, 4> kCutoffs{1, 4, 16, 64};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void note(TrialResult& r, const std::string& what) {
  if (r.first_failure.empty()) r.first_failure = what;
}

std::string pair_text(NodeId s, NodeId t) {
  return "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

}  // namespace

bool TrialResult::ok() const {
  return reach_mismatches == 0 && dist_violations == 0 && inf_mismatches == 0 && candidate_violations == 0 &&
         radius_mismatches == 0 && candidate_gap_violations == 0 && creach_mismatches == 0 && cdist_violations == 0;
}

TrialResult& TrialResult::operator+=(const TrialResult& o) {
  pairs += o.pairs;
  reach_mismatches += o.reach_mismatches;
  dist_checks += o.dist_checks;
  dist_violations += o.dist_violations;
  inf_mismatches += o.inf_mismatches;
  tight_total += o.tight_total;
  tight_hits += o.tight_hits;
  target_checks += o.target_checks;
  candidate_violations += o.candidate_violations;
  radius_mismatches += o.radius_mismatches;
  candidate_gap_violations += o.candidate_gap_violations;
  creach_mismatches += o.creach_mismatches;
  cdist_violations += o.cdist_violations;
  if (first_failure.empty()) first_failure = o.first_failure;
  return *this;
}

TrialResult check_instance(const Instance& inst, const TrialOptions& options) {
  TrialResult r;
  const auto& pts = inst.points;
  const std::size_t n = pts.size();
  const TransmissionGraph g = TransmissionGraph::build(pts);
  std::vector<std::vector<std::uint32_t>> apsp(n);
  for (NodeId s = 0; s < n; ++s) bfs_distances(g, s, Direction::Forward, apsp[s]);

  const ReachabilityOracle reach = build_reach_oracle(pts, options.base_cutoff);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = 0; t < n; ++t) {
      ++r.pairs;
      if (reach.query(s, t) != (apsp[s][t] != kUnreached)) {
        ++r.reach_mismatches;
        note(r, "reach mismatch at " + pair_text(s, t));
      }
    }
  }

  std::vector<DistanceOracle> dist;
  for (double eps : options.eps) dist.push_back(build_dist_oracle(pts, eps, options.base_cutoff));
  for (const DistanceOracle& d : dist) {
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        ++r.dist_checks;
        const double got = d.query(s, t);
        if (apsp[s][t] == kUnreached) {
          if (got != kInfinity) {
            ++r.inf_mismatches;
            note(r, "finite distance for unreachable " + pair_text(s, t));
          }
          continue;
        }
        const double exact = apsp[s][t];
        if (got == kInfinity) {
          ++r.inf_mismatches;
          note(r, "infinite distance for reachable " + pair_text(s, t));
          continue;
        }
        if (got < exact || got > (1.0 + d.eps()) * exact + 2.0) {
          ++r.dist_violations;
          std::ostringstream msg;
          msg << "sandwich violated at " << pair_text(s, t) << " eps=" << d.eps() << ": d=" << exact
              << " got=" << got;
          note(r, msg.str());
        }
        if (s != t) {
          ++r.tight_total;
          if (got <= (1.0 + d.eps()) * exact + 1.0) ++r.tight_hits;
        }
      }
    }
  }

  if (options.targets == 0 || n == 0) return r;
  const ContinuousIndex idx(pts);
  double x0 = kInfinity, y0 = kInfinity, x1 = -kInfinity, y1 = -kInfinity;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.pos.x() - p.radius);
    y0 = std::min(y0, p.pos.y() - p.radius);
    x1 = std::max(x1, p.pos.x() + p.radius);
    y1 = std::max(y1, p.pos.y() + p.radius);
  }
  std::mt19937_64 rng(splitmix(options.target_seed));
  auto coord = [&](double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  for (std::size_t k = 0; k < options.targets; ++k) {
    // Every fourth target sits on a site, exercising the coincident case.
    const Point t = k % 4 == 3 ? pts[rng() % n].pos : Point(std::round(coord(x0, x1)), std::round(coord(y0, y1)));
    ++r.target_checks;
    const auto q = query_candidates(idx, t);
    bool bad = q.size() > 6;
    for (const auto& c : q) bad = bad || !disk_contains(c.disk(), t);
    if (bad) {
      ++r.candidate_violations;
      note(r, "bad candidate set");
    }
    for (int i = 1; i <= ConeIndex::kCount; ++i) {
      const ConeIndex cone(i);
      double scan_min = kInfinity;
      for (const auto& p : pts) {
        if (sector_contains(p, cone, t)) scan_min = std::min(scan_min, p.radius);
      }
      const SectorTree& tree = idx.tree(cone);
      const auto leaf = tree.descend(t);
      const double tree_min = leaf ? tree.leaf(*leaf).radius : kInfinity;
      if (tree_min != scan_min) {
        ++r.radius_mismatches;
        note(r, "cone " + std::to_string(i) + " minimum radius differs from the linear scan");
      }
    }

    for (NodeId s = 0; s < n; ++s) {
      double truth = kInfinity;
      for (const auto& p : pts) {
        if (disk_contains(p.disk(), t) && apsp[s][p.id] != kUnreached) truth = std::min(truth, apsp[s][p.id] + 1.0);
      }
      double via_q = kInfinity;
      for (const auto& c : q) {
        if (apsp[s][c.id] != kUnreached) via_q = std::min(via_q, apsp[s][c.id] + 1.0);
      }
      if ((truth == kInfinity) != (via_q == kInfinity) || (truth != kInfinity && (via_q < truth || via_q > truth + 1.0))) {
        ++r.candidate_gap_violations;
        note(r, "candidate set misses the continuous distance for source " + std::to_string(s));
      }
      if (query_continuous_reach(reach, idx, s, t) != (truth != kInfinity)) {
        ++r.creach_mismatches;
        note(r, "continuous reach mismatch for source " + std::to_string(s));
      }
      for (const DistanceOracle& d : dist) {
        const double got = query_continuous_dist(d, idx, s, t);
        const bool fine = truth == kInfinity ? got == kInfinity
                                             : got >= truth && got <= (1.0 + d.eps()) * truth + 3.0;
        if (!fine) {
          ++r.cdist_violations;
          note(r, "continuous distance outside its bounds for source " + std::to_string(s));
        }
      }
    }
  }
  return r;
}

FuzzTrial fuzz_trial(const FuzzConfig& config, std::size_t index) {
  const std::uint64_t seed = splitmix(config.seed * 0x100000001b3ULL + index);
  const std::size_t lo = std::max<std::size_t>(config.min_n, 1);
  const std::size_t hi = std::max(lo, config.max_n);
  const std::size_t n = lo + static_cast<std::size_t>(splitmix(seed) % (hi - lo + 1));
  const auto generator = static_cast<Generator>(index % 3);
  const double psi = kPsi[(index / 3) % kPsi.size()];

  FuzzTrial trial{generate_instance(n, seed, generator, psi), {}};
  trial.options.eps = config.eps;
  trial.options.targets = config.targets;
  trial.options.target_seed = seed;
  trial.options.base_cutoff = config.base_cutoff.value_or(kCutoffs[(index / 12) % kCutoffs.size()]);
  return trial;
}

Instance shrink_failure(const Instance& inst, const TrialOptions& options) {
  Instance current = inst;
  while (current.points.size() > 1) {
    const std::size_t half = current.points.size() / 2;
    bool shrunk = false;
    for (int side = 0; side < 2 && !shrunk; ++side) {
      std::vector<std::size_t> keep;
      const std::size_t first = side == 0 ? 0 : half;
      const std::size_t last = side == 0 ? half : current.points.size();
      for (std::size_t i = first; i < last; ++i) keep.push_back(i);
      Instance candidate = sub_instance(current, keep);
      if (!check_instance(candidate, options).ok()) {
        current = std::move(candidate);
        shrunk = true;
      }
    }
    if (!shrunk) break;
  }
  return current;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  for (std::size_t i = 0; i < config.trials; ++i) {
    const FuzzTrial trial = fuzz_trial(config, i);
    const TrialResult result = check_instance(trial.instance, trial.options);
    report.totals += result;
    ++report.trials;
    if (!result.ok()) {
      report.failing = shrink_failure(trial.instance, trial.options);
      if (!config.dump_path.empty()) save_instance(config.dump_path, *report.failing);
      break;
    }
  }
  return report;
}

}  // namespace tgraph::harness
