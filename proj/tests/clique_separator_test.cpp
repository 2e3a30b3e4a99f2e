#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tgraph/clique_separator.hpp"

using namespace tgraph;

namespace {

const Square kUnitH0(Point(0, 0), 1.0);

double weight_at(std::span<const CrossingInterval> intervals, double t) {
  double w = 0.0;
  for (const auto& iv : intervals) {
    if (iv.contains(t)) w += iv.weight;
  }
  return w;
}

}  // namespace

TEST(CenteredSquare, KthChebyshevDistance) {
  const std::vector<Point> c{{0, 0}, {1, 0}, {4, 0}};
  EXPECT_DOUBLE_EQ(centered_k_enclosing_square(c, 2, Point(0, 0)).half_edge(), 1.0);
  EXPECT_DOUBLE_EQ(centered_k_enclosing_square(c, 1, Point(4, 0)).half_edge(), 0.0);
  const std::vector<Point> d{{0, 0}, {2, 2}};
  EXPECT_DOUBLE_EQ(centered_k_enclosing_square(d, 2, Point(1, 1)).half_edge(), 1.0);
}

TEST(CenteredSquare, BadK) {
  const std::vector<Point> c{{0, 0}, {1, 0}};
  for (std::size_t k : {std::size_t{0}, std::size_t{3}}) {
    try {
      centered_k_enclosing_square(c, k, Point(0, 0));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadK);
    }
  }
  EXPECT_THROW(approx_smallest_k_enclosing_square(c, 0), Error);
}

TEST(ApproxSquare, Examples) {
  const std::vector<Point> c{{0, 0}, {1, 0}, {0, 1}, {10, 10}};
  EXPECT_LE(approx_smallest_k_enclosing_square(c, 2).edge(), 2.0);
  EXPECT_EQ(approx_smallest_k_enclosing_square(c, 1).edge(), 0.0);
  const std::vector<Point> same(5, Point(3, 3));
  EXPECT_EQ(approx_smallest_k_enclosing_square(same, 4).edge(), 0.0);
}

TEST(ApproxSquare, WithinFactorTwoOfExact) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    std::vector<Point> c;
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<double>(rng() % 50), static_cast<double>(rng() % 50));
    const std::size_t k = 1 + rng() % n;
    EXPECT_LE(approx_smallest_k_enclosing_square(c, k).edge(), 2.0 * test::exact_k_enclosing_edge(c, k));
  }
}

TEST(ApproxSquare, GridPrunedPathMatchesBruteForce) {
  // Above the brute-force size the search prunes with a grid; both paths
  // must give the same half edge.
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto pts = test::random_points(1500, seed, 2.0);
    std::vector<Point> c;
    for (const auto& p : pts) c.push_back(p.pos);
    const std::size_t k = separator_k_star(c.size());
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : c) best = std::min(best, centered_k_enclosing_square(c, k, q).half_edge());
    EXPECT_EQ(approx_smallest_k_enclosing_square(c, k).half_edge(), best);
  }
}

TEST(CrossingRange, EdgeAndCornerCases) {
  const auto iv = clique_interval(std::vector<Disk>{Disk(Point(2, 0), 0.5)}, kUnitH0);
  ASSERT_TRUE(iv.has_value());
  EXPECT_DOUBLE_EQ(iv->lo, 1.5);
  EXPECT_DOUBLE_EQ(iv->hi, 2.5);

  // Nearest point of the growing square is its corner.
  const auto [lo, hi] = detail::crossing_range(2.0, 2.0, 0.5);
  EXPECT_NEAR(lo, (4.0 - std::sqrt(0.5)) / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(hi, 2.5);
  const double gap = std::hypot(2.0 - lo, 2.0 - lo);
  EXPECT_NEAR(gap, 0.5, 1e-12);

  EXPECT_FALSE(clique_interval(std::vector<Disk>{Disk(Point(0.2, 0.1), 0.1)}, kUnitH0).has_value());
  EXPECT_FALSE(clique_interval(std::vector<Disk>{Disk(Point(0, 0), 0.5)}, kUnitH0).has_value());
  EXPECT_FALSE(clique_interval(std::vector<Disk>{Disk(Point(9, 0), 0.5)}, kUnitH0).has_value());
}

TEST(CrossingRange, HullOfMembers) {
  const auto iv = clique_interval(std::vector<Disk>{Disk(Point(1.2, 0), 0.1), Disk(Point(2.5, 0), 0.1)}, kUnitH0);
  ASSERT_TRUE(iv.has_value());
  EXPECT_DOUBLE_EQ(iv->lo, 1.1);
  EXPECT_DOUBLE_EQ(iv->hi, 2.6);
}

TEST(CrossingRange, AgreesWithSampling) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0), r(0.01, 1.5);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), y = u(rng), rho = r(rng);
    const auto [lo, hi] = detail::crossing_range(x, y, rho);
    // dist from (x,y) to the boundary of the square of half edge t
    auto dist = [&](double t) {
      const double ax = std::abs(x), ay = std::abs(y);
      if (ax <= t && ay <= t) return t - std::max(ax, ay);
      return std::hypot(std::max(ax - t, 0.0), std::max(ay - t, 0.0));
    };
    for (double t = 0.0; t <= 8.0; t += 0.01) {
      const bool meets = dist(t) <= rho;
      if (t < lo - 1e-9 || t > hi + 1e-9) {
        EXPECT_FALSE(meets) << x << ' ' << y << ' ' << rho << ' ' << t;
      }
      if (t > lo + 1e-9 && t < hi - 1e-9) {
        EXPECT_TRUE(meets) << x << ' ' << y << ' ' << rho << ' ' << t;
      }
    }
  }
}

TEST(SelectTStar, OverlappingIntervals) {
  const std::vector<CrossingInterval> iv{{1.0, 2.0, 0, 1.0}, {1.5, 2.5, 1, 1.0}, {2.2, 3.0, 2, 1.0}};
  const TStar t = select_t_star(iv);
  EXPECT_EQ(t.weight, 1.0);
  EXPECT_EQ(weight_at(iv, t.t), 1.0);
  // Weight 1 is already attained at t = 1; ties go to the smallest t.
  EXPECT_EQ(t.t, 1.0);
}

TEST(SelectTStar, EmptyAndFull) {
  const TStar none = select_t_star({});
  EXPECT_EQ(none.t, 1.0);
  EXPECT_EQ(none.weight, 0.0);
  const std::vector<CrossingInterval> full{{1.0, 3.0, 0, 1.0}};
  EXPECT_EQ(select_t_star(full).weight, 1.0);
}

TEST(SelectTStar, MidpointWhenInfimumNotAttained) {
  // [1,2] and [2,3] share t = 2; everywhere else the weight is 1.
  const std::vector<CrossingInterval> iv{{1.0, 2.0, 0, 3.0}, {2.0, 3.0, 1, 1.0}};
  const TStar t = select_t_star(iv);
  EXPECT_EQ(t.weight, 1.0);
  EXPECT_EQ(t.t, 2.5);
}

TEST(SelectTStar, MatchesDirectEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<CrossingInterval> iv;
    const int count = static_cast<int>(rng() % 12);
    const bool sqrt_weights = trial % 2 == 1;
    for (int i = 0; i < count; ++i) {
      // Quantized endpoints produce shared breakpoints and degenerate intervals.
      double a = std::round(u(rng) * 8.0) / 8.0, b = std::round(u(rng) * 8.0) / 8.0;
      if (a > b) std::swap(a, b);
      const double size = static_cast<double>(1 + rng() % 9);
      iv.push_back({a, b, static_cast<std::uint32_t>(i), sqrt_weights ? std::sqrt(size) : 1.0});
    }
    const TStar got = select_t_star(iv);
    std::vector<double> probes{1.0, 3.0};
    for (const auto& x : iv) {
      probes.push_back(x.lo);
      probes.push_back(x.hi);
    }
    std::sort(probes.begin(), probes.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < probes.size(); ++i) {
      best = std::min(best, weight_at(iv, probes[i]));
      if (i + 1 < probes.size()) best = std::min(best, weight_at(iv, 0.5 * (probes[i] + probes[i + 1])));
    }
    EXPECT_NEAR(got.weight, best, 1e-9);
    EXPECT_NEAR(weight_at(iv, got.t), best, 1e-9);
    EXPECT_GE(got.t, 1.0);
    EXPECT_LE(got.t, 3.0);
  }
}

TEST(CandidateCliques, SameSizeClassCellShareAClique) {
  const std::vector<TransmissionPoint> disks{{0, Point(2.0, 0.0), 0.1}, {1, Point(2.01, 0.01), 0.1}};
  const auto cliques = build_candidate_cliques(disks, kUnitH0);
  ASSERT_EQ(cliques.size(), 1u);
  EXPECT_EQ(cliques[0].member_ids, (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(cliques[0].kind, StabbedClique::Kind::SizeClass);
  for (const auto& d : disks) EXPECT_TRUE(disk_contains(d.disk(), cliques[0].stab_point));
}

TEST(CandidateCliques, TinyDiskIsSingleton) {
  const std::vector<TransmissionPoint> disks{{0, Point(2.0, 0.0), 0.001}, {1, Point(0.0, 0.0), 0.001}};
  const auto cliques = build_candidate_cliques(disks, kUnitH0);
  ASSERT_EQ(cliques.size(), 1u);
  EXPECT_EQ(cliques[0].kind, StabbedClique::Kind::Singleton);
  EXPECT_EQ(cliques[0].stab_point, Point(2.0, 0.0));
}

TEST(CandidateCliques, LargeDisksThroughACommonPoint) {
  std::vector<TransmissionPoint> disks;
  for (NodeId i = 0; i < 12; ++i) {
    const double a = 0.5 * i;
    disks.emplace_back(i, Point(2.0 + 0.3 * std::cos(a), 0.3 * std::sin(a)), 1.0);
  }
  const auto cliques = build_candidate_cliques(disks, kUnitH0);
  std::size_t covered = 0;
  for (const auto& c : cliques) {
    EXPECT_EQ(c.kind, StabbedClique::Kind::Large);
    covered += c.member_ids.size();
    for (NodeId v : c.member_ids) EXPECT_TRUE(disk_contains(disks[v].disk(), c.stab_point));
  }
  EXPECT_EQ(covered, disks.size());
  EXPECT_LE(cliques.size(), 2u);
}

TEST(CandidateCliques, RequiresPositiveSquare) {
  const std::vector<TransmissionPoint> disks{{0, Point(0, 0), 1}};
  EXPECT_THROW(build_candidate_cliques(disks, Square(Point(0, 0), 0)), Error);
}

TEST(BuildSeparator, TwoFarClusters) {
  std::vector<TransmissionPoint> disks;
  for (NodeId i = 0; i < 80; ++i) {
    const double base = i < 40 ? 0.0 : 1000.0;
    disks.emplace_back(i, Point(base + 3.0 * (i % 8), 3.0 * ((i % 40) / 8)), 1.0);
  }
  const auto sep = build_separator(disks);
  EXPECT_EQ(test::separator_problem(disks, sep), "");
}

TEST(BuildSeparator, AllDisksThroughOrigin) {
  std::vector<TransmissionPoint> disks;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (NodeId i = 0; i < 300; ++i) disks.emplace_back(i, Point(u(rng), u(rng)), 1.0);
  const auto sep = build_separator(disks);
  EXPECT_EQ(test::separator_problem(disks, sep), "");
  EXPECT_TRUE(sep.part_a.empty());
  EXPECT_TRUE(sep.part_b.empty());
  EXPECT_LE(sep.cliques.size(), 4u);
}

TEST(BuildSeparator, TwoDisjointDisks) {
  const std::vector<TransmissionPoint> disks{{0, Point(0, 0), 1}, {1, Point(10, 0), 1}};
  const auto sep = build_separator(disks);
  EXPECT_EQ(test::separator_problem(disks, sep), "");
}

TEST(BuildSeparator, DegenerateSquareFallsBack) {
  // 300 disks, 3 of them on one spot: k* = 3 so H0 collapses to a point.
  std::vector<TransmissionPoint> disks;
  for (NodeId i = 0; i < 3; ++i) disks.emplace_back(i, Point(50, 50), 2.0);
  for (NodeId i = 3; i < 300; ++i) disks.emplace_back(i, Point(10.0 * (i % 20), 10.0 * (i / 20) + 200.0), 1.0);
  const auto sep = build_separator(disks);
  EXPECT_TRUE(sep.degenerate);
  ASSERT_EQ(sep.cliques.size(), 1u);
  EXPECT_EQ(sep.cliques[0].kind, StabbedClique::Kind::Fallback);
  EXPECT_EQ(sep.cliques[0].member_ids, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_TRUE(sep.part_b.empty());
  EXPECT_EQ(test::separator_problem(disks, sep), "");
}

TEST(BuildSeparator, NeedsTwoDisks) {
  const std::vector<TransmissionPoint> one{{0, Point(0, 0), 1}};
  EXPECT_THROW(build_separator(one), Error);
}

TEST(BuildSeparator, RandomInstancesSatisfyInvariants) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto gen = static_cast<harness::Generator>(seed % 3);
    const double psi = seed % 4 == 0 ? 100.0 : 3.0;
    const auto disks = test::random_points(150 + 40 * seed, seed, 1.5, psi, gen);
    const auto sep = build_separator(disks);
    EXPECT_EQ(test::separator_problem(disks, sep), "") << "seed " << seed;
    EXPECT_GE(sep.t_star, 1.0);
    EXPECT_LE(sep.t_star, 3.0);
    EXPECT_DOUBLE_EQ(sep.weight, static_cast<double>(sep.cliques.size()));
  }
}

TEST(BuildSeparator, SqrtWeightFunction) {
  const auto disks = test::random_points(800, 9, 1.5, 10.0);
  const auto sep = build_separator(disks, [](std::size_t size) { return std::sqrt(static_cast<double>(size)); });
  EXPECT_EQ(test::separator_problem(disks, sep), "");
  double w = 0.0;
  for (const auto& c : sep.cliques) w += std::sqrt(static_cast<double>(c.member_ids.size()));
  EXPECT_NEAR(sep.weight, w, 1e-9);
}

TEST(KStar, Rounding) {
  EXPECT_EQ(separator_k_star(1), 1u);
  EXPECT_EQ(separator_k_star(145), 1u);
  EXPECT_EQ(separator_k_star(146), 2u);
  EXPECT_EQ(separator_k_star(2900), 20u);
}
