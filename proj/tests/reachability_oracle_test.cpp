#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tgraph/reachability_oracle.hpp"

using namespace tgraph;

namespace {

void expect_exact(const std::vector<TransmissionPoint>& pts, std::size_t cutoff) {
  const auto g = build_graph(pts);
  const auto d = test::apsp(g);
  const auto o = build_reach_oracle(pts, cutoff);
  ASSERT_EQ(o.size(), pts.size());
  for (NodeId s = 0; s < g.size(); ++s) {
    for (NodeId t = 0; t < g.size(); ++t) {
      ASSERT_EQ(o.query(s, t), d[s][t] != kUnreached) << "n=" << pts.size() << " cutoff=" << cutoff << ' ' << s << "->" << t;
    }
  }
  EXPECT_LE(static_cast<double>(o.depth()), max_recursion_depth(pts.size()));
}

}  // namespace

TEST(ReachOracle, SmallExamples) {
  const std::vector<TransmissionPoint> chain{{0, Point(0, 0), 1}, {1, Point(1, 0), 1}, {2, Point(2, 0), 0.5}};
  const auto o = build_reach_oracle(chain, 1);
  EXPECT_TRUE(o.query(0, 2));
  EXPECT_FALSE(o.query(2, 0));
  EXPECT_TRUE(o.query(2, 2));
  EXPECT_TRUE(query_reach(o, 1, 0));

  const std::vector<TransmissionPoint> one{{0, Point(4, 4), 1}};
  EXPECT_TRUE(build_reach_oracle(one).query(0, 0));
}

TEST(ReachOracle, UnknownNode) {
  const std::vector<TransmissionPoint> pts{{0, Point(0, 0), 1}, {1, Point(1, 0), 1}};
  const auto o = build_reach_oracle(pts);
  try {
    o.query(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownNode);
  }
}

TEST(ReachOracle, RejectsNonPermutationIds) {
  const std::vector<TransmissionPoint> pts{{0, Point(0, 0), 1}, {3, Point(1, 0), 1}};
  EXPECT_THROW(build_reach_oracle(pts), Error);
}

TEST(ReachOracle, ExactOnRandomInstancesAcrossCutoffs) {
  std::uint64_t seed = 100;
  for (std::size_t cutoff : {1u, 4u, 16u, 64u}) {
    for (std::size_t n : {2u, 7u, 40u, 150u, 320u}) {
      for (int g = 0; g < 3; ++g) {
        const double psi = (seed % 3 == 0) ? 1.0 : (seed % 3 == 1 ? 4.0 : 1e3);
        expect_exact(test::random_points(n, ++seed, 1.5, psi, static_cast<harness::Generator>(g)), cutoff);
      }
    }
  }
}

TEST(ReachOracle, KeptPathsAreTransitive) {
  const auto pts = test::random_points(400, 77, 1.5, 3.0);
  const auto g = build_graph(pts);
  OracleOptions opts;
  opts.base_cutoff = 8;
  opts.keep_paths = true;
  const auto o = build_reach_oracle(pts, opts);
  ASSERT_FALSE(o.paths().empty());
  std::size_t recursive_levels = 0;
  for (const auto& lvl : o.levels()) recursive_levels += lvl.base ? 0 : 1;
  EXPECT_EQ(o.paths().size(), recursive_levels);
  for (const auto& lvl : o.paths()) {
    for (const auto& p : lvl.paths) EXPECT_TRUE(is_transitive(g, p));
  }
}

TEST(ReachOracle, LevelStatsAddUp) {
  const auto pts = test::random_points(600, 5, 1.5, 2.0);
  const auto o = build_reach_oracle(pts, 16);
  std::size_t total = 0;
  ASSERT_FALSE(o.levels().empty());
  EXPECT_EQ(o.levels()[0].size, 600u);
  for (const auto& lvl : o.levels()) {
    total += lvl.stored_entries;
    if (!lvl.base) {
      EXPECT_EQ(lvl.separator_nodes + lvl.part_a + lvl.part_b, lvl.size);
    }
  }
  EXPECT_EQ(total, o.stored_entries());
}
