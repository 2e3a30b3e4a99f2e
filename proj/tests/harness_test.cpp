#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "tgraph/harness/bench.hpp"
#include "tgraph/harness/fuzz.hpp"
#include "tgraph/harness/instance.hpp"

using namespace tgraph;
using namespace tgraph::harness;

TEST(Generator, DeterministicAndIntegral) {
  for (auto gen : {Generator::Uniform, Generator::Clustered, Generator::Grid}) {
    const auto a = generate_instance(200, 42, gen, 10.0);
    const auto b = generate_instance(200, 42, gen, 10.0);
    ASSERT_EQ(a.points.size(), 200u);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      EXPECT_EQ(a.points[i].id, i);
      EXPECT_EQ(a.points[i].pos, b.points[i].pos);
      EXPECT_EQ(a.points[i].radius, b.points[i].radius);
      EXPECT_EQ(a.points[i].pos.x(), std::round(a.points[i].pos.x()));
      EXPECT_EQ(a.points[i].radius, std::round(a.points[i].radius));
      EXPECT_GE(a.points[i].radius, 128.0);
      EXPECT_LE(a.points[i].radius, 1280.0);
    }
    EXPECT_EQ(a.meta.seed, 42u);
    EXPECT_EQ(a.meta.generator, gen);
    EXPECT_NE(generate_instance(200, 43, gen, 10.0).points[5].pos, a.points[5].pos);
  }
}

TEST(Generator, UnitSpreadAndDefaults) {
  const auto inst = generate_instance(50, 1, Generator::Uniform);
  for (const auto& p : inst.points) EXPECT_EQ(p.radius, 128.0);
  EXPECT_THROW(generate_instance(0, 1, Generator::Uniform), Error);
  EXPECT_THROW(generate_instance(5, 1, Generator::Uniform, 0.5), Error);
  EXPECT_EQ(parse_generator("clustered"), Generator::Clustered);
  EXPECT_STREQ(to_string(Generator::Grid), "grid");
  EXPECT_THROW(parse_generator("spiral"), Error);
}

TEST(InstanceFile, RoundTrip) {
  const auto inst = generate_instance(30, 7, Generator::Clustered, 2.5);
  std::stringstream buf;
  save_instance(buf, inst);
  const auto back = load_instance(buf);
  ASSERT_EQ(back.points.size(), inst.points.size());
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    EXPECT_EQ(back.points[i].pos, inst.points[i].pos);
    EXPECT_EQ(back.points[i].radius, inst.points[i].radius);
  }
  EXPECT_EQ(back.meta, inst.meta);

  Instance odd;
  odd.points = {{0, Point(0.1, 1.0 / 3.0), 0.7}, {1, Point(-1e-7, 2e9), 1e-3}};
  std::stringstream buf2;
  save_instance(buf2, odd);
  const auto back2 = load_instance(buf2);
  EXPECT_EQ(back2.points[1].pos, odd.points[1].pos);
  EXPECT_EQ(back2.points[0].radius, 0.7);
  EXPECT_FALSE(back2.meta.psi.has_value());
}

TEST(InstanceFile, ParseErrors) {
  for (const char* text : {"", "transmission-instance v1 2\n0 0 1\n", "transmission-instance v2 1\n0 0 1\n",
                           "transmission-instance v1 1\n0 zero 1\n", "transmission-instance v1 1\n0 0 -1\n",
                           "nonsense\n"}) {
    std::istringstream in(text);
    try {
      load_instance(in);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::Parse || e.code() == ErrorCode::InvalidArgument) << text;
    }
  }
  EXPECT_THROW(load_instance(std::string("/nonexistent/file.txt")), Error);
}

TEST(InstanceFile, SubInstanceRenumbers) {
  const auto inst = generate_instance(10, 3, Generator::Uniform, 2.0);
  const std::vector<std::size_t> keep{7, 2, 9};
  const auto sub = sub_instance(inst, keep);
  ASSERT_EQ(sub.points.size(), 3u);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    EXPECT_EQ(sub.points[i].id, i);
    EXPECT_EQ(sub.points[i].pos, inst.points[keep[i]].pos);
  }
}

TEST(QueryFile, DiscreteAndContinuous) {
  std::istringstream in("# header\n0 3\n\n2 1.5 -2\n");
  const auto q = load_queries(in);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(std::get<NodeId>(q[0].target), 3u);
  EXPECT_EQ(q[1].source, 2u);
  EXPECT_EQ(std::get<Point>(q[1].target), Point(1.5, -2));
  std::istringstream bad("1 2 3 4\n");
  EXPECT_THROW(load_queries(bad), Error);
  std::istringstream neg("-1 2\n");
  EXPECT_THROW(load_queries(neg), Error);
}

TEST(Fuzz, SmallRunIsClean) {
  FuzzConfig cfg;
  cfg.trials = 24;
  cfg.max_n = 40;
  cfg.targets = 10;
  const auto report = run_fuzz(cfg);
  EXPECT_TRUE(report.ok()) << report.totals.first_failure;
  EXPECT_EQ(report.trials, 24u);
  EXPECT_GT(report.totals.pairs, 0u);
  EXPECT_GT(report.totals.target_checks, 0u);
  EXPECT_FALSE(report.failing.has_value());
}

TEST(Fuzz, TrialsRotateParameters) {
  FuzzConfig cfg;
  cfg.min_n = 5;
  cfg.max_n = 9;
  const auto a = fuzz_trial(cfg, 0), b = fuzz_trial(cfg, 1), c = fuzz_trial(cfg, 12);
  EXPECT_NE(a.instance.meta.generator, b.instance.meta.generator);
  EXPECT_NE(a.options.base_cutoff, c.options.base_cutoff);
  for (std::size_t i = 0; i < 30; ++i) {
    const auto t = fuzz_trial(cfg, i);
    EXPECT_GE(t.instance.points.size(), 5u);
    EXPECT_LE(t.instance.points.size(), 9u);
  }
  EXPECT_EQ(fuzz_trial(cfg, 3).instance.points[0].pos, fuzz_trial(cfg, 3).instance.points[0].pos);
}

TEST(Fuzz, InvalidEpsAndResultAccounting) {
  TrialOptions opts;
  opts.eps = {-1.0};
  const auto inst = generate_instance(40, 2, Generator::Clustered, 3.0);
  EXPECT_THROW(check_instance(inst, opts), Error);

  TrialResult r;
  r.reach_mismatches = 1;
  TrialResult sum;
  sum += r;
  sum += r;
  EXPECT_EQ(sum.reach_mismatches, 2u);
  EXPECT_FALSE(sum.ok());
  EXPECT_TRUE(TrialResult{}.ok());
}

TEST(Bench, SlopeAndOutputs) {
  const std::vector<double> x{1, 2, 4, 8}, y{3, 6, 12, 24};
  EXPECT_NEAR(loglog_slope(x, y), 1.0, 1e-12);
  const std::vector<double> y2{1, 4, 16, 64};
  EXPECT_NEAR(loglog_slope(x, y2), 2.0, 1e-12);

  BenchConfig cfg;
  cfg.sizes = {64, 128};
  cfg.reps = 1;
  cfg.queries = 64;
  const auto records = run_bench(cfg);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].n, 64u);
  EXPECT_GT(records[1].stored_entries, 0.0);
  EXPECT_GE(records[1].query_ns_median, 0.0);

  std::ostringstream csv, json;
  write_bench_csv(csv, records);
  write_bench_json(json, records);
  EXPECT_EQ(csv.str().rfind("n,", 0), 0u);
  EXPECT_NE(csv.str().find("# slope"), std::string::npos);
  EXPECT_EQ(json.str().front(), '{');
  EXPECT_NE(json.str().find("\"records\""), std::string::npos);
}
