// Command-line front end: instance generation, oracle builds, queries,
// differential fuzzing and benchmarks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgraph/continuous_query.hpp"
#include "tgraph/distance_oracle.hpp"
#include "tgraph/harness/bench.hpp"
#include "tgraph/harness/fuzz.hpp"
#include "tgraph/harness/instance.hpp"
#include "tgraph/reachability_oracle.hpp"
#include "tgraph/simd.hpp"

namespace {

using namespace tgraph;
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isinf(*d)) return "inf";
    std::ostringstream os;
    os.precision(10);
    os << *d;
    return os.str();
  }
  return std::get<std::string>(c);
}

void emit(const Table& table, const std::string& format, std::ostream& out = std::cout) {
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using V = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<V, double>) {
                obj[table.columns[i]] = std::isinf(v) ? nlohmann::json("inf") : nlohmann::json(v);
              } else {
                obj[table.columns[i]] = v;
              }
            },
            row[i]);
      }
      rows.push_back(obj);
    }
    out << rows.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) sizes.push_back(std::stoull(item));
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability and hop-distance oracles for transmission graphs"};
  app.require_subcommand(1);
  std::string format = "csv";
  std::string simd_level = "auto";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--simd", simd_level, "Kernel level")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::size_t gen_n = 100;
  std::uint64_t gen_seed = 1;
  std::optional<double> gen_psi;
  std::string gen_kind = "uniform";
  std::string gen_out;
  harness::GeneratorOptions gen_opts;
  gen->add_option("--n", gen_n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--psi", gen_psi, "Max/min radius ratio")->check(CLI::Range(1.0, 1e12));
  gen->add_option("--generator", gen_kind, "uniform|clustered|grid")
      ->check(CLI::IsMember({"uniform", "clustered", "grid"}));
  gen->add_option("--spread", gen_opts.spread, "Square side in units of sqrt(n)")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // build
  auto* build = app.add_subcommand("build", "Build the oracles and report their size");
  std::string build_in;
  std::optional<double> build_eps;
  std::size_t cutoff = 64;
  build->add_option("--in", build_in, "Instance file")->required();
  build->add_option("--eps", build_eps, "Also build the distance oracle")->check(CLI::PositiveNumber);
  build->add_option("--cutoff", cutoff, "Base-case size")->check(CLI::PositiveNumber);

  // query
  auto* query = app.add_subcommand("query", "Answer queries from a file");
  std::string query_in, query_file, mode = "reach";
  double query_eps = 0.5;
  query->add_option("--in", query_in, "Instance file")->required();
  query->add_option("--queries", query_file, "Query file")->required();
  query->add_option("--mode", mode, "reach|dist|creach|cdist")
      ->check(CLI::IsMember({"reach", "dist", "creach", "cdist"}));
  query->add_option("--eps", query_eps, "Distance approximation")->check(CLI::PositiveNumber);
  query->add_option("--cutoff", cutoff, "Base-case size")->check(CLI::PositiveNumber);

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Compare the oracles against brute force");
  harness::FuzzConfig fuzz_cfg;
  fuzz->add_option("--trials", fuzz_cfg.trials, "Number of random instances");
  fuzz->add_option("--max-n", fuzz_cfg.max_n, "Largest instance")->check(CLI::PositiveNumber);
  fuzz->add_option("--eps", fuzz_cfg.eps, "Distance approximations")->delimiter(',');
  fuzz->add_option("--seed", fuzz_cfg.seed, "Base seed");
  fuzz->add_option("--targets", fuzz_cfg.targets, "Continuous targets per instance");
  fuzz->add_option("--dump", fuzz_cfg.dump_path, "Where to write a shrunk failing instance");

  // bench
  auto* bench = app.add_subcommand("bench", "Measure build time, query time and storage");
  harness::BenchConfig bench_cfg;
  std::string bench_sizes = "1024,2048,4096,8192,16384";
  std::string bench_csv;
  bench->add_option("--sizes", bench_sizes, "Comma-separated instance sizes");
  bench->add_option("--eps", bench_cfg.eps, "Benchmark the distance oracle")->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_cfg.reps, "Seeds per size");
  bench->add_option("--queries", bench_cfg.queries, "Timed queries per build");
  bench->add_option("--spread", bench_cfg.generator_options.spread, "Instance sparsity")->check(CLI::PositiveNumber);
  bench->add_option("--psi", bench_cfg.psi, "Max/min radius ratio")->check(CLI::Range(1.0, 1e12));
  bench->add_option("--csv", bench_csv, "Also write CSV to this file");

  // stats
  auto* stats = app.add_subcommand("stats", "Separator weight and balance per recursion level");
  std::string stats_in;
  stats->add_option("--in", stats_in, "Instance file")->required();
  stats->add_option("--cutoff", cutoff, "Base-case size")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (simd_level == "scalar") simd::set_level(simd::Level::Scalar);
    if (simd_level == "avx2" && simd::set_level(simd::Level::Avx2) != simd::Level::Avx2) {
      std::cerr << "AVX2 is not available, using scalar kernels\n";
    }

    if (*gen) {
      const auto inst = harness::generate_instance(gen_n, gen_seed, harness::parse_generator(gen_kind), gen_psi, gen_opts);
      if (gen_out.empty()) {
        harness::save_instance(std::cout, inst);
      } else {
        harness::save_instance(gen_out, inst);
      }
      return 0;
    }

    if (*build) {
      const auto inst = harness::load_instance(build_in);
      Table t{{"oracle", "n", "build_ms", "stored_entries", "depth", "top_cliques"}, {}};
      auto start = std::chrono::steady_clock::now();
      const auto reach = build_reach_oracle(inst.points, cutoff);
      t.rows.push_back({std::string("reach"), static_cast<std::int64_t>(reach.size()), ms_since(start),
                        static_cast<std::int64_t>(reach.stored_entries()), static_cast<std::int64_t>(reach.depth()),
                        static_cast<std::int64_t>(reach.levels().front().cliques)});
      if (build_eps) {
        start = std::chrono::steady_clock::now();
        const auto dist = build_dist_oracle(inst.points, *build_eps, cutoff);
        t.rows.push_back({std::string("dist"), static_cast<std::int64_t>(dist.size()), ms_since(start),
                          static_cast<std::int64_t>(dist.stored_entries()), static_cast<std::int64_t>(dist.depth()),
                          static_cast<std::int64_t>(dist.levels().front().cliques)});
      }
      emit(t, format);
      return 0;
    }

    if (*query) {
      const auto inst = harness::load_instance(query_in);
      const auto queries = harness::load_queries(query_file);
      const bool continuous = mode == "creach" || mode == "cdist";
      const bool distances = mode == "dist" || mode == "cdist";
      std::optional<ReachabilityOracle> reach;
      std::optional<DistanceOracle> dist;
      std::optional<ContinuousIndex> idx;
      if (distances) {
        dist = build_dist_oracle(inst.points, query_eps, cutoff);
      } else {
        reach = build_reach_oracle(inst.points, cutoff);
      }
      if (continuous) idx.emplace(inst.points);
      Table t;
      t.columns = continuous ? std::vector<std::string>{"s", "x", "y", "answer"}
                             : std::vector<std::string>{"s", "t", "answer"};
      for (const auto& q : queries) {
        std::vector<Cell> row{static_cast<std::int64_t>(q.source)};
        Cell answer;
        if (const auto* target = std::get_if<NodeId>(&q.target)) {
          if (continuous) throw Error(ErrorCode::Parse, "continuous mode needs '<s> <x> <y>' queries");
          row.push_back(static_cast<std::int64_t>(*target));
          answer = distances ? Cell(dist->query(q.source, *target))
                             : Cell(static_cast<std::int64_t>(reach->query(q.source, *target)));
        } else {
          if (!continuous) throw Error(ErrorCode::Parse, "discrete mode needs '<s> <t>' queries");
          const Point p = std::get<Point>(q.target);
          row.push_back(p.x());
          row.push_back(p.y());
          answer = distances ? Cell(query_continuous_dist(*dist, *idx, q.source, p))
                             : Cell(static_cast<std::int64_t>(query_continuous_reach(*reach, *idx, q.source, p)));
        }
        row.push_back(answer);
        t.rows.push_back(std::move(row));
      }
      emit(t, format);
      return 0;
    }

    if (*fuzz) {
      const auto report = harness::run_fuzz(fuzz_cfg);
      const auto& r = report.totals;
      Table t{{"trials", "pairs", "reach_mismatches", "dist_checks", "dist_violations", "inf_mismatches",
               "tight_fraction", "targets", "candidate_violations", "radius_mismatches", "candidate_gap_violations",
               "creach_mismatches", "cdist_violations"},
              {}};
      const double tight = r.tight_total ? static_cast<double>(r.tight_hits) / static_cast<double>(r.tight_total) : 1.0;
      t.rows.push_back({static_cast<std::int64_t>(report.trials), static_cast<std::int64_t>(r.pairs),
                        static_cast<std::int64_t>(r.reach_mismatches), static_cast<std::int64_t>(r.dist_checks),
                        static_cast<std::int64_t>(r.dist_violations), static_cast<std::int64_t>(r.inf_mismatches), tight,
                        static_cast<std::int64_t>(r.target_checks), static_cast<std::int64_t>(r.candidate_violations),
                        static_cast<std::int64_t>(r.radius_mismatches),
                        static_cast<std::int64_t>(r.candidate_gap_violations),
                        static_cast<std::int64_t>(r.creach_mismatches), static_cast<std::int64_t>(r.cdist_violations)});
      emit(t, format);
      if (!report.ok()) {
        std::cerr << "failure: " << r.first_failure << '\n';
        if (report.failing) std::cerr << "shrunk to " << report.failing->points.size() << " points\n";
        return 1;
      }
      return 0;
    }

    if (*bench) {
      bench_cfg.sizes = parse_sizes(bench_sizes);
      const auto records = harness::run_bench(bench_cfg);
      if (format == "json") {
        harness::write_bench_json(std::cout, records);
      } else {
        harness::write_bench_csv(std::cout, records);
      }
      if (!bench_csv.empty()) {
        std::ofstream out(bench_csv);
        harness::write_bench_csv(out, records);
      }
      return 0;
    }

    if (*stats) {
      const auto inst = harness::load_instance(stats_in);
      const auto reach = build_reach_oracle(inst.points, cutoff);
      Table t{{"depth", "size", "base", "cliques", "separator_nodes", "part_a", "part_b", "weight", "t_star",
               "degenerate"},
              {}};
      for (const auto& l : reach.levels()) {
        t.rows.push_back({static_cast<std::int64_t>(l.depth), static_cast<std::int64_t>(l.size),
                          static_cast<std::int64_t>(l.base), static_cast<std::int64_t>(l.cliques),
                          static_cast<std::int64_t>(l.separator_nodes), static_cast<std::int64_t>(l.part_a),
                          static_cast<std::int64_t>(l.part_b), l.weight, l.t_star,
                          static_cast<std::int64_t>(l.degenerate)});
      }
      emit(t, format);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
