#include "tgraph/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include <json.hpp>

#include "tgraph/distance_oracle.hpp"
#include "tgraph/reachability_oracle.hpp"

namespace tgraph::harness {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kBatch = 64;

double elapsed_ns(Clock::time_point since) {
  return std::chrono::duration<double, std::nano>(Clock::now() - since).count();
}

template <class Oracle>
std::vector<double> time_queries(const Oracle& oracle, std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> pairs(std::max(count, kBatch));
  for (auto& [s, t] : pairs) {
    s = static_cast<NodeId>(rng() % n);
    t = static_cast<NodeId>(rng() % n);
  }
  std::vector<double> per_query;
  double sink = 0.0;
  for (std::size_t b = 0; b + kBatch <= pairs.size(); b += kBatch) {
    const auto start = Clock::now();
    for (std::size_t i = b; i < b + kBatch; ++i) sink += static_cast<double>(oracle.query(pairs[i].first, pairs[i].second));
    per_query.push_back(elapsed_ns(start) / kBatch);
  }
  // Keeps the loop from being optimized away.
  if (sink == -1.0) per_query.push_back(0.0);
  return per_query;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (std::size_t n : config.sizes) {
    BenchRecord rec;
    rec.n = n;
    rec.eps = config.eps;
    std::vector<double> query_ns;
    const std::size_t reps = std::max<std::size_t>(config.reps, 1);
    for (std::size_t rep = 0; rep < reps; ++rep) {
      const std::uint64_t seed = config.seed + 7919 * rep + n;
      const Instance inst = generate_instance(n, seed, config.generator, config.psi, config.generator_options);
      const auto start = Clock::now();
      std::vector<double> times;
      auto account = [&](const auto& oracle) {
        rec.build_ms += elapsed_ns(start) / 1e6;
        rec.stored_entries += static_cast<double>(oracle.stored_entries());
        rec.recursion_depth += static_cast<double>(oracle.depth());
        rec.separator_clique_count += static_cast<double>(oracle.levels().front().cliques);
        times = time_queries(oracle, n, config.queries, seed ^ 0x5bd1e995);
      };
      if (config.eps) {
        account(build_dist_oracle(inst.points, *config.eps, config.base_cutoff));
      } else {
        account(build_reach_oracle(inst.points, config.base_cutoff));
      }
      query_ns.insert(query_ns.end(), times.begin(), times.end());
    }
    const double r = static_cast<double>(reps);
    rec.build_ms /= r;
    rec.stored_entries /= r;
    rec.recursion_depth /= r;
    rec.separator_clique_count /= r;
    rec.query_ns_median = median(std::move(query_ns));
    records.push_back(rec);
  }
  return records;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

BenchSlopes bench_slopes(std::span<const BenchRecord> records) {
  std::vector<double> n, stored, query, cliques;
  for (const auto& r : records) {
    n.push_back(static_cast<double>(r.n));
    stored.push_back(std::max(r.stored_entries, 1.0));
    query.push_back(std::max(r.query_ns_median, 1e-3));
    cliques.push_back(std::max(r.separator_clique_count, 1.0));
  }
  return {loglog_slope(n, stored), loglog_slope(n, query), loglog_slope(n, cliques)};
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "n,build_ms,query_ns_median,stored_entries,separator_clique_count,recursion_depth,eps\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.build_ms << ',' << r.query_ns_median << ',' << r.stored_entries << ','
        << r.separator_clique_count << ',' << r.recursion_depth << ',';
    if (r.eps) out << *r.eps;
    out << '\n';
  }
  if (records.size() < 2) return;
  const BenchSlopes s = bench_slopes(records);
  out << "# slope stored_entries=" << s.stored_entries << " query_ns=" << s.query_ns
      << " separator_cliques=" << s.separator_cliques << '\n';
}

void write_bench_json(std::ostream& out, std::span<const BenchRecord> records) {
  nlohmann::json doc;
  doc["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json rec{{"n", r.n},
                       {"build_ms", r.build_ms},
                       {"query_ns_median", r.query_ns_median},
                       {"stored_entries", r.stored_entries},
                       {"separator_clique_count", r.separator_clique_count},
                       {"recursion_depth", r.recursion_depth}};
    rec["eps"] = r.eps ? nlohmann::json(*r.eps) : nlohmann::json(nullptr);
    doc["records"].push_back(rec);
  }
  if (records.size() >= 2) {
    const BenchSlopes s = bench_slopes(records);
    doc["slopes"] = {{"stored_entries", s.stored_entries}, {"query_ns", s.query_ns}, {"separator_cliques", s.separator_cliques}};
  } else {
    doc["slopes"] = nullptr;
  }
  out << doc.dump(2) << '\n';
}

}  // namespace tgraph::harness
