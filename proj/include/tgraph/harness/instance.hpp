#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph::harness {

enum class Generator { Uniform, Clustered, Grid };

const char* to_string(Generator g);
/// Throws InvalidArgument for unknown names.
Generator parse_generator(std::string_view name);

struct InstanceMeta {
  std::uint64_t seed = 0;
  Generator generator = Generator::Uniform;
  std::optional<double> psi;

  friend bool operator==(const InstanceMeta&, const InstanceMeta&) = default;
};

struct Instance {
  std::vector<TransmissionPoint> points;  // ids 0..n-1 in order
  InstanceMeta meta;
};

struct GeneratorOptions {
  /// Grid resolution: coordinates and radii are integers, one length unit is
  /// `unit` integer steps, and the smallest radius is one unit.
  double unit = 128.0;
  /// Uniform and grid layouts cover a square of side spread * sqrt(n) units.
  double spread = 1.5;
};

/// Deterministic in (n, seed, generator, psi, options). Radii are log-uniform
/// between one unit and psi units (psi defaults to 1); positions are uniform
/// in a square, Gaussian blobs, or a jittered lattice. Requires n >= 1 and
/// psi >= 1 (InvalidArgument otherwise).
Instance generate_instance(std::size_t n, std::uint64_t seed, Generator generator,
                           std::optional<double> psi = std::nullopt, const GeneratorOptions& options = {});

/// Text format: "transmission-instance v1 <n>", an optional
/// "# seed=<s> generator=<g> psi=<p>" line, then "<x> <y> <r>" per point with
/// 17 significant digits.
void save_instance(std::ostream& out, const Instance& inst);
void save_instance(const std::string& path, const Instance& inst);
/// Throws Parse on malformed input.
Instance load_instance(std::istream& in);
Instance load_instance(const std::string& path);

/// Renumbers to ids 0..k-1 in the given order.
Instance sub_instance(const Instance& inst, std::span<const std::size_t> keep);

struct Query {
  NodeId source;
  std::variant<NodeId, Point> target;
};

/// Lines "<s> <t>" (discrete) or "<s> <x> <y>" (continuous); blank lines and
/// lines starting with '#' are skipped. Throws Parse.
std::vector<Query> load_queries(std::istream& in);
std::vector<Query> load_queries(const std::string& path);

}  // namespace tgraph::harness
