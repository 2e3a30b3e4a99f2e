#include "tgraph/harness/instance.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace tgraph::harness {

namespace {

constexpr std::size_t kBlobSize = 32;

// Hand-rolled conversions keep instances identical across standard libraries
// (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_number(std::string_view text, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::string render(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* to_string(Generator g) {
  switch (g) {
    case Generator::Uniform: return "uniform";
    case Generator::Clustered: return "clustered";
    case Generator::Grid: return "grid";
  }
  return "?";
}

Generator parse_generator(std::string_view name) {
  if (name == "uniform") return Generator::Uniform;
  if (name == "clustered") return Generator::Clustered;
  if (name == "grid") return Generator::Grid;
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + std::string(name) + "'");
}

Instance generate_instance(std::size_t n, std::uint64_t seed, Generator generator, std::optional<double> psi,
                           const GeneratorOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const double ratio = psi.value_or(1.0);
  if (!(ratio >= 1.0) || !std::isfinite(ratio)) throw Error(ErrorCode::InvalidArgument, "psi must be >= 1");
  if (!(options.unit >= 1.0) || !(options.spread > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "unit must be >= 1 and spread > 0");
  }

  Rng rng(seed);
  const double unit = options.unit;
  const double side = std::round(options.spread * std::sqrt(static_cast<double>(n)) * unit);
  std::vector<std::pair<double, double>> pos;
  pos.reserve(n);
  switch (generator) {
    case Generator::Uniform:
      for (std::size_t i = 0; i < n; ++i) pos.emplace_back(rng.uniform(0.0, side), rng.uniform(0.0, side));
      break;
    case Generator::Clustered: {
      const std::size_t blobs = std::max<std::size_t>(1, n / kBlobSize);
      std::vector<std::pair<double, double>> centers;
      for (std::size_t b = 0; b < blobs; ++b) centers.emplace_back(rng.uniform(0.0, side), rng.uniform(0.0, side));
      const double sigma = 2.0 * unit;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& c = centers[i % blobs];
        const double gx = rng.gaussian();
        const double gy = rng.gaussian();
        pos.emplace_back(c.first + sigma * gx, c.second + sigma * gy);
      }
      break;
    }
    case Generator::Grid: {
      const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      const double spacing = side / static_cast<double>(cols);
      for (std::size_t i = 0; i < n; ++i) {
        const double jx = rng.uniform(-0.25, 0.25) * spacing;
        const double jy = rng.uniform(-0.25, 0.25) * spacing;
        pos.emplace_back((static_cast<double>(i % cols) + 0.5) * spacing + jx,
                         (static_cast<double>(i / cols) + 0.5) * spacing + jy);
      }
      break;
    }
  }

  const double r_max = std::floor(unit * ratio);
  Instance inst;
  inst.meta = {seed, generator, psi};
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::clamp(std::round(unit * std::pow(ratio, rng.uniform())), unit, r_max);
    inst.points.emplace_back(static_cast<NodeId>(i), Point(std::round(pos[i].first), std::round(pos[i].second)), r);
  }
  return inst;
}

void save_instance(std::ostream& out, const Instance& inst) {
  out << "transmission-instance v1 " << inst.points.size() << '\n';
  out << "# seed=" << inst.meta.seed << " generator=" << to_string(inst.meta.generator)
      << " psi=" << (inst.meta.psi ? render(*inst.meta.psi) : std::string("none")) << '\n';
  for (const auto& p : inst.points) {
    out << render(p.pos.x()) << ' ' << render(p.pos.y()) << ' ' << render(p.radius) << '\n';
  }
}

void save_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  save_instance(out, inst);
}

Instance load_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw Error(ErrorCode::Parse, "empty instance file");
  const auto head = tokens(line);
  if (head.size() != 3 || head[0] != "transmission-instance" || head[1] != "v1") {
    throw Error(ErrorCode::Parse, "line 1: expected 'transmission-instance v1 <n>'");
  }
  const auto n = parse_number<std::size_t>(head[2], line_no);

  Instance inst;
  inst.points.reserve(n);
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "#") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto eq = tok[i].find('=');
        if (eq == std::string_view::npos) continue;
        const auto key = tok[i].substr(0, eq);
        const auto value = tok[i].substr(eq + 1);
        if (key == "seed") inst.meta.seed = parse_number<std::uint64_t>(value, line_no);
        if (key == "generator") inst.meta.generator = parse_generator(value);
        if (key == "psi") {
          inst.meta.psi = value == "none" ? std::nullopt : std::optional(parse_number<double>(value, line_no));
        }
      }
      continue;
    }
    if (tok.size() != 3) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 'x y r'");
    if (inst.points.size() == n) throw Error(ErrorCode::Parse, "more points than the header announces");
    try {
      inst.points.emplace_back(static_cast<NodeId>(inst.points.size()),
                               Point(parse_number<double>(tok[0], line_no), parse_number<double>(tok[1], line_no)),
                               parse_number<double>(tok[2], line_no));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (inst.points.size() != n) throw Error(ErrorCode::Parse, "fewer points than the header announces");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return load_instance(in);
}

Instance sub_instance(const Instance& inst, std::span<const std::size_t> keep) {
  Instance sub;
  sub.meta = inst.meta;
  for (std::size_t i : keep) {
    const auto& p = inst.points.at(i);
    sub.points.emplace_back(static_cast<NodeId>(sub.points.size()), p.pos, p.radius);
  }
  return sub;
}

std::vector<Query> load_queries(std::istream& in) {
  std::vector<Query> queries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    const auto s = parse_number<NodeId>(tok[0], line_no);
    if (tok.size() == 2) {
      queries.push_back({s, parse_number<NodeId>(tok[1], line_no)});
    } else if (tok.size() == 3) {
      queries.push_back({s, Point(parse_number<double>(tok[1], line_no), parse_number<double>(tok[2], line_no))});
    } else {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 2 or 3 fields");
    }
  }
  return queries;
}

std::vector<Query> load_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return load_queries(in);
}

}  // namespace tgraph::harness
