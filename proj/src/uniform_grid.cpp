#include "tgraph/uniform_grid.hpp"

#include <limits>
#include <tuple>

namespace tgraph {

UniformGrid::UniformGrid(std::span<const Point> points, double cell_size) {
  if (points.empty()) {
    start_.assign(2, 0);
    return;
  }
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = max_x;
  min_x_ = std::numeric_limits<double>::infinity();
  min_y_ = min_x_;
  for (const Point& p : points) {
    min_x_ = std::min(min_x_, p.x());
    min_y_ = std::min(min_y_, p.y());
    max_x = std::max(max_x, p.x());
    max_y = std::max(max_y, p.y());
  }
  const double extent = std::max({max_x - min_x_, max_y - min_y_, 0.0});
  const double max_cells = std::max(16.0, 4.0 * static_cast<double>(points.size()));
  cell_ = (std::isfinite(cell_size) && cell_size > 0.0) ? cell_size : std::max(extent, 1.0);
  auto dims = [&](double c) {
    return std::pair<double, double>{std::floor((max_x - min_x_) / c) + 1.0,
                                     std::floor((max_y - min_y_) / c) + 1.0};
  };
  auto [w, h] = dims(cell_);
  while (w * h > max_cells) {
    cell_ *= std::sqrt(w * h / max_cells) * 1.0001;
    std::tie(w, h) = dims(cell_);
  }
  width_ = static_cast<std::size_t>(w);
  height_ = static_cast<std::size_t>(h);

  std::vector<std::uint32_t> cell_of(points.size());
  start_.assign(width_ * height_ + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t cx = static_cast<std::size_t>(clamp_x(points[i].x()));
    const std::size_t cy = static_cast<std::size_t>(clamp_y(points[i].y()));
    cell_of[i] = static_cast<std::uint32_t>(cy * width_ + cx);
    ++start_[cell_of[i] + 1];
  }
  for (std::size_t c = 0; c + 1 < start_.size(); ++c) start_[c + 1] += start_[c];

  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  xs_.resize(points.size());
  ys_.resize(points.size());
  ids_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint32_t slot = fill[cell_of[i]]++;
    xs_[slot] = points[i].x();
    ys_[slot] = points[i].y();
    ids_[slot] = static_cast<std::uint32_t>(i);
  }
}

}  // namespace tgraph
