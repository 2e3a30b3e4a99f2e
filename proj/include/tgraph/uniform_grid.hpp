#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph {

/// Buckets points into square cells and stores them cell-major (rows of cells
/// are contiguous), so any axis-aligned box query decomposes into one
/// contiguous coordinate run per cell row. Runs feed the SIMD kernels directly.
class UniformGrid {
 public:
  /// The cell size is enlarged when needed so that there are at most
  /// max(16, 4 * points.size()) cells.
  UniformGrid(std::span<const Point> points, double cell_size);

  double cell_size() const { return cell_; }
  std::size_t size() const { return ids_.size(); }

  /// Coordinates and original indices in slot order.
  const double* xs() const { return xs_.data(); }
  const double* ys() const { return ys_.data(); }
  const std::uint32_t* ids() const { return ids_.data(); }

  /// Calls fn(first_slot, count) once per non-empty cell row run intersecting
  /// the closed box [x0, x1] x [y0, y1]. Runs cover every point in the box
  /// (and possibly some outside it).
  template <class Fn>
  void for_each_run(double x0, double y0, double x1, double y1, Fn&& fn) const {
    if (ids_.empty()) return;
    const std::int64_t cx0 = clamp_x(x0), cx1 = clamp_x(x1);
    const std::int64_t cy0 = clamp_y(y0), cy1 = clamp_y(y1);
    for (std::int64_t cy = cy0; cy <= cy1; ++cy) {
      const std::size_t row = static_cast<std::size_t>(cy) * width_;
      const std::uint32_t begin = start_[row + static_cast<std::size_t>(cx0)];
      const std::uint32_t end = start_[row + static_cast<std::size_t>(cx1) + 1];
      if (end > begin) fn(static_cast<std::size_t>(begin), static_cast<std::size_t>(end - begin));
    }
  }

 private:
  std::int64_t clamp_x(double x) const { return clamp_cell((x - min_x_) / cell_, width_); }
  std::int64_t clamp_y(double y) const { return clamp_cell((y - min_y_) / cell_, height_); }
  static std::int64_t clamp_cell(double v, std::size_t dim) {
    if (!(v > 0.0)) return 0;
    const double hi = static_cast<double>(dim - 1);
    return v >= hi ? static_cast<std::int64_t>(dim - 1) : static_cast<std::int64_t>(v);
  }

  double cell_ = 1.0;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  std::size_t width_ = 1;
  std::size_t height_ = 1;
  std::vector<std::uint32_t> start_;  // width_*height_ + 1 offsets into the slot arrays
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace tgraph
