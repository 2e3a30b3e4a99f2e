#pragma once

// Plane primitives shared by every module: points, transmission disks,
// containment predicates and the six canonical 60-degree cones.
//
// All predicates compare squared distances. For integer inputs whose
// coordinates and radii stay below 2^25 every predicate is exact in double.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "tgraph/error.hpp"

namespace tgraph {

using NodeId = std::uint32_t;

class Point {
 public:
  constexpr Point() = default;
  Point(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
    }
  }

  double x() const { return x_; }
  double y() const { return y_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

class Disk {
 public:
  Disk(Point center, double radius) : center_(center), radius_(radius) {
    if (!std::isfinite(radius) || radius < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "disk radius must be finite and >= 0");
    }
  }

  Point center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Point center_;
  double radius_;
};

struct TransmissionPoint {
  TransmissionPoint(NodeId id_, Point pos_, double radius_) : id(id_), pos(pos_), radius(radius_) {
    if (!std::isfinite(radius) || !(radius > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "transmission radius must be finite and > 0");
    }
  }

  Disk disk() const { return Disk(pos, radius); }

  NodeId id;
  Point pos;
  double radius;
};

/// One of the six canonical cones. Cone i spans polar angles
/// [(i-1)*60, i*60) degrees around its apex.
class ConeIndex {
 public:
  static constexpr int kCount = 6;

  explicit ConeIndex(int value) : value_(value) {
    if (value < 1 || value > kCount) {
      throw Error(ErrorCode::InvalidArgument, "cone index must lie in 1..6");
    }
  }

  int value() const { return value_; }
  /// Zero-based slot, handy for array indexing.
  int slot() const { return value_ - 1; }

  friend bool operator==(const ConeIndex&, const ConeIndex&) = default;

 private:
  int value_;
};

/// Axis-aligned square.
class Square {
 public:
  Square(Point center, double half_edge) : center_(center), half_edge_(half_edge) {
    if (!std::isfinite(half_edge) || half_edge < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "square half edge must be finite and >= 0");
    }
  }

  Point center() const { return center_; }
  double half_edge() const { return half_edge_; }
  double edge() const { return 2.0 * half_edge_; }

  /// Closed containment test.
  bool contains(Point p) const {
    return std::abs(p.x() - center_.x()) <= half_edge_ && std::abs(p.y() - center_.y()) <= half_edge_;
  }

  Square scaled(double factor) const { return Square(center_, half_edge_ * factor); }

 private:
  Point center_;
  double half_edge_;
};

inline double squared_distance(Point a, Point b) {
  const double dx = a.x() - b.x();
  const double dy = a.y() - b.y();
  return dx * dx + dy * dy;
}

inline double chebyshev_distance(Point a, Point b) {
  return std::max(std::abs(a.x() - b.x()), std::abs(a.y() - b.y()));
}

/// Closed disk containment: boundary points are contained.
bool disk_contains(const Disk& d, Point q);

/// Closed intersection: tangent disks intersect.
bool disks_intersect(const Disk& a, const Disk& b);

/// Cone (1..6) of the offset vector (dx, dy). The zero vector maps to cone 1.
/// This is the single definition the SIMD kernels replicate lane by lane.
int cone_of_offset(double dx, double dy);

/// Cone of q as seen from apex. Throws CoincidentApex when q == apex.
ConeIndex canonical_cone_index(Point apex, Point q);

/// True iff t lies in the sector D_p^(i), i.e. p sits in cone i as seen from t
/// and t is inside p's transmission disk. t == p.pos counts as cone 1.
bool sector_contains(const TransmissionPoint& p, ConeIndex i, Point t);

}  // namespace tgraph
