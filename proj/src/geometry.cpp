#include "tgraph/geometry.hpp"

#include "tgraph/detail/cone.hpp"

namespace tgraph {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CoincidentApex: return "CoincidentApex";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::NotStabbed: return "NotStabbed";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

bool disk_contains(const Disk& d, Point q) {
  return squared_distance(d.center(), q) <= d.radius() * d.radius();
}

bool disks_intersect(const Disk& a, const Disk& b) {
  const double sum = a.radius() + b.radius();
  return squared_distance(a.center(), b.center()) <= sum * sum;
}

int cone_of_offset(double dx, double dy) {
  if (dx == 0.0 && dy == 0.0) return 1;
  const double c60 = 0.5 * dy - detail::kSin60 * dx;
  const double c120 = -0.5 * dy - detail::kSin60 * dx;
  if (dy > 0.0 || (dy == 0.0 && dx > 0.0)) {
    if (c60 < 0.0) return 1;
    return c120 < 0.0 ? 2 : 3;
  }
  if (c60 > 0.0) return 4;
  return c120 > 0.0 ? 5 : 6;
}

ConeIndex canonical_cone_index(Point apex, Point q) {
  if (apex == q) throw Error(ErrorCode::CoincidentApex, "cone of a point relative to itself");
  return ConeIndex(cone_of_offset(q.x() - apex.x(), q.y() - apex.y()));
}

bool sector_contains(const TransmissionPoint& p, ConeIndex i, Point t) {
  const double dx = p.pos.x() - t.x();
  const double dy = p.pos.y() - t.y();
  if (cone_of_offset(dx, dy) != i.value()) return false;
  return dx * dx + dy * dy <= p.radius * p.radius;
}

}  // namespace tgraph
