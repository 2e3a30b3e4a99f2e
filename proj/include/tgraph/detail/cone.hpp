#pragma once

// Constants for the half-plane cone test. Every implementation of
// cone_of_offset (scalar, AVX2) evaluates exactly these expressions:
//   c60  = 0.5 * dy - kSin60 * dx     (sign of cross(u60,  v))
//   c120 = -0.5 * dy - kSin60 * dx    (sign of cross(u120, v))
//   upper half (dy > 0 or dy == 0 and dx > 0): cone 1 if c60 < 0, 2 if c120 < 0, else 3
//   lower half: cone 4 if c60 > 0, 5 if c120 > 0, else 6
//   dx == dy == 0: cone 1

namespace tgraph::detail {

inline constexpr double kSin60 = 0.86602540378443864676;

}  // namespace tgraph::detail
