#pragma once

#include <span>

#include "selection/family.hpp"
#include "selection/point.hpp"

namespace sel {

// Signs of exact polynomial expressions over 128-bit integer vectors. Small
// operands take a native __int128 path; large ones are evaluated in
// 256/512-bit fixed-width integers.
int sign_dot(std::span<const i128> u, std::span<const i128> v);
int sign_cross(i128 ux, i128 uy, i128 vx, i128 vy);
// Sign of the determinant of a square matrix given as rows (size 2..4).
int sign_det(const std::vector<std::vector<i128>>& rows);

// a * p.den - p.num, coordinatewise (the direction from p to a, scaled).
std::vector<i128> scaled_offset(const Point& a, const RationalPoint& p);

// Strict containment of p in the object induced by {a, b}. For SlabBoth use
// containment_count, which can be 2.
bool contains(Family family, const Point& a, const Point& b, const RationalPoint& p);
int containment_count(Family family, const Point& a, const Point& b, const RationalPoint& p);

// Closed containment of an integer point, used by the centerpoint soundness
// checks and the Delaunay emptiness test (strict variant is contains()).
bool contains_closed(Family family, const Point& a, const Point& b, const Point& p);

// DownTriangle works in sheared lattice coordinates (u, v) with the three
// functionals c1 = -u - v, c2 = u, c3 = v.
inline i64 tri_functional(int k, i64 u, i64 v) {
  return k == 0 ? -u - v : (k == 1 ? u : v);
}

}  // namespace sel
