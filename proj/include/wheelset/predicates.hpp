#pragma once

#include <span>
#include <vector>

#include "wheelset/exact.hpp"

namespace wheelset {

/// Sign of the simplex orientation function at q: the sign of
/// det(p_1 - q, ..., p_d - q) for a sequence of d points in R^d.
/// +1 and -1 name the two open sides of the oriented simplex, 0 means q lies
/// on its affine hull. Even permutations of the simplex leave the sign alone.
int orient(const Point& q, std::span<const Point> simplex);

int orient(const Point& q, std::initializer_list<Point> simplex);

/// Planar convenience: orientation of the triple (a, b, c);
/// +1 = counterclockwise. Equals orient(a, {b, c}).
int orient2(const Point& a, const Point& b, const Point& c);

/// Relative position of a and b in the rotational sweep around w, starting
/// at the positive x direction and turning counterclockwise. Points on a
/// common line through w do not have a sweep order and report which ray
/// they share instead.
enum class RadialOrder { before, after, same_ray, opposite_ray };

RadialOrder radial_compare(const Point& w, const Point& a, const Point& b);

/// Planar cross product of direction vectors.
Rat cross2(const Point& u, const Point& v);

/// For every point p_i, the number of other points strictly to the left of
/// the directed line center -> p_i. Radial sort plus a circular sweep,
/// O(n log n) exact comparisons. Throws DegenerateError when some point
/// equals the center or two points are collinear with it.
std::vector<long> left_counts(const Point& center, const std::vector<Point>& pts);

/// left_counts on raw direction vectors (center at the origin).
std::vector<long> left_counts_of_directions(const std::vector<Point>& dirs);

}  // namespace wheelset
