#pragma once

#include <vector>

#include "wheelset/exact.hpp"
#include "wheelset/linalg.hpp"

namespace wheelset {

/// n x d rational matrix whose rows are points with centroid at the origin
/// and full column rank d.
struct LegalMatrix {
  RatMatrix rows;

  size_t n() const { return rows.size(); }
  size_t d() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// A legal matrix together with an exact orthogonal dual: primal^T * dual = 0,
/// the dual columns also orthogonal to the all-ones vector, full column rank
/// n - d - 1. Row i of the dual, read as a point, is the dual of point i.
struct GaleConfiguration {
  LegalMatrix primal;
  RatMatrix dual;
  std::vector<Point> dual_points;
};

/// Face counts (f_{-1}, f_0, ..., f_{d-1}) of a simplicial polytope; the
/// leading entry counts the empty face and is always 1.
struct FVector {
  std::vector<Count> entries;

  bool operator==(const FVector&) const = default;
};

/// A planar multiset of directions: one entry per distinct ray through the
/// origin, with its multiplicity and the aggregate counts of the other
/// points. Directions are stored as primitive integer representatives of
/// their rays; only the ray matters.
struct DirectionStat {
  Point h;
  long m = 0;  // points on this ray
  long o = 0;  // points on the opposite ray
  long l = 0;  // points strictly left of the line through the ray
  long r = 0;  // points strictly right of it
};

struct DirectedMultiset {
  std::vector<DirectionStat> directions;
  long n = 0;  // total number of points, multiplicities included
};

/// Translates the centroid to the origin and validates full rank.
/// Throws ParseError unless n > d >= 1; DegenerateError when the points lie
/// in a common hyperplane (rank below d).
LegalMatrix legalize(const std::vector<Point>& points);

/// Exact orthogonal dual via elimination on the columns of the primal and
/// the all-ones row. Any basis of that nullspace is acceptable: every count
/// taken downstream is basis-independent.
GaleConfiguration gale_dual(const LegalMatrix& a);

/// f-vector of conv(points) for points in general position: face counts are
/// read off the Gale dual as origin-embracing subset counts, f_i with subset
/// size n - i - 1. A simplex (n = d + 1) is answered directly.
/// Throws DegenerateError when the input is not in general position.
FVector f_vector(const std::vector<Point>& points, uint64_t seed = 0);

/// Number of facets of conv(points): the f-vector's top entry, computed
/// without the lower faces.
Count facet_count(const std::vector<Point>& points, uint64_t seed = 0);

/// Groups planar points by ray direction and fills the per-direction stats.
/// Throws DegenerateError on a point at the origin.
DirectedMultiset project_to_circle(const std::vector<Point>& points);

/// Minimal origin-embracing subsets of the multiset: antipodal pairs plus
/// triangles that strictly surround the origin and contain no such pair.
Count minimal_embracing_count(const DirectedMultiset& m);

/// The size-2 term alone: antipodal pairs.
Count minimal_pair_count(const DirectedMultiset& m);

/// Triples with points on three pairwise distinct rays; a pair on opposite
/// rays is allowed, only shared rays are not.
Count proper_triangle_count(const DirectedMultiset& m);

/// The size-3 term alone: embracing triangles containing no antipodal pair.
Count minimal_triangle_count(const DirectedMultiset& m);

}  // namespace wheelset
