#pragma once

#include <cstdint>
#include <vector>

#include "wheelset/exact.hpp"
#include "wheelset/linalg.hpp"

namespace wheelset {

/// Asks for the number of k-subsets of points whose convex hull contains the
/// query point. The query point is translated to the origin internally; after
/// translation no point may coincide with it, and general position relative
/// to the origin is verified lazily wherever an orientation sign is taken.
struct EmbraceQuery {
  std::vector<Point> points;
  Point query;
  size_t k = 0;
};

/// Halfspace counts of one (d-1)-tuple whose convex hull crosses the chosen
/// 2-flat: l counts the points on the positive side of the hyperplane spanned
/// by the origin and the tuple (in increasing index order), r the negative
/// side; l + r = n - d + 1.
struct TupleStat {
  std::vector<int> tuple;
  long l = 0;
  long r = 0;
};

/// A generic 2-flat through the origin, a projection eliminating it, and the
/// halfspace statistics of every tuple hull the flat crosses.
struct ProjectionStep {
  std::vector<std::vector<Rat>> flat_basis;  // two independent d-vectors
  RatMatrix projection_map;                  // (d-2) x d, kernel = the flat
  std::vector<TupleStat> tuple_stats;
};

/// Number of embracing k-subsets, by dimension reduction: each step projects
/// out a generic 2-flat, counts the k-sets that embrace only in the
/// projection through the tuple statistics, and recurses; sets in the plane
/// and on the line are counted directly. Deterministic per seed, and the
/// result is independent of the seed.
Count embrace_count(const EmbraceQuery& q, uint64_t seed = 0);

/// Number of (d+1)-subsets of points whose convex hull contains w.
Count simplicial_depth(const std::vector<Point>& points, const Point& w,
                       uint64_t seed = 0);

/// Rejection-samples a 2-flat through the origin that avoids every point,
/// keeps the projected set in general position relative to the origin, and
/// crosses every (d-1)-tuple hull transversally; the accepted step carries
/// the tuple statistics. Deterministic per seed; throws FlatRetryError after
/// 64 failed candidates. Requires d >= 3.
ProjectionStep choose_generic_flat(const std::vector<Point>& points, size_t d,
                                   uint64_t seed);

/// Halfspace statistics of every (d-1)-tuple whose hull crosses the flat of
/// the step (its stored tuple_stats are ignored). In R^3 a rotational sweep
/// around every anchor produces all pair counts in O(n^2 log n) unless naive
/// is set; higher dimensions test each tuple directly.
std::vector<TupleStat> tuple_halfspace_counts(const std::vector<Point>& points,
                                              const ProjectionStep& step,
                                              bool naive = false);

/// Frequency vector in dimension d: entry i counts the unordered (d-1)-tuples
/// rho of points with | l(rho) - r(rho) | = i relative to the hyperplane
/// through w and rho. Length n - d + 2, entries summing to binom(n, d-1).
std::vector<Count> frequency_vector_d(const std::vector<Point>& points,
                                      const Point& w);

}  // namespace wheelset
