#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "wheelset/wheel.hpp"

namespace wheelset {

enum class GraphClass {
  embracing_triangles,
  spanning_cycles,
  spanning_paths,
  matchings,
  spanning_trees,
  triangulations,
  convex_partitions,
};

GraphClass parse_graph_class(const std::string& name);
std::string to_string(GraphClass cls);
const std::vector<GraphClass>& all_graph_classes();

/// Mutation table of one graph family on n outer points. Everything lives on
/// the slice l + r = n - 1 (spokes) and i + j = n - 2 (mutations):
///   delta[i]      = delta_{i, n-2-i}
///   lambda[l]     = lambda_{l, n-1-l},  lambda[l] = lambda[l+1] + delta[l]
///   gamma         = anchor_convex + (1/2) sum_l lambda[l]
///   lambda_cap[k] = gamma/n - (1/2) lambda[(n-1+k)/2]  (per-frequency weight)
/// gamma and lambda_cap are exact rationals; for triangulations gamma is a
/// half-integer and the anchor is excluded from gamma (the formula covers
/// wheel sets only; anchor_convex still holds the convex polygon count).
struct GraphClassTable {
  GraphClass class_id;
  size_t n = 0;
  std::vector<Int> delta;
  std::vector<Int> lambda;
  Int c_n;               // additive constant lambda_{n-1,0}
  Rat gamma;
  std::vector<Rat> lambda_cap;  // zero at every k with the parity of n
  Count anchor_convex;          // count on n+1 points in convex position

  Int delta_at(size_t i, size_t j) const;    // requires i + j = n - 2
  Int lambda_at(size_t l, size_t r) const;   // requires l + r = n - 1
};

GraphClassTable build_class_table(GraphClass cls, size_t n);

/// Count of crossing-free structures of the class on a conowheel set with the
/// given frequency vector. Triangulations of a set in convex position are not
/// covered by the mutation engine; for them the count C_{n-1} of the convex
/// polygon is returned with convex_convention set.
struct CountResult {
  Count value;
  bool convex_convention = false;
};

CountResult count(GraphClass cls, const FrequencyVector& f);
CountResult count(GraphClass cls, const ConoWheelSet& s);

/// Numbers of embracing k-sets, k = 3..n; counts[k-3] = embr_k.
struct EmbraceProfile {
  size_t n = 0;
  std::vector<Count> counts;

  const Count& embr(size_t k) const;  // k in 3..n
};

/// embr_k = binom(n,k) - sum_h binom(l(h), k-1) for k = 3..n.
EmbraceProfile embrace_counts_2d(const ConoWheelSet& s);

/// Inverts the embrace profile to the unique frequency vector: the system
/// binom(n,k) - embr_k = sum_j L_j binom(j, k-1) is unitriangular in the
/// left-count histogram L. Throws InconsistentProfileError when no
/// non-negative integer solution exists.
FrequencyVector frequency_from_embrace(const EmbraceProfile& profile);

/// All hub-embracing index triples of the outer points.
struct TriangleFamily {
  size_t n = 0;
  std::set<std::array<int, 3>> triples;
};

TriangleFamily triangle_family(const ConoWheelSet& s);

/// Rebuilds the order type (canonical necklace, reflections identified) from
/// the triangle family alone. Throws NotRealizableError when the family is
/// inconsistent with every conowheel set.
std::string order_type_from_triangles(const TriangleFamily& fam);

/// Number of 4-point subsets in convex respectively non-convex position, for
/// an arbitrary planar point set in general position.
struct CrossingStats {
  Count convex_quads;
  Count concave_quads;
};

CrossingStats crossing_stats(const std::vector<Point>& pts);

/// Checks that delta_{i,j} >= 0 for i < j, and whether the balanced wheel's
/// frequency vector maximizes the count over all frequency vectors of size n.
struct SymMaximizerReport {
  bool delta_nonneg = false;
  bool sym_is_max = false;
};

SymMaximizerReport check_sym_maximizer(GraphClass cls, size_t n);

/// An abstract graph as an edge list over vertices 0..n (n+1 vertices).
using AbstractGraph = std::vector<std::pair<int, int>>;

/// delta_{i,j} for an explicit family of abstract graphs on i+j+3 vertices,
/// evaluated on the canonical mutation placement: h1=(0,1), h2=(0,-1), i
/// points on the left unit arc, j on the right, and the last point moving
/// from (-1/1000, 0) to (+1/1000, 0). Counts embeddings that use the edge
/// {h1, h2} on both sides and returns the increment.
Int custom_class_delta(const std::vector<AbstractGraph>& graphs, size_t i, size_t j,
                       size_t bound = 9);

/// The two canonical placements of the mutation figure, as full point lists
/// (h1, h2, i left points, j right points, moving point last). first = moving
/// point on the i side, second = on the j side.
std::pair<std::vector<Point>, std::vector<Point>> mutation_pair(size_t i, size_t j);

}  // namespace wheelset
