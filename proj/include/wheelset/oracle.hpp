#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wheelset/exact.hpp"
#include "wheelset/graph_count.hpp"

namespace wheelset {

/// Independent brute-force counters used to validate the closed-form engines.
/// All of them enumerate explicitly and are intentionally naive; they enforce
/// small-input bounds and throw BoundError beyond them.

/// Number of k-subsets of pts whose convex hull strictly contains w.
/// Dimension is taken from the points; requires pts.size() <= 16.
Count oracle_embrace(const std::vector<Point>& pts, const Point& w, size_t k);

/// Number of crossing-free geometric graphs of the class on the given planar
/// point set (at most 10 points). Works on arbitrary point sets in general
/// position, not only conowheel sets.
Count oracle_graph_count(GraphClass cls, const std::vector<Point>& pts);

/// Facets of conv(pts) in R^d: all d-subsets whose hyperplane has every other
/// point strictly on one side. Indices ascending within a facet, facets sorted.
std::vector<std::vector<int>> oracle_facets(const std::vector<Point>& pts);

/// f-vector (f_0, ..., f_{d-1}) of the simplicial polytope conv(pts), derived
/// from the facet list: a set of i+1 vertices spans an i-face exactly when
/// some facet contains it. Requires every point to be a vertex.
std::vector<Count> oracle_fvector(const std::vector<Point>& pts);

/// Number of crossing-free geometric graphs on pts isomorphic to a member of
/// the abstract family. Distinct edge sets are counted once even when several
/// members or several vertex maps produce them. When require_edge is set,
/// only graphs containing that segment (an index pair into pts) are counted.
Count oracle_embedding_count(const std::vector<AbstractGraph>& graphs,
                             const std::vector<Point>& pts,
                             std::pair<int, int> require_edge = {-1, -1});

/// Abstract families on m vertices for spot checks.
std::vector<AbstractGraph> abstract_k4_with_isolated(size_t m);
std::vector<AbstractGraph> abstract_cycle(size_t m);
std::vector<AbstractGraph> abstract_matchings(size_t m);

/// Where an expected value attached to a fixture comes from: a count stated
/// in the source material, a value derived here by independent computation,
/// or an immediate consequence of the construction.
enum class Provenance { published, derived, trivial };

struct ExpectedValue {
  std::string value;
  Provenance provenance = Provenance::derived;
};

/// One configuration of a fixture: the base points plus, when the
/// configuration distinguishes one, an extra point (hub or query), mirroring
/// the w-line of the point-file format.
struct FixtureSet {
  std::vector<Point> points;
  std::optional<Point> extra;
};

struct Fixture {
  std::string name;
  std::vector<FixtureSet> sets;
  std::map<std::string, ExpectedValue> expected;
};

/// Frozen coordinate data. Names: appendix_b_pair (two planar 7-point sets
/// sharing their per-point frequency-vector multiset but with triangulation
/// counts 25 and 26), appendix_c_pair (two 7-point sets in R^3 sharing the
/// frequency vector (0,12,0,9,0,0) with simplicial depths 6 and 4 at the
/// origin), fig1_trio (three planar conowheel realizations with n = 7:
/// convex position, an intermediate wheel, and the symmetric wheel).
/// Throws ParseError on unknown names.
Fixture fixture(const std::string& name);

}  // namespace wheelset
