#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "wheelset/depth.hpp"
#include "wheelset/gale.hpp"
#include "wheelset/graph_count.hpp"
#include "wheelset/linalg.hpp"
#include "wheelset/oracle.hpp"
#include "wheelset/sequences.hpp"
#include "wheelset/wheel.hpp"

using namespace wheelset;

namespace {

Point rand_point(std::mt19937_64& rng, size_t d) {
  std::uniform_int_distribution<long> num(-200, 200);
  const long dens[] = {1, 2, 3, 5, 7};
  std::uniform_int_distribution<size_t> den(0, 4);
  std::vector<Rat> c(d);
  for (size_t i = 0; i < d; ++i) c[i] = Rat(num(rng), dens[den(rng)]);
  return Point(c);
}

std::vector<Point> rand_points(std::mt19937_64& rng, size_t n, size_t d) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (size_t i = 0; i < n; ++i) pts.push_back(rand_point(rng, d));
  return pts;
}

int cross_sign(const Point& a, const Point& b) {
  const Rat c = a[0] * b[1] - a[1] * b[0];
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

int dot_sign(const Point& a, const Point& b) {
  const Rat c = a[0] * b[0] + a[1] * b[1];
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// opposite rays with the origin strictly between
bool pair_embraces(const Point& a, const Point& b) {
  return cross_sign(a, b) == 0 && dot_sign(a, b) < 0;
}

// origin strictly inside the triangle; boundary cases are covered by an
// embracing pair and therefore never minimal
bool triple_minimal(const Point& a, const Point& b, const Point& c) {
  const int s1 = cross_sign(a, b);
  const int s2 = cross_sign(b, c);
  const int s3 = cross_sign(c, a);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

bool same_ray(const Point& a, const Point& b) {
  return cross_sign(a, b) == 0 && dot_sign(a, b) > 0;
}

struct MinimalTally {
  long pairs = 0;
  long triples = 0;
  long proper = 0;
};

MinimalTally enumerate_minimal(const std::vector<Point>& elems) {
  MinimalTally t;
  const size_t n = elems.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (pair_embraces(elems[i], elems[j])) ++t.pairs;
      for (size_t k = j + 1; k < n; ++k) {
        if (triple_minimal(elems[i], elems[j], elems[k])) ++t.triples;
        if (!same_ray(elems[i], elems[j]) && !same_ray(elems[j], elems[k]) &&
            !same_ray(elems[i], elems[k]))
          ++t.proper;
      }
    }
  return t;
}

void check_multiset_shape(const DirectedMultiset& ms) {
  std::map<std::vector<Rat>, long> mult;
  for (const DirectionStat& st : ms.directions) mult[st.h.coords] = st.m;
  long total = 0;
  for (const DirectionStat& st : ms.directions) {
    CHECK(st.m >= 1);
    CHECK(st.l + st.r + st.m + st.o == ms.n);
    const auto opp = mult.find({-st.h[0], -st.h[1]});
    CHECK(st.o == (opp == mult.end() ? 0 : opp->second));
    total += st.m;
  }
  CHECK(total == ms.n);
}

// all faces of a simplicial polytope are the vertex subsets of its facets
std::vector<Count> fvector_from_facets(const std::vector<std::vector<int>>& facets,
                                       size_t d) {
  std::vector<std::set<std::vector<int>>> faces(d);
  for (const std::vector<int>& facet : facets) {
    const size_t fn = facet.size();
    for (unsigned mask = 1; mask < (1u << fn); ++mask) {
      std::vector<int> sub;
      for (size_t b = 0; b < fn; ++b)
        if (mask & (1u << b)) sub.push_back(facet[b]);
      faces[sub.size() - 1].insert(std::move(sub));
    }
  }
  std::vector<Count> f{Count(1)};
  for (size_t i = 0; i < d; ++i) f.push_back(Count(faces[i].size()));
  return f;
}

void check_euler(const FVector& f, size_t d) {
  REQUIRE(f.entries.size() == d + 1);
  CHECK(f.entries[0] == 1);
  Count alt(0);
  for (size_t i = 1; i <= d; ++i) {
    if (i % 2 == 1)
      alt += f.entries[i];
    else
      alt -= f.entries[i];
  }
  CHECK(alt == (d % 2 == 0 ? Count(0) : Count(2)));
}

// bead sequence of the 2n rays spanned by the points and their antipodes,
// in sweep order; bead 1 marks an original point
Necklace necklace_of_directions(const std::vector<Point>& pts) {
  struct Ray {
    Point dir;
    uint8_t bead;
  };
  std::vector<Ray> rays;
  for (const Point& p : pts) {
    rays.push_back({p, 1});
    rays.push_back({Point{-p[0], -p[1]}, 0});
  }
  auto half = [](const Point& p) {
    return (p[1] < 0 || (p[1] == 0 && p[0] < 0)) ? 1 : 0;
  };
  std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
    const int ha = half(a.dir), hb = half(b.dir);
    if (ha != hb) return ha < hb;
    return cross_sign(a.dir, b.dir) > 0;
  });
  Necklace nk;
  for (const Ray& r : rays) nk.beads.push_back(r.bead);
  return nk;
}

}  // namespace

TEST_CASE("legalize centers and validates point sets") {
  SUBCASE("a zero-sum line is already legal") {
    const LegalMatrix a =
        legalize({Point{Rat(-1)}, Point{Rat(0)}, Point{Rat(1)}});
    REQUIRE(a.n() == 3);
    REQUIRE(a.d() == 1);
    CHECK(a.rows[0][0] == -1);
    CHECK(a.rows[1][0] == 0);
    CHECK(a.rows[2][0] == 1);
  }

  SUBCASE("an uncentered square is translated") {
    const LegalMatrix a = legalize({Point{Rat(1), Rat(1)}, Point{Rat(3), Rat(1)},
                                    Point{Rat(3), Rat(3)}, Point{Rat(1), Rat(3)}});
    const RatMatrix want = {{Rat(-1), Rat(-1)},
                            {Rat(1), Rat(-1)},
                            {Rat(1), Rat(1)},
                            {Rat(-1), Rat(1)}};
    CHECK(a.rows == want);
  }

  SUBCASE("column sums vanish and the rank is full") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 6; ++trial) {
      const size_t d = 1 + trial % 4;
      const LegalMatrix a = legalize(rand_points(rng, d + 3, d));
      for (size_t c = 0; c < d; ++c) {
        Rat sum(0);
        for (size_t i = 0; i < a.n(); ++i) sum += a.rows[i][c];
        CHECK(sum == 0);
      }
      RatMatrix copy = a.rows;
      CHECK(rank(copy) == d);
    }
  }

  SUBCASE("flat inputs are rejected") {
    const std::vector<Point> coplanar = {
        Point{Rat(0), Rat(0), Rat(1)}, Point{Rat(2), Rat(0), Rat(1)},
        Point{Rat(0), Rat(3), Rat(1)}, Point{Rat(2), Rat(3), Rat(1)}};
    CHECK_THROWS_AS(legalize(coplanar), DegenerateError);
    CHECK_THROWS_WITH_AS(legalize(coplanar),
                         "rank deficient: points lie in a hyperplane",
                         DegenerateError);
  }

  SUBCASE("too few points or mixed dimensions are parse errors") {
    CHECK_THROWS_AS(legalize({}), ParseError);
    CHECK_THROWS_AS(legalize({Point{Rat(1), Rat(0), Rat(0)},
                              Point{Rat(0), Rat(1), Rat(0)},
                              Point{Rat(0), Rat(0), Rat(1)}}),
                    ParseError);
    CHECK_THROWS_AS(legalize({Point{Rat(0)}, Point{Rat(1), Rat(2)}}), ParseError);
  }
}

TEST_CASE("the dual is exactly orthogonal to the primal") {
  SUBCASE("three collinear points force the second difference") {
    const GaleConfiguration g =
        gale_dual(legalize({Point{Rat(-1)}, Point{Rat(0)}, Point{Rat(1)}}));
    REQUIRE(g.dual.size() == 3);
    REQUIRE(g.dual[0].size() == 1);
    const Rat b0 = g.dual[0][0];
    REQUIRE(b0 != 0);
    CHECK(g.dual[1][0] == -2 * b0);
    CHECK(g.dual[2][0] == b0);
  }

  SUBCASE("a simplex has an empty dual") {
    const GaleConfiguration g = gale_dual(
        legalize({Point{Rat(0), Rat(0)}, Point{Rat(4), Rat(0)}, Point{Rat(0), Rat(4)}}));
    REQUIRE(g.dual.size() == 3);
    for (const auto& row : g.dual) CHECK(row.empty());
    for (const Point& p : g.dual_points) CHECK(p.dim() == 0);
  }

  SUBCASE("orthogonality, zero column sums, and full column rank") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 8; ++trial) {
      const size_t d = 1 + trial % 4;
      const size_t n = d + 2 + trial % 3;
      const GaleConfiguration g = gale_dual(legalize(rand_points(rng, n, d)));
      const size_t cols = n - d - 1;
      REQUIRE(g.dual.size() == n);
      REQUIRE(g.dual[0].size() == cols);
      for (size_t j = 0; j < cols; ++j) {
        Rat ones(0);
        for (size_t i = 0; i < n; ++i) ones += g.dual[i][j];
        CHECK(ones == 0);
        for (size_t c = 0; c < d; ++c) {
          Rat dot(0);
          for (size_t i = 0; i < n; ++i) dot += g.primal.rows[i][c] * g.dual[i][j];
          CHECK(dot == 0);
        }
      }
      RatMatrix copy = g.dual;
      CHECK(rank(copy) == cols);
      for (size_t i = 0; i < n; ++i) CHECK(g.dual_points[i].coords == g.dual[i]);
    }
  }

  SUBCASE("a rank-deficient matrix is rejected") {
    LegalMatrix broken;
    broken.rows = {{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(2), Rat(2)},
                   {Rat(-2), Rat(-2)}};
    CHECK_THROWS_AS(gale_dual(broken), DegenerateError);
  }
}

TEST_CASE("f vectors of known polytopes") {
  SUBCASE("pentagon") {
    const FVector f = f_vector({Point{Rat(0), Rat(3)}, Point{Rat(3), Rat(1)},
                                Point{Rat(2), Rat(-3)}, Point{Rat(-2), Rat(-2)},
                                Point{Rat(-3), Rat(1)}});
    CHECK(f.entries == std::vector<Count>{1, 5, 5});
  }

  SUBCASE("convex polygons have as many edges as points") {
    for (long n = 3; n <= 8; ++n) {
      std::vector<Point> poly;
      for (long t = 0; t < n; ++t) poly.push_back(Point{Rat(t), Rat(t * t)});
      CHECK(facet_count(poly) == Count(n));
      const FVector f = f_vector(poly);
      CHECK(f.entries == std::vector<Count>{Count(1), Count(n), Count(n)});
      check_euler(f, 2);
    }
  }

  SUBCASE("a moment curve in four dimensions") {
    std::vector<Point> cyc;
    for (long t = 1; t <= 7; ++t)
      cyc.push_back(Point{Rat(t), Rat(t * t), Rat(t * t * t), Rat(t * t * t * t)});
    CHECK(facet_count(cyc) == 14);
    const FVector f = f_vector(cyc);
    CHECK(f.entries == std::vector<Count>{1, 7, 21, 28, 14});
    check_euler(f, 4);
    CHECK(Count(oracle_facets(cyc).size()) == 14);
  }

  SUBCASE("simplices take the direct route") {
    for (size_t d = 1; d <= 5; ++d) {
      std::vector<Point> simplex;
      std::vector<Rat> zero(d, Rat(0));
      simplex.emplace_back(zero);
      for (size_t i = 0; i < d; ++i) {
        std::vector<Rat> e(d, Rat(0));
        e[i] = Rat(static_cast<long>(i) + 2);
        simplex.emplace_back(e);
      }
      CHECK(facet_count(simplex) == Count(static_cast<long>(d) + 1));
      const FVector f = f_vector(simplex);
      for (size_t i = 0; i < d; ++i)
        CHECK(f.entries[i + 1] == binomial(static_cast<long long>(d) + 1,
                                           static_cast<long long>(i) + 1));
      check_euler(f, d);
    }
  }

  SUBCASE("four coplanar equatorial points are degenerate") {
    const std::vector<Point> octa = {
        Point{Rat(1), Rat(0), Rat(0)},  Point{Rat(-1), Rat(0), Rat(0)},
        Point{Rat(0), Rat(1), Rat(0)},  Point{Rat(0), Rat(-1), Rat(0)},
        Point{Rat(0), Rat(0), Rat(1)},  Point{Rat(0), Rat(0), Rat(-1)}};
    CHECK_THROWS_WITH_AS(f_vector(octa), "primal points are not in general position",
                         DegenerateError);
  }
}

TEST_CASE("f vectors agree with facet enumeration") {
  std::mt19937_64 rng(53);
  int successes = 0;
  for (size_t d = 2; d <= 5; ++d)
    for (size_t n = d + 2; n <= d + 4; ++n)
      for (int trial = 0; trial < 3; ++trial) {
        const std::vector<Point> pts = rand_points(rng, n, d);
        std::optional<FVector> f;
        std::vector<std::vector<int>> facets;
        try {
          f = f_vector(pts, 17 * trial + d);
          facets = oracle_facets(pts);
        } catch (const DegenerateError&) {
          continue;
        }
        ++successes;
        CHECK(f->entries == fvector_from_facets(facets, d));
        CHECK(facet_count(pts, trial) == Count(facets.size()));
        CHECK(f->entries.back() == Count(facets.size()));
        CHECK(f->entries[1] <= Count(static_cast<long>(n)));
        check_euler(*f, d);
      }
  // the random coordinates make degeneracies rare; nearly all trials count
  CHECK(successes >= 30);
}

TEST_CASE("facet counts are affine invariants") {
  std::mt19937_64 rng(54);
  const RatMatrix shear = {{Rat(1), Rat(2), Rat(0)},
                           {Rat(0), Rat(1), Rat(3)},
                           {Rat(1), Rat(0), Rat(1)}};
  const RatMatrix mirror = {{Rat(-2), Rat(0), Rat(0)},
                            {Rat(0), Rat(1), Rat(0)},
                            {Rat(0), Rat(0), Rat(1)}};
  const std::vector<Rat> shift = {Rat(3), Rat(-1), Rat(2)};
  auto apply = [&](const RatMatrix& m, const std::vector<Point>& pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
      std::vector<Rat> c(3, Rat(0));
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) c[i] += m[i][j] * p[j];
        c[i] += shift[i];
      }
      out.emplace_back(c);
    }
    return out;
  };
  int successes = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Point> pts = rand_points(rng, 7, 3);
    Count base;
    try {
      base = facet_count(pts, trial);
    } catch (const DegenerateError&) {
      continue;
    }
    ++successes;
    CHECK(facet_count(apply(shear, pts), trial) == base);
    CHECK(facet_count(apply(mirror, pts), trial) == base);
  }
  CHECK(successes >= 4);
}

TEST_CASE("dual points of a dimension plus three set make a wheel") {
  std::mt19937_64 rng(55);
  int successes = 0;
  for (size_t d = 2; d <= 6; ++d)
    for (int trial = 0; trial < 3; ++trial) {
      const size_t n = d + 3;
      const std::vector<Point> pts = rand_points(rng, n, d);
      Count fc;
      std::vector<std::vector<int>> facets;
      try {
        fc = facet_count(pts, trial);
        facets = oracle_facets(pts);
      } catch (const DegenerateError&) {
        continue;
      }
      ++successes;
      CHECK(fc == Count(facets.size()));

      const GaleConfiguration g = gale_dual(legalize(pts));
      REQUIRE(g.dual_points[0].dim() == 2);
      const DirectedMultiset ms = project_to_circle(g.dual_points);
      check_multiset_shape(ms);
      REQUIRE(ms.directions.size() == n);
      for (const DirectionStat& st : ms.directions) {
        CHECK(st.m == 1);
        CHECK(st.o == 0);
      }
      CHECK(minimal_pair_count(ms) == 0);
      CHECK(minimal_triangle_count(ms) == fc);
      CHECK(minimal_embracing_count(ms) == fc);

      // the ray arrangement is a genuine wheel order type: realizing its
      // bead sequence reproduces the facet count as the embracing 3-sets
      const ConoWheelSet cw = realize_necklace(necklace_of_directions(g.dual_points));
      CHECK(embrace_counts_2d(cw).embr(3) == fc);
    }
  CHECK(successes >= 12);
}

TEST_CASE("circle projection splits rays and multiplicities") {
  SUBCASE("collinear points fall into two opposite rays") {
    const DirectedMultiset ms = project_to_circle(
        {Point{Rat(2), Rat(0)}, Point{Rat(1), Rat(0)}, Point{Rat(-3), Rat(0)}});
    check_multiset_shape(ms);
    REQUIRE(ms.directions.size() == 2);
    CHECK(ms.n == 3);
    CHECK(ms.directions[0].h.coords == std::vector<Rat>{Rat(-1), Rat(0)});
    CHECK(ms.directions[0].m == 1);
    CHECK(ms.directions[0].o == 2);
    CHECK(ms.directions[0].l == 0);
    CHECK(ms.directions[0].r == 0);
    CHECK(ms.directions[1].h.coords == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(ms.directions[1].m == 2);
    CHECK(ms.directions[1].o == 1);
    CHECK(minimal_pair_count(ms) == 2);
    CHECK(proper_triangle_count(ms) == 0);
    CHECK(minimal_triangle_count(ms) == 0);
    CHECK(minimal_embracing_count(ms) == 2);
  }

  SUBCASE("scaling along a ray only grows the multiplicity") {
    const DirectedMultiset ms = project_to_circle(
        {Point{Rat(1), Rat(2)}, Point{Rat(2), Rat(4)}, Point{Rat(1, 2), Rat(1)}});
    REQUIRE(ms.directions.size() == 1);
    CHECK(ms.directions[0].m == 3);
    CHECK(ms.directions[0].o == 0);
    CHECK(minimal_embracing_count(ms) == 0);
  }

  SUBCASE("generic directions are simple") {
    const std::vector<Point> pts = {Point{Rat(1), Rat(0)}, Point{Rat(1), Rat(1)},
                                    Point{Rat(-1), Rat(2)}, Point{Rat(-2), Rat(-1)},
                                    Point{Rat(1), Rat(-3)}};
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        REQUIRE(cross_sign(pts[i], pts[j]) != 0);
    const DirectedMultiset ms = project_to_circle(pts);
    check_multiset_shape(ms);
    for (const DirectionStat& st : ms.directions) {
      CHECK(st.m == 1);
      CHECK(st.o == 0);
      CHECK(st.l + st.r == 4);
    }
  }

  SUBCASE("the origin and stray dimensions are rejected") {
    CHECK_THROWS_AS(
        project_to_circle({Point{Rat(1), Rat(1)}, Point{Rat(0), Rat(0)}}),
        DegenerateError);
    CHECK_THROWS_AS(project_to_circle({Point{Rat(1), Rat(1), Rat(1)}}), ParseError);
  }
}

TEST_CASE("minimal embracing counts match exhaustive enumeration") {
  SUBCASE("worked multisets") {
    const DirectedMultiset antipodal =
        project_to_circle({Point{Rat(2), Rat(0)}, Point{Rat(-1), Rat(0)}});
    CHECK(minimal_embracing_count(antipodal) == 1);
    CHECK(minimal_pair_count(antipodal) == 1);
    CHECK(minimal_triangle_count(antipodal) == 0);

    const DirectedMultiset spread = project_to_circle(
        {Point{Rat(1), Rat(0)}, Point{Rat(-1), Rat(2)}, Point{Rat(-1), Rat(-2)}});
    CHECK(minimal_embracing_count(spread) == 1);
    CHECK(minimal_pair_count(spread) == 0);
    CHECK(minimal_triangle_count(spread) == 1);
    CHECK(proper_triangle_count(spread) == 1);

    const DirectedMultiset axes = project_to_circle(
        {Point{Rat(1), Rat(0)}, Point{Rat(0), Rat(1)}, Point{Rat(-1), Rat(0)},
         Point{Rat(0), Rat(-1)}});
    CHECK(minimal_embracing_count(axes) == 2);
    CHECK(minimal_pair_count(axes) == 2);
    CHECK(minimal_triangle_count(axes) == 0);
    CHECK(proper_triangle_count(axes) == 4);
  }

  SUBCASE("random multisets with repeats and antipodes") {
    std::mt19937_64 rng(56);
    std::uniform_int_distribution<long> coord(-4, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Point> elems;
      while (elems.size() < 4) {
        const long x = coord(rng), y = coord(rng);
        if (x == 0 && y == 0) continue;
        const int m = mult(rng);
        const bool with_opposite = coin(rng) == 1;
        for (int c = 0; c < m && elems.size() < 10; ++c)
          elems.push_back(Point{Rat(x), Rat(y)});
        if (with_opposite)
          for (int c = mult(rng); c > 0 && elems.size() < 10; --c)
            elems.push_back(Point{Rat(-x), Rat(-y)});
      }
      const MinimalTally want = enumerate_minimal(elems);
      const DirectedMultiset ms = project_to_circle(elems);
      check_multiset_shape(ms);
      CHECK(minimal_pair_count(ms) == Count(want.pairs));
      CHECK(minimal_triangle_count(ms) == Count(want.triples));
      CHECK(proper_triangle_count(ms) == Count(want.proper));
      CHECK(minimal_embracing_count(ms) == Count(want.pairs + want.triples));
    }
  }
}

TEST_CASE("the size three term counts the hub triangles") {
  for (size_t n = 5; n <= 7; ++n)
    for (const FrequencyVector& f : enumerate_frequency_vectors(n)) {
      const ConoWheelSet cw = realize_frequency_vector(f);
      const DirectedMultiset ms = project_to_circle(cw.hull);
      check_multiset_shape(ms);
      CHECK(minimal_pair_count(ms) == 0);
      const Count triangles = minimal_triangle_count(ms);
      CHECK(triangles == Count(triangle_family(cw).triples.size()));
      CHECK(triangles == embrace_counts_2d(cw).embr(3));
      CHECK(minimal_embracing_count(ms) == triangles);
    }
}
