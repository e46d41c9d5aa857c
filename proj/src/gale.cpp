#include "wheelset/gale.hpp"

#include <algorithm>
#include <map>

#include "wheelset/depth.hpp"
#include "wheelset/sequences.hpp"

namespace wheelset {

namespace {

Count rat_to_count(const Rat& x, const char* what) {
  if (denominator(x) != 1) throw Error(std::string(what) + " is not integral");
  return numerator(x);
}

// embracing counts on the dual configuration; a degenerate dual certifies a
// degenerate primal, so the error is rephrased accordingly
Count dual_embrace(const GaleConfiguration& g, size_t k, uint64_t seed) {
  const size_t dp = g.primal.n() - g.primal.d() - 1;
  const Point origin(std::vector<Rat>(dp, Rat(0)));
  try {
    return embrace_count({g.dual_points, origin, k}, seed);
  } catch (const DegenerateError&) {
    throw DegenerateError("primal points are not in general position");
  }
}

}  // namespace

LegalMatrix legalize(const std::vector<Point>& points) {
  const size_t n = points.size();
  if (n == 0) throw ParseError("no points");
  const size_t d = points[0].dim();
  if (d == 0) throw ParseError("points must have dimension at least 1");
  if (n <= d) throw ParseError("need more points than the dimension");
  for (const Point& p : points)
    if (p.dim() != d) throw ParseError("point dimension mismatch");

  std::vector<Rat> centroid(d, Rat(0));
  for (const Point& p : points)
    for (size_t c = 0; c < d; ++c) centroid[c] += p[c];
  for (Rat& x : centroid) x /= Rat(static_cast<long>(n));

  LegalMatrix a;
  a.rows.assign(n, std::vector<Rat>(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < d; ++c) a.rows[i][c] = points[i][c] - centroid[c];

  RatMatrix copy = a.rows;
  if (rank(copy) != d)
    throw DegenerateError("rank deficient: points lie in a hyperplane");
  return a;
}

GaleConfiguration gale_dual(const LegalMatrix& a) {
  const size_t n = a.n();
  const size_t d = a.d();
  if (n == 0 || d == 0 || n <= d) throw ParseError("matrix is not legal");

  // nullspace of the d+1 constraint rows: the columns of the matrix plus the
  // all-ones vector; zero column sums make the ones row independent
  RatMatrix constraints(d + 1, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < d; ++c) constraints[c][i] = a.rows[i][c];
    constraints[d][i] = 1;
  }
  const auto basis = nullspace(constraints);
  if (basis.size() != n - d - 1)
    throw DegenerateError("matrix is not legal: rank below its width");

  GaleConfiguration g;
  g.primal = a;
  g.dual.assign(n, std::vector<Rat>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) g.dual[i][j] = basis[j][i];
  g.dual_points.reserve(n);
  for (size_t i = 0; i < n; ++i) g.dual_points.emplace_back(g.dual[i]);
  return g;
}

FVector f_vector(const std::vector<Point>& points, uint64_t seed) {
  const LegalMatrix a = legalize(points);
  const size_t n = a.n();
  const size_t d = a.d();
  FVector f;
  f.entries.assign(d + 1, Count(1));
  if (n == d + 1) {
    for (size_t i = 0; i < d; ++i)
      f.entries[i + 1] = binomial(static_cast<long long>(d) + 1,
                                  static_cast<long long>(i) + 1);
    return f;
  }
  const GaleConfiguration g = gale_dual(a);
  for (size_t i = 0; i < d; ++i)
    f.entries[i + 1] = dual_embrace(g, n - i - 1, seed);
  return f;
}

Count facet_count(const std::vector<Point>& points, uint64_t seed) {
  const LegalMatrix a = legalize(points);
  if (a.n() == a.d() + 1) return Count(static_cast<long>(a.d()) + 1);
  return dual_embrace(gale_dual(a), a.n() - a.d(), seed);
}

DirectedMultiset project_to_circle(const std::vector<Point>& points) {
  DirectedMultiset out;
  std::map<std::vector<Int>, long> rays;
  for (const Point& p : points) {
    if (p.dim() != 2) throw ParseError("directed multisets are planar");
    if (is_origin(p)) throw DegenerateError("point at the origin");
    rays[primitive_direction(p.coords)] += 1;
  }
  out.n = static_cast<long>(points.size());
  for (const auto& [dir, mult] : rays) {
    DirectionStat st;
    st.h = Point{Rat(dir[0]), Rat(dir[1])};
    st.m = mult;
    const auto opp = rays.find({-dir[0], -dir[1]});
    st.o = opp == rays.end() ? 0 : opp->second;
    for (const auto& [other, om] : rays) {
      const int s = sign(dir[0] * other[1] - dir[1] * other[0]);
      if (s > 0)
        st.l += om;
      else if (s < 0)
        st.r += om;
    }
    out.directions.push_back(std::move(st));
  }
  return out;
}

Count minimal_pair_count(const DirectedMultiset& m) {
  Int twice(0);
  for (const DirectionStat& st : m.directions) twice += Int(st.m) * st.o;
  return exact_div(twice, Int(2));
}

Count proper_triangle_count(const DirectedMultiset& m) {
  Int six(0);
  for (const DirectionStat& st : m.directions)
    six += Int(st.m) * (Int(m.n) - st.m) * (Int(m.n) - 2 * st.m);
  return exact_div(six, Int(6));
}

Count minimal_triangle_count(const DirectedMultiset& m) {
  Int lr_sum(0);
  for (const DirectionStat& st : m.directions)
    lr_sum += Int(st.m) * Int(st.l) * st.r;
  return exact_div(lr_sum - proper_triangle_count(m), Int(2));
}

Count minimal_embracing_count(const DirectedMultiset& m) {
  // single closed form over the multiset elements; agrees with the sum of
  // the pair and triangle terms, which the tests assert
  Rat total(0);
  for (const DirectionStat& st : m.directions) {
    Rat term = Rat(st.l) * Rat(st.r) + Rat(st.o);
    term -= Rat((Int(m.n) - st.m) * (Int(m.n) - 2 * st.m), Int(6));
    total += Rat(st.m) * term;
  }
  total /= 2;
  return rat_to_count(total, "minimal embracing count");
}

}  // namespace wheelset
