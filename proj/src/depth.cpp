#include "wheelset/depth.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

#include "wheelset/sequences.hpp"

namespace wheelset {

namespace {

// Thrown when a candidate flat fails a genericity test; the flat chooser
// rejects the candidate, the public entry points translate it to degenerate.
struct FlatRejected {};

constexpr int kFlatRetryBudget = 64;

const char* kZeroSign = "zero orientation sign: general position violated";

std::vector<Point> translate_to_origin(const std::vector<Point>& pts,
                                       const Point& w) {
  const size_t d = w.dim();
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (p.dim() != d) throw ParseError("point dimension mismatch");
    Point q = p - w;
    if (is_origin(q))
      throw DegenerateError("a point coincides with the query point");
    out.push_back(std::move(q));
  }
  return out;
}

void require_uniform_dimension(const std::vector<Point>& pts, size_t d) {
  for (const Point& p : pts)
    if (p.dim() != d) throw ParseError("point dimension mismatch");
}

// Embracing k-sets on the line: a subset embraces the origin exactly when it
// has points on both sides.
Count embr_line(const std::vector<Point>& pts, size_t k) {
  long long pos = 0;
  long long neg = 0;
  for (const Point& p : pts)
    (sign(p[0]) > 0 ? pos : neg) += 1;
  const long long kk = static_cast<long long>(k);
  Count c = binomial(pos + neg, kk) - binomial(pos, kk) - binomial(neg, kk);
  if (c < 0) throw Error("embracing count came out negative");
  return c;
}

// Embracing k-sets in the plane: every non-embracing subset has a unique
// clockwise-most member h, with the rest among the l(h) points on the left
// of the ray from the origin through h.
Count embr_plane(const std::vector<Point>& pts, size_t k) {
  const size_t n = pts.size();
  const long long kk = static_cast<long long>(k);
  Count c = binomial(static_cast<long long>(n), kk);
  for (size_t i = 0; i < n; ++i) {
    long long l = 0;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const int s = sign(pts[i][0] * pts[j][1] - pts[i][1] * pts[j][0]);
      if (s == 0) throw DegenerateError(kZeroSign);
      if (s > 0) ++l;
    }
    c -= binomial(l, kk - 1);
  }
  if (c < 0) throw Error("embracing count came out negative");
  return c;
}

std::vector<Rat> apply_map(const RatMatrix& m, const Point& p) {
  std::vector<Rat> out(m.size(), Rat(0));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c)
      if (m[r][c] != 0) out[r] += m[r][c] * p[c];
  return out;
}

bool is_zero_vector(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

// Advances c to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Halfspace split of all points not in the tuple, against the hyperplane
// spanned by the origin and the tuple (rows in increasing index order).
TupleStat split_against_tuple(const std::vector<Point>& pts,
                              const std::vector<int>& tuple) {
  const size_t d = pts.empty() ? tuple.size() + 1 : pts[0].dim();
  TupleStat st;
  st.tuple = tuple;
  RatMatrix m(d, std::vector<Rat>(d));
  for (size_t r = 0; r + 1 < d; ++r)
    m[r] = pts[tuple[r]].coords;
  for (size_t q = 0; q < pts.size(); ++q) {
    if (std::find(tuple.begin(), tuple.end(), static_cast<int>(q)) !=
        tuple.end())
      continue;
    m[d - 1] = pts[q].coords;
    const int s = det_sign(m);
    if (s == 0) throw DegenerateError(kZeroSign);
    (s > 0 ? st.l : st.r) += 1;
  }
  return st;
}

// Integer 3-vector helpers for the d = 3 paths.
using IVec3 = std::array<Int, 3>;

IVec3 cross3(const IVec3& a, const IVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Int dot3(const IVec3& a, const IVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

int det3_sign(const IVec3& a, const IVec3& b, const IVec3& c) {
  return sign(dot3(a, cross3(b, c)));
}

std::vector<IVec3> primitive_directions_3d(const std::vector<Point>& pts) {
  std::vector<IVec3> dirs;
  dirs.reserve(pts.size());
  for (const Point& p : pts) {
    const std::vector<Int> v = primitive_direction(p.coords);
    dirs.push_back({v[0], v[1], v[2]});
  }
  return dirs;
}

// Side of each point against the flat, from the single projection row.
std::vector<int> flat_sides(const std::vector<Point>& pts,
                            const RatMatrix& map) {
  std::vector<int> sides(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const int s = sign(apply_map(map, pts[i])[0]);
    if (s == 0) throw FlatRejected{};
    sides[i] = s;
  }
  return sides;
}

std::vector<TupleStat> stats_3d_naive(const std::vector<Point>& pts,
                                      const RatMatrix& map) {
  const std::vector<int> sides = flat_sides(pts, map);
  const std::vector<IVec3> dirs = primitive_directions_3d(pts);
  const size_t n = pts.size();
  std::vector<TupleStat> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (sides[i] == sides[j]) continue;
      TupleStat st;
      st.tuple = {static_cast<int>(i), static_cast<int>(j)};
      for (size_t q = 0; q < n; ++q) {
        if (q == i || q == j) continue;
        const int s = det3_sign(dirs[i], dirs[j], dirs[q]);
        if (s == 0) throw DegenerateError(kZeroSign);
        (s > 0 ? st.l : st.r) += 1;
      }
      out.push_back(std::move(st));
    }
  return out;
}

// One rotational sweep per anchor a: the other directions are written in an
// oriented basis of the plane orthogonal to a, sorted by angle, and a
// two-pointer pass counts for every x the points q with
// det(a, x, q) > 0. Total O(n^2 log n).
struct RawDir {
  Int x;
  Int y;
  int idx;
};

int cross2_sign(const RawDir& a, const RawDir& b) {
  return sign(a.x * b.y - a.y * b.x);
}

std::vector<TupleStat> stats_3d_sweep(const std::vector<Point>& pts,
                                      const RatMatrix& map) {
  const std::vector<int> sides = flat_sides(pts, map);
  const std::vector<IVec3> dirs = primitive_directions_3d(pts);
  const size_t n = pts.size();
  std::vector<TupleStat> out;
  std::vector<RawDir> order;
  std::vector<long> cnt(n, 0);
  for (size_t a = 0; a < n; ++a) {
    bool has_partner = false;
    for (size_t j = a + 1; j < n && !has_partner; ++j)
      has_partner = sides[j] != sides[a];
    if (!has_partner) continue;

    IVec3 u{};
    for (int m = 0; m < 3; ++m) {
      IVec3 e{Int(0), Int(0), Int(0)};
      e[m] = 1;
      u = cross3(dirs[a], e);
      if (u[0] != 0 || u[1] != 0 || u[2] != 0) break;
    }
    const IVec3 v = cross3(dirs[a], u);

    order.clear();
    for (size_t x = 0; x < n; ++x) {
      if (x == a) continue;
      RawDir r{dot3(dirs[x], u), dot3(dirs[x], v), static_cast<int>(x)};
      if (r.x == 0 && r.y == 0) throw DegenerateError(kZeroSign);
      order.push_back(std::move(r));
    }
    std::sort(order.begin(), order.end(),
              [](const RawDir& p, const RawDir& q) {
                const int hp = (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0;
                const int hq = (q.y < 0 || (q.y == 0 && q.x < 0)) ? 1 : 0;
                if (hp != hq) return hp < hq;
                return cross2_sign(p, q) > 0;
              });
    // Equal angles sort adjacently; the pair spans a plane through both the
    // anchor direction and the origin, which general position forbids.
    for (size_t t = 0; t + 1 < order.size(); ++t) {
      const RawDir& p = order[t];
      const RawDir& q = order[t + 1];
      const int hp = (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0;
      const int hq = (q.y < 0 || (q.y == 0 && q.x < 0)) ? 1 : 0;
      if (hp == hq && cross2_sign(p, q) == 0)
        throw DegenerateError(kZeroSign);
    }

    const size_t m = order.size();
    size_t e = 0;
    for (size_t t = 0; t < m; ++t) {
      if (e < t + 1) e = t + 1;
      while (e - t < m) {
        const int c = cross2_sign(order[t], order[e % m]);
        if (c > 0) {
          ++e;
          continue;
        }
        if (c == 0) throw DegenerateError(kZeroSign);
        break;
      }
      cnt[order[t].idx] = static_cast<long>(e - t - 1);
    }

    for (size_t x = a + 1; x < n; ++x) {
      if (sides[x] == sides[a]) continue;
      TupleStat st;
      st.tuple = {static_cast<int>(a), static_cast<int>(x)};
      st.l = cnt[x];
      st.r = static_cast<long>(n) - 2 - cnt[x];
      out.push_back(std::move(st));
    }
  }
  return out;
}

std::vector<TupleStat> stats_general(const std::vector<Point>& pts,
                                     const RatMatrix& map) {
  const size_t n = pts.size();
  const size_t d = pts[0].dim();
  const size_t td = d - 1;  // tuple size
  std::vector<std::vector<Rat>> proj(n);
  for (size_t i = 0; i < n; ++i) {
    proj[i] = apply_map(map, pts[i]);
    if (is_zero_vector(proj[i])) throw FlatRejected{};
  }
  std::vector<TupleStat> out;
  if (n < td) return out;
  std::vector<int> tuple(td);
  for (size_t i = 0; i < td; ++i) tuple[i] = static_cast<int>(i);
  do {
    // origin inside the projected tuple hull: the affine system is square
    // because the tuple has one point more than the projected dimension
    RatMatrix sys(td, std::vector<Rat>(td));
    for (size_t t = 0; t < td; ++t) {
      for (size_t r = 0; r + 1 < td; ++r) sys[r][t] = proj[tuple[t]][r];
      sys[td - 1][t] = 1;
    }
    std::vector<Rat> rhs(td, Rat(0));
    rhs[td - 1] = 1;
    const auto coef = solve(sys, rhs);
    if (!coef) throw FlatRejected{};
    bool member = true;
    for (const Rat& c : *coef) {
      const int s = sign(c);
      if (s == 0) throw FlatRejected{};
      if (s < 0) member = false;
    }
    if (member) out.push_back(split_against_tuple(pts, tuple));
  } while (next_combination(tuple, static_cast<int>(n)));
  return out;
}

std::vector<TupleStat> tuple_stats_impl(const std::vector<Point>& pts,
                                        const RatMatrix& map, bool naive) {
  const size_t d = pts.empty() ? 0 : pts[0].dim();
  if (d == 3) return naive ? stats_3d_naive(pts, map) : stats_3d_sweep(pts, map);
  return stats_general(pts, map);
}

// Completes the flat basis to a basis of R^d with standard vectors and takes
// the complement's coordinate functionals: the inverse basis matrix rows
// beyond the first two vanish on the flat and are independent.
bool build_projection(ProjectionStep& step, size_t d) {
  RatMatrix rows = step.flat_basis;
  if (rank(rows) < 2) return false;
  for (size_t i = 0; i < d && rows.size() < d; ++i) {
    std::vector<Rat> e(d, Rat(0));
    e[i] = 1;
    rows.push_back(std::move(e));
    if (rank(rows) < rows.size()) rows.pop_back();
  }
  RatMatrix aug(d, std::vector<Rat>(2 * d, Rat(0)));
  for (size_t r = 0; r < d; ++r) {
    for (size_t c = 0; c < d; ++c) aug[r][c] = rows[c][r];
    aug[r][d + r] = 1;
  }
  rref(aug);
  step.projection_map.assign(d - 2, std::vector<Rat>(d));
  for (size_t r = 2; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      step.projection_map[r - 2][c] = aug[r][d + c];
  return true;
}

// The projected set must be in general position relative to the origin:
// every (d-2)-subset of projected points linearly independent, no projected
// point at the origin.
bool projected_general_position(const std::vector<Point>& pts,
                                const RatMatrix& map) {
  const size_t dp = map.size();
  std::vector<std::vector<Rat>> proj(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    proj[i] = apply_map(map, pts[i]);
    if (is_zero_vector(proj[i])) return false;
  }
  if (dp == 1 || pts.size() < dp) return true;
  std::vector<int> sub(dp);
  for (size_t i = 0; i < dp; ++i) sub[i] = static_cast<int>(i);
  do {
    RatMatrix m(dp);
    for (size_t r = 0; r < dp; ++r) m[r] = proj[sub[r]];
    if (det_sign(m) == 0) return false;
  } while (next_combination(sub, static_cast<int>(pts.size())));
  return true;
}

Count embrace_impl(const std::vector<Point>& pts, size_t k, uint64_t seed) {
  const size_t d = pts[0].dim();
  if (d == 1) return embr_line(pts, k);
  if (d == 2) return embr_plane(pts, k);

  const ProjectionStep step = choose_generic_flat(pts, d, seed);
  std::vector<Point> proj;
  proj.reserve(pts.size());
  for (const Point& p : pts)
    proj.emplace_back(apply_map(step.projection_map, p));
  const Count projected = embrace_impl(proj, k, seed);

  const long long kd =
      static_cast<long long>(k) - static_cast<long long>(d) + 1;
  Int twice(0);
  for (const TupleStat& st : step.tuple_stats)
    twice += binomial(st.l, kd) + binomial(st.r, kd);
  const Count c = projected - exact_div(twice, Int(2));
  if (c < 0) throw Error("embracing count came out negative");
  return c;
}

}  // namespace

Count embrace_count(const EmbraceQuery& q, uint64_t seed) {
  const size_t d = q.query.dim();
  const size_t n = q.points.size();
  if (d == 0) throw ParseError("query point must have dimension at least 1");
  if (n < d + 1) throw ParseError("need at least d + 1 points");
  if (q.k < 1 || q.k > n) throw ParseError("subset size out of range");
  const std::vector<Point> pts = translate_to_origin(q.points, q.query);
  return embrace_impl(pts, q.k, seed);
}

Count simplicial_depth(const std::vector<Point>& points, const Point& w,
                       uint64_t seed) {
  return embrace_count(EmbraceQuery{points, w, w.dim() + 1}, seed);
}

ProjectionStep choose_generic_flat(const std::vector<Point>& points, size_t d,
                                   uint64_t seed) {
  if (d < 3) throw ParseError("flat selection requires dimension at least 3");
  require_uniform_dimension(points, d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-65536, 65536);
  for (int attempt = 0; attempt < kFlatRetryBudget; ++attempt) {
    ProjectionStep step;
    step.flat_basis.assign(2, std::vector<Rat>(d));
    for (auto& v : step.flat_basis)
      for (auto& x : v) x = Rat(coord(rng));
    if (!build_projection(step, d)) continue;
    try {
      if (!projected_general_position(points, step.projection_map)) continue;
      step.tuple_stats = tuple_stats_impl(points, step.projection_map, false);
    } catch (const FlatRejected&) {
      continue;
    }
    return step;
  }
  throw FlatRetryError("no generic flat found within the retry budget");
}

std::vector<TupleStat> tuple_halfspace_counts(const std::vector<Point>& points,
                                              const ProjectionStep& step,
                                              bool naive) {
  if (points.empty()) return {};
  const size_t d = points[0].dim();
  if (d < 3) throw ParseError("tuple statistics require dimension at least 3");
  require_uniform_dimension(points, d);
  if (step.projection_map.size() != d - 2 ||
      step.projection_map[0].size() != d)
    throw ParseError("projection map shape does not match the dimension");
  try {
    return tuple_stats_impl(points, step.projection_map, naive);
  } catch (const FlatRejected&) {
    throw DegenerateError("the flat is not generic for this point set");
  }
}

std::vector<Count> frequency_vector_d(const std::vector<Point>& points,
                                      const Point& w) {
  const size_t d = w.dim();
  const size_t n = points.size();
  if (d == 0) throw ParseError("query point must have dimension at least 1");
  if (n + 1 < d) throw ParseError("need at least d - 1 points");
  const std::vector<Point> pts = translate_to_origin(points, w);
  std::vector<Count> f(n - d + 2, Count(0));
  std::vector<int> tuple(d - 1);
  for (size_t i = 0; i + 1 < d; ++i) tuple[i] = static_cast<int>(i);
  do {
    const TupleStat st = split_against_tuple(pts, tuple);
    f[static_cast<size_t>(st.l > st.r ? st.l - st.r : st.r - st.l)] += 1;
  } while (next_combination(tuple, static_cast<int>(n)));
  return f;
}

}  // namespace wheelset
