#include "wheelset/predicates.hpp"

#include <algorithm>
#include <numeric>

#include "wheelset/linalg.hpp"

namespace wheelset {

namespace {

// Half-turn classification for the sweep order: half 0 is the closed-left,
// open-right sector [0, pi) measured from the positive x axis.
int half_of(const Point& v) {
  const int sy = v[1].sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return v[0].sign() > 0 ? 0 : 1;
}

}  // namespace

int orient(const Point& q, std::span<const Point> simplex) {
  const size_t d = q.dim();
  if (d == 0) throw Error("orient: zero-dimensional point");
  if (simplex.size() != d)
    throw Error("orient: need exactly d simplex points in R^d");
  for (const auto& p : simplex)
    if (p.dim() != d) throw Error("orient: dimension mismatch");
  RatMatrix m(d, std::vector<Rat>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = simplex[i][j] - q[j];
  return det_sign(m);
}

int orient(const Point& q, std::initializer_list<Point> simplex) {
  std::vector<Point> pts(simplex);
  return orient(q, std::span<const Point>(pts));
}

int orient2(const Point& a, const Point& b, const Point& c) {
  const Rat d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return d.sign();
}

Rat cross2(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

RadialOrder radial_compare(const Point& w, const Point& a, const Point& b) {
  if (w.dim() != 2 || a.dim() != 2 || b.dim() != 2)
    throw Error("radial_compare: planar points required");
  const Point va = a - w;
  const Point vb = b - w;
  if (is_origin(va) || is_origin(vb))
    throw DegenerateError("radial_compare: point coincides with the center");
  const int c = cross2(va, vb).sign();
  if (c == 0) {
    const Rat dot = va[0] * vb[0] + va[1] * vb[1];
    return dot.sign() > 0 ? RadialOrder::same_ray : RadialOrder::opposite_ray;
  }
  const int ha = half_of(va), hb = half_of(vb);
  if (ha != hb) return ha < hb ? RadialOrder::before : RadialOrder::after;
  return c > 0 ? RadialOrder::before : RadialOrder::after;
}

std::vector<long> left_counts_of_directions(const std::vector<Point>& dirs) {
  const size_t m = dirs.size();
  for (const auto& v : dirs) {
    if (v.dim() != 2) throw Error("left_counts: planar directions required");
    if (is_origin(v)) throw DegenerateError("left_counts: zero direction");
  }
  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  const Point origin{Rat(0), Rat(0)};
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    const RadialOrder r = radial_compare(origin, dirs[i], dirs[j]);
    if (r == RadialOrder::same_ray || r == RadialOrder::opposite_ray)
      throw DegenerateError("left_counts: two directions collinear through the center");
    return r == RadialOrder::before;
  });
  // Circular sweep: the strict left half-plane of dirs[order[i]] is a
  // contiguous arc starting right after i, and its end only advances.
  std::vector<long> counts(m, 0);
  size_t end = 0;  // absolute walk position, end >= i
  for (size_t i = 0; i < m; ++i) {
    if (end < i) end = i;
    while (end - i + 1 < m &&
           cross2(dirs[order[i]], dirs[order[(end + 1) % m]]).sign() > 0)
      ++end;
    counts[order[i]] = static_cast<long>(end - i);
  }
  return counts;
}

std::vector<long> left_counts(const Point& center, const std::vector<Point>& pts) {
  std::vector<Point> dirs;
  dirs.reserve(pts.size());
  for (const auto& p : pts) {
    Point v = p - center;
    if (is_origin(v)) throw DegenerateError("left_counts: point coincides with the center");
    dirs.push_back(std::move(v));
  }
  return left_counts_of_directions(dirs);
}

}  // namespace wheelset
