#include "wheelset/graph_count.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>

#include "wheelset/oracle.hpp"
#include "wheelset/predicates.hpp"
#include "wheelset/sequences.hpp"

namespace wheelset {

namespace {

Count rat_to_count(const Rat& x) {
  Count v = exact_div(Int(boost::multiprecision::numerator(x)),
                      Int(boost::multiprecision::denominator(x)));
  if (v < 0) throw Error("counting engine produced a negative value");
  return v;
}

// Up to n = 9 the sums of the two ternary tree convolutions below; A(x) is
// the convolution shifted by one extra leaf, B(x) the plain one. Both have
// hypergeometric closed forms, which keeps the table construction O(n).
Int tree_a(long long x) {
  return exact_div(2 * binomial(3 * x + 3, x), Int(x + 2));
}

Int tree_b(long long x) {
  return exact_div(binomial(3 * x + 1, x), Int(x + 1));
}

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b,
                              const Point& c) {
  const int s1 = orient2(a, b, p);
  const int s2 = orient2(b, c, p);
  const int s3 = orient2(c, a, p);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

Point unit_dir(const Rat& t) {
  const Rat tt = t * t;
  const Rat den = tt + 1;
  return Point{(1 - tt) / den, (2 * t) / den};
}

}  // namespace

GraphClass parse_graph_class(const std::string& name) {
  for (GraphClass cls : all_graph_classes())
    if (to_string(cls) == name) return cls;
  throw ParseError("unknown graph class: " + name);
}

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::embracing_triangles: return "embracing_triangles";
    case GraphClass::spanning_cycles: return "spanning_cycles";
    case GraphClass::spanning_paths: return "spanning_paths";
    case GraphClass::matchings: return "matchings";
    case GraphClass::spanning_trees: return "spanning_trees";
    case GraphClass::triangulations: return "triangulations";
    case GraphClass::convex_partitions: return "convex_partitions";
  }
  throw Error("unhandled graph class");
}

const std::vector<GraphClass>& all_graph_classes() {
  static const std::vector<GraphClass> classes = {
      GraphClass::embracing_triangles, GraphClass::spanning_cycles,
      GraphClass::spanning_paths,      GraphClass::matchings,
      GraphClass::spanning_trees,      GraphClass::triangulations,
      GraphClass::convex_partitions,
  };
  return classes;
}

Int GraphClassTable::delta_at(size_t i, size_t j) const {
  if (i + j + 2 != n) throw Error("delta is defined on the slice i + j = n - 2");
  return delta[i];
}

Int GraphClassTable::lambda_at(size_t l, size_t r) const {
  if (l + r + 1 != n) throw Error("lambda is defined on the slice l + r = n - 1");
  return lambda[l];
}

GraphClassTable build_class_table(GraphClass cls, size_t n) {
  if (n == 0) throw ParseError("class table needs at least one outer point");
  const long long nn = static_cast<long long>(n);
  GraphClassTable t;
  t.class_id = cls;
  t.n = n;
  t.delta.assign(n - 1, Int(0));
  t.c_n = 0;
  switch (cls) {
    case GraphClass::embracing_triangles:
      for (size_t i = 0; i + 1 < n; ++i)
        t.delta[i] = Int(nn - 2 - 2 * static_cast<long long>(i));
      t.c_n = binomial(nn - 1, 2);
      t.anchor_convex = 0;
      break;
    case GraphClass::spanning_cycles:
      // The single nonzero mutation is the hub leaving through a hull edge;
      // at n = 2 that entry sits on the antisymmetry diagonal and stays 0.
      if (n >= 3) {
        t.delta[0] = nn - 1;
        t.delta[n - 2] = 1 - nn;
      }
      t.anchor_convex = (n >= 2) ? 1 : 0;
      break;
    case GraphClass::spanning_paths:
      if (n >= 3) {
        const Int v = Int(nn - 1) << (n - 2);
        t.delta[0] = v;
        t.delta[n - 2] = -v;
      }
      t.anchor_convex = (n >= 2) ? Int(Int(nn + 1) << (n - 2)) : Int(1);
      break;
    case GraphClass::matchings:
      for (size_t i = 0; i + 1 < n; ++i) {
        const size_t j = n - 2 - i;
        t.delta[i] = motzkin(i) * motzkin(j + 1) - motzkin(i + 1) * motzkin(j);
      }
      t.c_n = motzkin(n - 1);
      t.anchor_convex = motzkin(n + 1);
      break;
    case GraphClass::spanning_trees:
      for (size_t i = 0; i + 1 < n; ++i) {
        const long long x = static_cast<long long>(i);
        const long long y = nn - 2 - x;
        t.delta[i] = 2 * (tree_a(y) * tree_b(x) - tree_a(x) * tree_b(y));
      }
      t.anchor_convex = ternary_trees(n + 1);
      break;
    case GraphClass::triangulations:
      for (size_t i = 0; i + 1 < n; ++i) {
        const size_t j = n - 2 - i;
        t.delta[i] = catalan(i) * catalan(j + 1) - catalan(i + 1) * catalan(j);
      }
      t.c_n = catalan(n - 1);
      t.anchor_convex = catalan(n - 1);
      break;
    case GraphClass::convex_partitions:
      t.anchor_convex = catalan(n + 1);
      break;
  }

  t.lambda.assign(n, Int(0));
  t.lambda[n - 1] = t.c_n;
  for (size_t l = n - 1; l-- > 0;) t.lambda[l] = t.lambda[l + 1] + t.delta[l];

  Rat half(0);
  for (const Int& v : t.lambda) half += Rat(v);
  half /= 2;
  // The convex anchor pins gamma because the extreme-hub configuration walks
  // through every left-count exactly once. Triangulations are the exception:
  // their formula covers wheel sets only and its gamma is the half-integer
  // Catalan convolution, with no convex anchor folded in.
  t.gamma = (cls == GraphClass::triangulations) ? half : Rat(t.anchor_convex) + half;

  t.lambda_cap.assign(n, Rat(0));
  for (size_t k = (n % 2 == 0) ? 1 : 0; k < n; k += 2)
    t.lambda_cap[k] = t.gamma / Rat(Int(nn)) - Rat(t.lambda[(n - 1 + k) / 2]) / 2;
  return t;
}

CountResult count(GraphClass cls, const FrequencyVector& f) {
  const size_t n = f.n();
  if (n == 0) throw ParseError("empty frequency vector");
  std::vector<Int> fi(f.f.begin(), f.f.end());
  const ValidationReport rep = validate_frequency_vector(fi);
  if (!rep.ok)
    throw ParseError("invalid frequency vector: " + rep.violations.front());
  if (cls == GraphClass::triangulations && f.f[n - 1] > 0)
    return {catalan(n - 1), true};
  const GraphClassTable t = build_class_table(cls, n);
  Rat acc(0);
  for (size_t k = 0; k < n; ++k)
    if (f.f[k] != 0) acc += Rat(f.f[k]) * t.lambda_cap[k];
  return {rat_to_count(acc), false};
}

CountResult count(GraphClass cls, const ConoWheelSet& s) {
  const size_t n = s.n();
  if (cls == GraphClass::triangulations && s.convex_position())
    return {catalan(n - 1), true};
  const GraphClassTable t = build_class_table(cls, n);
  Rat acc = t.gamma;
  for (size_t h = 0; h < n; ++h)
    acc -= Rat(t.lambda[static_cast<size_t>(s.lcount[h])]) / 2;
  return {rat_to_count(acc), false};
}

const Count& EmbraceProfile::embr(size_t k) const {
  if (k < 3 || k > n) throw Error("embr_k is defined for 3 <= k <= n");
  return counts[k - 3];
}

EmbraceProfile embrace_counts_2d(const ConoWheelSet& s) {
  const size_t n = s.n();
  EmbraceProfile p;
  p.n = n;
  for (size_t k = 3; k <= n; ++k) {
    Int e = binomial(static_cast<long long>(n), static_cast<long long>(k));
    for (size_t h = 0; h < n; ++h)
      e -= binomial(s.lcount[h], static_cast<long long>(k) - 1);
    if (e < 0) throw Error("embracing count came out negative");
    p.counts.push_back(std::move(e));
  }
  return p;
}

FrequencyVector frequency_from_embrace(const EmbraceProfile& profile) {
  const size_t n = profile.n;
  if (n == 0) throw InconsistentProfileError("profile needs at least one point");
  if (profile.counts.size() != (n >= 3 ? n - 2 : 0))
    throw InconsistentProfileError("profile must list the counts for k = 3..n");
  // One and two outer points leave nothing to invert.
  if (n == 1) return FrequencyVector{{1}};
  if (n == 2) return FrequencyVector{{0, 2}};

  // Right-hand sides binom(n, i+1) - embr_{i+1}; the k = 2 row holds with an
  // embracing pair count of zero.
  std::vector<Int> e(n, Int(0));
  for (size_t i = 1; i <= n - 1; ++i) {
    e[i] = binomial(static_cast<long long>(n), static_cast<long long>(i) + 1);
    if (i + 1 >= 3) e[i] -= profile.embr(i + 1);
  }

  // e_i = sum_j binom(j, i) L_j is unitriangular; back-substitute downward.
  std::vector<Int> L(n, Int(0));
  for (size_t i = n - 1; i >= 1; --i) {
    Int v = e[i];
    for (size_t j = i + 1; j <= n - 1; ++j)
      v -= binomial(static_cast<long long>(j), static_cast<long long>(i)) * L[j];
    if (v < 0)
      throw InconsistentProfileError("negative multiplicity for left count " +
                                     std::to_string(i));
    L[i] = std::move(v);
  }
  Int l0 = Int(static_cast<long long>(n));
  for (size_t j = 1; j <= n - 1; ++j) l0 -= L[j];
  if (l0 < 0)
    throw InconsistentProfileError("left-count multiplicities add up beyond n");
  L[0] = std::move(l0);

  std::vector<Int> f(n, Int(0));
  for (size_t j = 0; j < n; ++j) {
    const long long imb = std::llabs(2 * static_cast<long long>(j) -
                                     (static_cast<long long>(n) - 1));
    f[static_cast<size_t>(imb)] += L[j];
  }
  const ValidationReport rep = validate_frequency_vector(f);
  if (!rep.ok)
    throw InconsistentProfileError("profile matches no conowheel set: " +
                                   rep.violations.front());
  FrequencyVector out;
  out.f.reserve(n);
  for (const Int& v : f) out.f.push_back(static_cast<int>(v));
  return out;
}

TriangleFamily triangle_family(const ConoWheelSet& s) {
  const int n = static_cast<int>(s.n());
  TriangleFamily fam;
  fam.n = s.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (strictly_inside_triangle(s.hub, s.hull[i], s.hull[j], s.hull[k]))
          fam.triples.insert({i, j, k});
  return fam;
}

namespace {

// Union-find over side variables with an equal/opposite parity on each link.
struct ParityDsu {
  std::vector<int> parent;
  std::vector<uint8_t> flip;  // parity of the path to the parent

  explicit ParityDsu(size_t n) : parent(n), flip(n, 0) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  std::pair<int, uint8_t> find(int v) {
    uint8_t p = 0;
    while (parent[v] != v) {
      p ^= flip[v];
      v = parent[v];
    }
    return {v, p};
  }
  bool unite(int a, int b, uint8_t rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    flip[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

std::string order_type_from_triangles(const TriangleFamily& fam) {
  const int n = static_cast<int>(fam.n);
  if (n == 0) throw ParseError("triangle family needs at least one point");
  for (const auto& t : fam.triples)
    if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < n))
      throw ParseError("triangle family holds an out-of-range or unordered triple");
  if (fam.triples.empty())
    return std::string(n, '0') + std::string(n, '1');
  if (n > 32)
    throw BoundError("order type reconstruction is limited to 32 outer points");

  const auto in_t = [&](int a, int b, int c) -> bool {
    if (a == b || b == c || a == c) return false;
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return fam.triples.count(t) > 0;
  };

  // Two points are interchangeable when they are separated by no embracing
  // triangle and appear in exactly the same triples. Interchangeable points
  // sit consecutively in the sweep around the hub.
  const auto interchangeable = [&](int a, int b) -> bool {
    for (int k = 0; k < n; ++k)
      if (in_t(a, b, k)) return false;
    for (int j = 0; j < n; ++j) {
      if (j == a || j == b) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == a || k == b) continue;
        if (in_t(a, j, k) != in_t(b, j, k)) return false;
      }
    }
    return true;
  };

  std::vector<int> cls_of(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    for (size_t c = 0; c < members.size() && cls_of[i] < 0; ++c)
      if (interchangeable(i, members[c][0])) {
        cls_of[i] = static_cast<int>(c);
        members[c].push_back(i);
      }
    if (cls_of[i] < 0) {
      cls_of[i] = static_cast<int>(members.size());
      members.push_back({i});
    }
  }
  const int m = static_cast<int>(members.size());
  if (m < 3)
    throw NotRealizableError("embracing triples need three direction classes");

  std::set<std::array<int, 3>> class_triples;
  for (const auto& t : fam.triples) {
    std::array<int, 3> c{cls_of[t[0]], cls_of[t[1]], cls_of[t[2]]};
    std::sort(c.begin(), c.end());
    if (c[0] == c[1] || c[1] == c[2])
      throw NotRealizableError("an embracing triple repeats a direction class");
    class_triples.insert(c);
  }
  const auto in_tc = [&](int a, int b, int c) -> bool {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return class_triples.count(t) > 0;
  };

  // side(X, Y) for X < Y: is the class-Y direction strictly within the ccw
  // half turn after the class-X direction? An embracing class triple A < B < C
  // forces side(A,B) = side(B,C) = not side(A,C); collect the parities.
  const auto vid = [&](int x, int y) -> int {
    if (x > y) std::swap(x, y);
    return x * m - x * (x + 1) / 2 + (y - x - 1);
  };
  ParityDsu dsu(static_cast<size_t>(m) * (m - 1) / 2);
  bool consistent = true;
  for (const auto& t : class_triples) {
    consistent &= dsu.unite(vid(t[0], t[1]), vid(t[1], t[2]), 0);
    consistent &= dsu.unite(vid(t[0], t[1]), vid(t[0], t[2]), 1);
  }
  if (!consistent)
    throw NotRealizableError("contradictory orientations in the triangle family");

  // Component roots; one free bit per component beyond the chirality choice.
  std::map<int, int> comp_index;
  std::vector<std::pair<int, uint8_t>> var_root(dsu.parent.size());
  for (size_t v = 0; v < dsu.parent.size(); ++v) {
    var_root[v] = dsu.find(static_cast<int>(v));
    comp_index.emplace(var_root[v].first, static_cast<int>(comp_index.size()));
  }
  const int comps = static_cast<int>(comp_index.size());
  if (comps - 1 > 12)
    throw BoundError("too many undetermined orientation components");

  std::vector<std::string> accepted;
  for (uint32_t bits = 0; bits < (1u << (comps - 1)); ++bits) {
    const auto side = [&](int x, int y) -> bool {
      const auto [root, par] = var_root[vid(x, y)];
      const int c = comp_index.at(root);
      const bool base = (c == 0) ? true : ((bits >> (c - 1)) & 1) != 0;
      bool v = base ^ (par != 0);
      if (x > y) v = !v;
      return v;
    };

    // 2m arcs: per class one run of points and one run of antipodes. Sort
    // them into the half turns before and after the reference arc.
    struct Ev {
      int cls;
      int anti;
    };
    const auto order_before = [&](const Ev& a, const Ev& b) -> bool {
      return side(a.cls, b.cls) ^ (a.anti != b.anti);
    };
    std::vector<Ev> plus, minus;
    for (int c = 1; c < m; ++c)
      for (int anti = 0; anti <= 1; ++anti) {
        Ev e{c, anti};
        (order_before(Ev{0, 0}, e) ? plus : minus).push_back(e);
      }
    // Insertion sort: the comparator comes from candidate data, so it may be
    // inconsistent; the certification below rejects any garbage order.
    const auto insertion_sort = [&](std::vector<Ev>& v) {
      for (size_t i = 1; i < v.size(); ++i)
        for (size_t k = i; k > 0 && order_before(v[k], v[k - 1]); --k)
          std::swap(v[k], v[k - 1]);
    };
    insertion_sort(plus);
    insertion_sort(minus);
    std::vector<Ev> order;
    order.push_back({0, 0});
    order.insert(order.end(), plus.begin(), plus.end());
    order.push_back({0, 1});
    order.insert(order.end(), minus.begin(), minus.end());

    std::string beads;
    for (const Ev& e : order)
      beads.append(members[e.cls].size(), e.anti ? '0' : '1');

    // Certify end to end: realize the candidate and compare its embracing
    // structure, class against class, with the input family.
    try {
      const Necklace nk = Necklace::from_string(beads);
      if (!nk.self_dual()) continue;
      const ConoWheelSet rs = realize_necklace(nk);
      std::vector<int> rep_hull(m, -1);
      int black_rank = 0;
      for (const Ev& e : order) {
        if (e.anti) continue;
        rep_hull[e.cls] = black_rank;
        black_rank += static_cast<int>(members[e.cls].size());
      }
      bool ok = true;
      for (int x = 0; x < m && ok; ++x)
        for (int y = x + 1; y < m && ok; ++y)
          for (int z = y + 1; z < m && ok; ++z) {
            const bool emb = strictly_inside_triangle(
                rs.hub, rs.hull[rep_hull[x]], rs.hull[rep_hull[y]],
                rs.hull[rep_hull[z]]);
            if (emb != in_tc(x, y, z)) ok = false;
          }
      if (ok) accepted.push_back(canonical_necklace(nk, true));
    } catch (const Error&) {
      continue;
    }
  }

  if (accepted.empty())
    throw NotRealizableError("no conowheel set has this triangle family");
  for (const std::string& s : accepted)
    if (s != accepted.front())
      throw Error("triangle family admits two distinct order types");
  return accepted.front();
}

CrossingStats crossing_stats(const std::vector<Point>& pts) {
  const size_t total = pts.size();
  for (const Point& p : pts)
    if (p.dim() != 2) throw DegenerateError("crossing statistics need planar points");
  Count concave(0);
  std::vector<Point> others;
  others.reserve(total ? total - 1 : 0);
  for (size_t p = 0; p < total; ++p) {
    others.clear();
    for (size_t q = 0; q < total; ++q)
      if (q != p) others.push_back(pts[q]);
    // Triangles of the others containing this point, counted by the
    // left-count complement; summing over all points hits every non-convex
    // quadruple exactly once, at its interior point.
    const std::vector<long> lc = left_counts(pts[p], others);
    Int t = binomial(static_cast<long long>(total) - 1, 3);
    for (long v : lc) t -= binomial(v, 2);
    if (t < 0) throw Error("negative containment count");
    concave += t;
  }
  Count convex = binomial(static_cast<long long>(total), 4) - concave;
  return {std::move(convex), std::move(concave)};
}

SymMaximizerReport check_sym_maximizer(GraphClass cls, size_t n) {
  const GraphClassTable t = build_class_table(cls, n);
  SymMaximizerReport r;
  r.delta_nonneg = true;
  for (size_t i = 0; n >= 2 && 2 * i < n - 2; ++i)
    if (t.delta[i] < 0) r.delta_nonneg = false;
  const Count sym = count(cls, sym_frequency_vector(n)).value;
  r.sym_is_max = true;
  for (const FrequencyVector& f : enumerate_frequency_vectors(n))
    if (count(cls, f).value > sym) {
      r.sym_is_max = false;
      break;
    }
  return r;
}

std::pair<std::vector<Point>, std::vector<Point>> mutation_pair(size_t i, size_t j) {
  std::vector<Point> base;
  base.push_back(Point{Rat(0), Rat(1)});
  base.push_back(Point{Rat(0), Rat(-1)});
  // The chord between tangent parameters u and v meets the x-axis at
  // x = (1+uv)/(1-uv), so a pair with uv = -1 (antipodal) would separate the
  // two hub spots and fire a second mutation. Integer magnitudes on the left
  // against 2/odd magnitudes on the right keep every product away from -1.
  // Left arc: magnitude > 1 lands at x < 0; alternating signs spread the
  // points across both left quadrants.
  for (size_t a = 0; a < i; ++a) {
    const long mag = 2 + static_cast<long>(a);
    base.push_back(unit_dir(Rat((a % 2) ? -mag : mag)));
  }
  // Right arc: magnitudes < 1 land at x > 0.
  for (size_t b = 0; b < j; ++b) {
    if (b == 0) {
      base.push_back(unit_dir(Rat(0)));
      continue;
    }
    base.push_back(unit_dir(Rat((b % 2) ? 2 : -2, 3 + 2 * static_cast<long>(b))));
  }
  const Rat eps(1, 1000);
  std::vector<Point> left = base, right = base;
  left.push_back(Point{-eps, Rat(0)});
  right.push_back(Point{eps, Rat(0)});
  for (const auto* pts : {&left, &right}) {
    const size_t m = pts->size();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = a + 1; b < m; ++b)
        for (size_t c = b + 1; c < m; ++c)
          if (orient2((*pts)[a], (*pts)[b], (*pts)[c]) == 0)
            throw DegenerateError("mutation placement is degenerate");
  }
  // The two placements must differ by exactly one orientation flip, the one
  // across the edge between the first two points.
  for (size_t a = 0; a < base.size(); ++a)
    for (size_t b = a + 1; b < base.size(); ++b) {
      if (a == 0 && b == 1) continue;
      if (orient2(base[a], base[b], left.back()) !=
          orient2(base[a], base[b], right.back()))
        throw DegenerateError("mutation placement is unstable");
    }
  return {std::move(left), std::move(right)};
}

Int custom_class_delta(const std::vector<AbstractGraph>& graphs, size_t i, size_t j,
                       size_t bound) {
  if (i + j + 2 > bound)
    throw BoundError("mutation size exceeds the oracle bound");
  auto [before, after] = mutation_pair(i, j);
  const Count lo = oracle_embedding_count(graphs, before, {0, 1});
  const Count hi = oracle_embedding_count(graphs, after, {0, 1});
  return Int(hi) - Int(lo);
}

}  // namespace wheelset
