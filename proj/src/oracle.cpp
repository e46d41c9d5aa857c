#include "wheelset/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>
#include <utility>

#include "wheelset/linalg.hpp"
#include "wheelset/predicates.hpp"

namespace wheelset {

namespace {

constexpr size_t kGraphOracleMax = 10;

void require_planar_general_position(const std::vector<Point>& pts) {
  for (const Point& p : pts)
    if (p.dim() != 2)
      throw DegenerateError("graph oracles work on planar points");
  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (pts[i] == pts[j]) throw DegenerateError("duplicate point");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k)
        if (orient2(pts[i], pts[j], pts[k]) == 0)
          throw DegenerateError("collinear triple");
}

// Orientation signs of all index triples, computed once per point set so the
// enumerators below run on integer lookups instead of rational arithmetic.
struct TripleSigns {
  int n = 0;
  std::vector<int8_t> table;

  int8_t at(int i, int j, int k) const { return table[(i * n + j) * n + k]; }
  int8_t& at(int i, int j, int k) { return table[(i * n + j) * n + k]; }
};

TripleSigns make_triple_signs(const std::vector<Point>& pts) {
  TripleSigns ts;
  ts.n = static_cast<int>(pts.size());
  ts.table.assign(static_cast<size_t>(ts.n) * ts.n * ts.n, 0);
  for (int i = 0; i < ts.n; ++i)
    for (int j = i + 1; j < ts.n; ++j)
      for (int k = j + 1; k < ts.n; ++k) {
        const int8_t s = static_cast<int8_t>(orient2(pts[i], pts[j], pts[k]));
        ts.at(i, j, k) = s;
        ts.at(j, k, i) = s;
        ts.at(k, i, j) = s;
        ts.at(i, k, j) = static_cast<int8_t>(-s);
        ts.at(k, j, i) = static_cast<int8_t>(-s);
        ts.at(j, i, k) = static_cast<int8_t>(-s);
      }
  return ts;
}

bool inside_triangle(const TripleSigns& ts, int p, int a, int b, int c) {
  const int s1 = ts.at(a, b, p);
  const int s2 = ts.at(b, c, p);
  const int s3 = ts.at(c, a, p);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

// Proper crossing of segments ab and cd with four distinct endpoints; the
// general-position precheck rules out zero signs.
bool segments_cross(const TripleSigns& ts, int a, int b, int c, int d) {
  return ts.at(a, b, c) != ts.at(a, b, d) && ts.at(c, d, a) != ts.at(c, d, b);
}

struct EdgeTable {
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<int>> id;
  std::vector<uint64_t> cross;
};

EdgeTable make_edge_table(const TripleSigns& ts) {
  const int n = ts.n;
  EdgeTable t;
  t.id.assign(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      t.id[u][v] = t.id[v][u] = static_cast<int>(t.ends.size());
      t.ends.emplace_back(u, v);
    }
  t.cross.assign(t.ends.size(), 0);
  for (size_t e = 0; e < t.ends.size(); ++e)
    for (size_t g = e + 1; g < t.ends.size(); ++g) {
      const auto [a, b] = t.ends[e];
      const auto [c, d] = t.ends[g];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross(ts, a, b, c, d)) {
        t.cross[e] |= 1ull << g;
        t.cross[g] |= 1ull << e;
      }
    }
  return t;
}

Count count_k4(const TripleSigns& ts) {
  Count total(0);
  for (int a = 0; a < ts.n; ++a)
    for (int b = a + 1; b < ts.n; ++b)
      for (int c = b + 1; c < ts.n; ++c)
        for (int d = c + 1; d < ts.n; ++d)
          if (inside_triangle(ts, d, a, b, c) || inside_triangle(ts, c, a, b, d) ||
              inside_triangle(ts, b, a, c, d) || inside_triangle(ts, a, b, c, d))
            total += 1;
  return total;
}

Count count_matchings(int n, const EdgeTable& t) {
  std::function<Count(uint32_t, uint64_t)> rec = [&](uint32_t used,
                                                     uint64_t banned) -> Count {
    int v = 0;
    while (v < n && ((used >> v) & 1)) ++v;
    if (v == n) return 1;
    Count total = rec(used | (1u << v), banned);
    for (int w = v + 1; w < n; ++w) {
      if ((used >> w) & 1) continue;
      const int e = t.id[v][w];
      if ((banned >> e) & 1) continue;
      total += rec(used | (1u << v) | (1u << w), banned | t.cross[e]);
    }
    return total;
  };
  return rec(0, 0);
}

Count count_cycles(int n, const EdgeTable& t) {
  if (n < 3) return 0;
  Count total(0);
  std::vector<int> path{0};
  uint32_t used = 1;
  std::function<void(uint64_t)> dfs = [&](uint64_t banned) {
    if (static_cast<int>(path.size()) == n) {
      const int e = t.id[path.back()][0];
      if (!((banned >> e) & 1) && path[1] < path.back()) total += 1;
      return;
    }
    for (int v = 1; v < n; ++v) {
      if ((used >> v) & 1) continue;
      const int e = t.id[path.back()][v];
      if ((banned >> e) & 1) continue;
      used |= 1u << v;
      path.push_back(v);
      dfs(banned | t.cross[e]);
      path.pop_back();
      used &= ~(1u << v);
    }
  };
  dfs(0);
  return total;
}

Count count_paths(int n, const EdgeTable& t) {
  if (n <= 1) return 1;
  Count total(0);
  std::vector<int> path;
  uint32_t used = 0;
  std::function<void(uint64_t)> dfs = [&](uint64_t banned) {
    if (static_cast<int>(path.size()) == n) {
      // each undirected path shows up from both of its ends
      if (path.front() < path.back()) total += 1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      const int e = t.id[path.back()][v];
      if ((banned >> e) & 1) continue;
      used |= 1u << v;
      path.push_back(v);
      dfs(banned | t.cross[e]);
      path.pop_back();
      used &= ~(1u << v);
    }
  };
  for (int s = 0; s < n; ++s) {
    used = 1u << s;
    path.assign(1, s);
    dfs(0);
  }
  return total;
}

int find_root(std::array<int8_t, 12>& par, int v) {
  while (par[v] != v) v = par[v];
  return v;
}

Count count_trees(int n, const EdgeTable& t) {
  if (n <= 1) return 1;
  const int ne = static_cast<int>(t.ends.size());
  std::vector<uint64_t> suffix(ne + 1, 0);
  for (int e = ne - 1; e >= 0; --e) suffix[e] = suffix[e + 1] | (1ull << e);
  std::array<int8_t, 12> parent{};
  for (int v = 0; v < n; ++v) parent[v] = static_cast<int8_t>(v);
  std::function<Count(int, int, uint64_t, std::array<int8_t, 12>)> rec =
      [&](int idx, int picked, uint64_t banned,
          std::array<int8_t, 12> par) -> Count {
    if (picked == n - 1) return 1;
    if (idx == ne) return 0;
    if (std::popcount(suffix[idx] & ~banned) < n - 1 - picked) return 0;
    // the surviving edges must still be able to connect all components
    {
      std::array<int8_t, 12> probe = par;
      int comps = n - picked;
      for (int e = idx; e < ne && comps > 1; ++e) {
        if ((banned >> e) & 1) continue;
        const int ra = find_root(probe, t.ends[e].first);
        const int rb = find_root(probe, t.ends[e].second);
        if (ra != rb) {
          probe[ra] = static_cast<int8_t>(rb);
          --comps;
        }
      }
      if (comps > 1) return 0;
    }
    Count total(0);
    if (!((banned >> idx) & 1)) {
      std::array<int8_t, 12> next = par;
      const int ra = find_root(next, t.ends[idx].first);
      const int rb = find_root(next, t.ends[idx].second);
      if (ra != rb) {
        next[ra] = static_cast<int8_t>(rb);
        total += rec(idx + 1, picked + 1, banned | t.cross[idx], next);
      }
    }
    total += rec(idx + 1, picked, banned, par);
    return total;
  };
  return rec(0, 0, 0, parent);
}

Count count_triangulations(int n, const TripleSigns& ts, const EdgeTable& t) {
  if (n <= 2) return 1;
  int hull = 0;
  for (int p = 0; p < n; ++p) {
    bool interior = false;
    for (int a = 0; a < n && !interior; ++a)
      for (int b = a + 1; b < n && !interior; ++b)
        for (int c = b + 1; c < n && !interior; ++c) {
          if (a == p || b == p || c == p) continue;
          interior = inside_triangle(ts, p, a, b, c);
        }
    if (!interior) ++hull;
  }
  // every maximal crossing-free edge set is a full tessellation with exactly
  // 3n - 3 - hull edges, so counting crossing-free sets of that exact size
  // counts the tessellations
  const long long target = 3ll * n - 3 - hull;
  long long forced = 0;
  std::vector<int> open;
  for (size_t e = 0; e < t.ends.size(); ++e) {
    if (t.cross[e] == 0)
      ++forced;  // crossed by nothing, hence in every maximal set
    else
      open.push_back(static_cast<int>(e));
  }
  long long need = target - forced;
  if (need < 0) throw Error("triangulation edge budget underflow");
  const int ne = static_cast<int>(open.size());
  std::vector<uint64_t> conf(ne, 0);
  for (int a = 0; a < ne; ++a)
    for (int b = a + 1; b < ne; ++b)
      if ((t.cross[open[a]] >> open[b]) & 1) {
        conf[a] |= 1ull << b;
        conf[b] |= 1ull << a;
      }
  std::vector<uint64_t> suffix(ne + 1, 0);
  for (int e = ne - 1; e >= 0; --e) suffix[e] = suffix[e + 1] | (1ull << e);
  std::function<Count(int, long long, uint64_t)> rec =
      [&](int idx, long long want, uint64_t banned) -> Count {
    if (want == 0) return 1;
    if (idx == ne) return 0;
    if (std::popcount(suffix[idx] & ~banned) < want) return 0;
    Count total(0);
    if (!((banned >> idx) & 1))
      total += rec(idx + 1, want - 1, banned | conf[idx]);
    total += rec(idx + 1, want, banned);
    return total;
  };
  return rec(0, need, 0);
}

Count count_convex_partitions(int n, const TripleSigns& ts) {
  if (n == 0) return 1;
  std::vector<std::vector<int>> blocks;
  Count total(0);
  // adding p to block A keeps the hulls pairwise disjoint iff no new feature
  // through p meets another block
  const auto p_compatible = [&](int p, size_t grown_idx) -> bool {
    const std::vector<int>& grown = blocks[grown_idx];
    for (size_t oi = 0; oi < blocks.size(); ++oi) {
      if (oi == grown_idx) continue;
      const std::vector<int>& other = blocks[oi];
      for (size_t b1 = 0; b1 < other.size(); ++b1)
        for (size_t b2 = b1 + 1; b2 < other.size(); ++b2) {
          for (size_t b3 = b2 + 1; b3 < other.size(); ++b3)
            if (inside_triangle(ts, p, other[b1], other[b2], other[b3]))
              return false;
          for (int a : grown) {
            if (a == p) continue;
            if (segments_cross(ts, p, a, other[b1], other[b2])) return false;
          }
        }
      for (int b : other)
        for (size_t a1 = 0; a1 < grown.size(); ++a1)
          for (size_t a2 = a1 + 1; a2 < grown.size(); ++a2) {
            if (grown[a1] == p || grown[a2] == p) continue;
            if (inside_triangle(ts, b, p, grown[a1], grown[a2])) return false;
          }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int p) {
    if (p == n) {
      total += 1;
      return;
    }
    const size_t nb = blocks.size();
    for (size_t bi = 0; bi < nb; ++bi) {
      blocks[bi].push_back(p);
      if (p_compatible(p, bi)) rec(p + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({p});
    if (p_compatible(p, nb)) rec(p + 1);
    blocks.pop_back();
  };
  rec(0);
  return total;
}

}  // namespace

Count oracle_graph_count(GraphClass cls, const std::vector<Point>& pts) {
  if (pts.size() > kGraphOracleMax)
    throw BoundError("graph-count oracle is limited to 10 points");
  require_planar_general_position(pts);
  const int n = static_cast<int>(pts.size());
  const TripleSigns ts = make_triple_signs(pts);
  switch (cls) {
    case GraphClass::embracing_triangles:
      return count_k4(ts);
    case GraphClass::spanning_cycles:
      return count_cycles(n, make_edge_table(ts));
    case GraphClass::spanning_paths:
      return count_paths(n, make_edge_table(ts));
    case GraphClass::matchings:
      return count_matchings(n, make_edge_table(ts));
    case GraphClass::spanning_trees:
      return count_trees(n, make_edge_table(ts));
    case GraphClass::triangulations:
      return count_triangulations(n, ts, make_edge_table(ts));
    case GraphClass::convex_partitions:
      return count_convex_partitions(n, ts);
  }
  throw Error("unhandled graph class");
}

Count oracle_embrace(const std::vector<Point>& pts, const Point& w, size_t k) {
  const size_t n = pts.size();
  if (n > 16) throw BoundError("embracing oracle is limited to 16 points");
  const size_t d = w.dim();
  if (d == 0) throw DegenerateError("ambient dimension must be positive");
  for (const Point& p : pts)
    if (p.dim() != d) throw DegenerateError("mixed dimensions");
  if (k > n || k < d + 1) return 0;

  // embracing simplices: w strictly inside the hull of d+1 points
  std::vector<uint32_t> simplices;
  std::vector<size_t> idx(d + 1);
  const std::function<void(size_t, size_t)> pick = [&](size_t pos, size_t from) {
    if (pos == d + 1) {
      RatMatrix a(d + 1, std::vector<Rat>(d + 1));
      std::vector<Rat> rhs(d + 1);
      for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c <= d; ++c) a[r][c] = pts[idx[c]][r];
        rhs[r] = w[r];
      }
      for (size_t c = 0; c <= d; ++c) a[d][c] = 1;
      rhs[d] = 1;
      const auto sol = solve(a, rhs);
      if (!sol)
        throw DegenerateError("affinely dependent point subset");
      bool strict = true;
      for (const Rat& lam : *sol) {
        const int s = sign(lam);
        if (s == 0) throw DegenerateError("hub on a simplex boundary");
        if (s < 0) strict = false;
      }
      if (strict) {
        uint32_t mask = 0;
        for (size_t c = 0; c <= d; ++c) mask |= 1u << idx[c];
        simplices.push_back(mask);
      }
      return;
    }
    for (size_t v = from; v < n; ++v) {
      idx[pos] = v;
      pick(pos + 1, v + 1);
    }
  };
  pick(0, 0);

  Count total(0);
  const uint32_t limit = 1u << n;
  uint32_t mask = (1u << k) - 1;
  while (mask < limit) {
    for (uint32_t s : simplices)
      if ((mask & s) == s) {
        total += 1;
        break;
      }
    const uint32_t c = mask & (0u - mask);
    const uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (c == 0) break;
  }
  return total;
}

std::vector<std::vector<int>> oracle_facets(const std::vector<Point>& pts) {
  const size_t n = pts.size();
  if (n > 16) throw BoundError("facet oracle is limited to 16 points");
  if (n == 0) return {};
  const size_t d = pts[0].dim();
  if (d == 0) throw DegenerateError("ambient dimension must be positive");
  for (const Point& p : pts)
    if (p.dim() != d) throw DegenerateError("mixed dimensions");
  if (n < d + 1)
    throw DegenerateError("a full-dimensional polytope needs d+1 points");

  std::vector<std::vector<int>> facets;
  std::vector<int> idx(d);
  std::vector<Point> simplex;
  const std::function<void(size_t, int)> pick = [&](size_t pos, int from) {
    if (pos == d) {
      simplex.clear();
      for (int v : idx) simplex.push_back(pts[v]);
      int side = 0;
      bool facet = true;
      for (size_t q = 0; q < n && facet; ++q) {
        if (std::find(idx.begin(), idx.end(), static_cast<int>(q)) != idx.end())
          continue;
        const int s = orient(pts[q], std::span<const Point>(simplex));
        // a point on the hyperplane rules the candidate out: on a simplicial
        // polytope no further vertex lies on a facet plane
        if (s == 0)
          facet = false;
        else if (side == 0)
          side = s;
        else if (s != side)
          facet = false;
      }
      if (facet) facets.push_back(idx);
      return;
    }
    for (int v = from; v < static_cast<int>(n); ++v) {
      idx[pos] = v;
      pick(pos + 1, v + 1);
    }
  };
  pick(0, 0);
  std::sort(facets.begin(), facets.end());
  return facets;
}

std::vector<Count> oracle_fvector(const std::vector<Point>& pts) {
  const auto facets = oracle_facets(pts);
  const size_t n = pts.size();
  const size_t d = pts[0].dim();
  std::vector<uint32_t> fmask;
  uint32_t covered = 0;
  for (const auto& f : facets) {
    uint32_t m = 0;
    for (int v : f) m |= 1u << v;
    fmask.push_back(m);
    covered |= m;
  }
  if (covered != (n >= 32 ? ~0u : (1u << n) - 1))
    throw DegenerateError("a point is not a vertex of the hull");

  std::vector<Count> f(d, Count(0));
  for (size_t i = 0; i < d; ++i) {
    const size_t k = i + 1;
    uint32_t mask = (1u << k) - 1;
    const uint32_t limit = 1u << n;
    while (mask < limit) {
      for (uint32_t fm : fmask)
        if ((mask & fm) == mask) {
          f[i] += 1;
          break;
        }
      const uint32_t c = mask & (0u - mask);
      const uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return f;
}

Count oracle_embedding_count(const std::vector<AbstractGraph>& graphs,
                             const std::vector<Point>& pts,
                             std::pair<int, int> require_edge) {
  const size_t n = pts.size();
  if (n > kGraphOracleMax)
    throw BoundError("embedding oracle is limited to 10 points");
  require_planar_general_position(pts);
  for (const AbstractGraph& g : graphs)
    for (const auto& [u, v] : g)
      if (u < 0 || v < 0 || u >= static_cast<int>(n) ||
          v >= static_cast<int>(n) || u == v)
        throw ParseError("abstract graph edge out of range");
  const TripleSigns ts = make_triple_signs(pts);
  const EdgeTable t = make_edge_table(ts);
  int req = -1;
  if (require_edge.first >= 0 || require_edge.second >= 0) {
    if (require_edge.first < 0 || require_edge.second < 0 ||
        require_edge.first >= static_cast<int>(n) ||
        require_edge.second >= static_cast<int>(n) ||
        require_edge.first == require_edge.second)
      throw ParseError("required edge out of range");
    req = t.id[require_edge.first][require_edge.second];
  }

  std::set<uint64_t> good, bad;
  std::vector<int> perm(n);
  for (const AbstractGraph& g : graphs) {
    for (size_t v = 0; v < n; ++v) perm[v] = static_cast<int>(v);
    do {
      uint64_t mask = 0;
      for (const auto& [u, v] : g) mask |= 1ull << t.id[perm[u]][perm[v]];
      if (req >= 0 && !((mask >> req) & 1)) continue;
      if (good.count(mask) || bad.count(mask)) continue;
      uint64_t banned = 0;
      bool ok = true;
      for (uint64_t rest = mask; rest;) {
        const int e = std::countr_zero(rest);
        rest &= rest - 1;
        if ((banned >> e) & 1) {
          ok = false;
          break;
        }
        banned |= t.cross[e];
      }
      (ok ? good : bad).insert(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Count(static_cast<unsigned long>(good.size()));
}

std::vector<AbstractGraph> abstract_k4_with_isolated(size_t m) {
  if (m < 4) throw ParseError("the K4 family needs at least four vertices");
  AbstractGraph g;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.emplace_back(u, v);
  return {g};
}

std::vector<AbstractGraph> abstract_cycle(size_t m) {
  if (m < 3) throw ParseError("a cycle needs at least three vertices");
  AbstractGraph g;
  for (size_t i = 0; i < m; ++i)
    g.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % m));
  return {g};
}

std::vector<AbstractGraph> abstract_matchings(size_t m) {
  std::vector<AbstractGraph> out;
  AbstractGraph cur;
  const std::function<void(uint32_t)> rec = [&](uint32_t used) {
    size_t v = 0;
    while (v < m && ((used >> v) & 1)) ++v;
    if (v == m) {
      out.push_back(cur);
      return;
    }
    rec(used | (1u << v));
    for (size_t w = v + 1; w < m; ++w) {
      if ((used >> w) & 1) continue;
      cur.emplace_back(static_cast<int>(v), static_cast<int>(w));
      rec(used | (1u << v) | (1u << w));
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace wheelset
