#include "wheelset/wheel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wheelset/predicates.hpp"
#include "wheelset/sequences.hpp"

namespace wheelset {

namespace {

// Rational unit-circle direction with tangent-half-angle t: for t >= 0 the
// angle 2*atan(t) sweeps [0, pi) monotonically, so increasing integer t
// values give strictly counterclockwise-ordered directions in a half-turn.
Point circle_direction(long t) {
  const Int tt = Int(t) * t;
  const Rat den = Rat(tt + 1);
  return Point{Rat(1 - tt) / den, Rat(2 * t) / den};
}

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b,
                              const Point& c) {
  const int s1 = orient2(a, b, p);
  const int s2 = orient2(b, c, p);
  const int s3 = orient2(c, a, p);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

// p strictly inside conv(others)? By Caratheodory it suffices to scan
// triangles; general position turns boundary cases into errors elsewhere.
bool interior_point(const std::vector<Point>& pts, size_t skip) {
  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i) {
    if (i == skip) continue;
    for (size_t j = i + 1; j < m; ++j) {
      if (j == skip) continue;
      for (size_t k = j + 1; k < m; ++k) {
        if (k == skip) continue;
        if (strictly_inside_triangle(pts[skip], pts[i], pts[j], pts[k])) return true;
      }
    }
  }
  return false;
}

std::vector<int> allowed_imbalances(size_t n) {
  std::vector<int> ks;
  for (int k = (n % 2 == 1) ? 0 : 1; k < static_cast<int>(n); k += 2) ks.push_back(k);
  return ks;
}

uint64_t encode_beads(const std::vector<uint8_t>& beads) {
  // bead 0 in the most significant used bit, so numeric order is lex order
  uint64_t w = 0;
  for (uint8_t b : beads) w = (w << 1) | (b & 1);
  return w;
}

uint64_t min_over_rotations(uint64_t w, size_t len) {
  const uint64_t mask = (len == 64) ? ~0ull : ((1ull << len) - 1);
  uint64_t best = w;
  for (size_t r = 1; r < len; ++r) {
    w = ((w << 1) | (w >> (len - 1))) & mask;
    best = std::min(best, w);
  }
  return best;
}

std::string decode_word(uint64_t w, size_t len) {
  std::string s(len, '0');
  for (size_t i = 0; i < len; ++i)
    if (w >> (len - 1 - i) & 1) s[i] = '1';
  return s;
}

}  // namespace

std::string FrequencyVector::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ',';
    out << f[i];
  }
  out << ')';
  return out.str();
}

bool Necklace::self_dual() const {
  const size_t n2 = beads.size();
  if (n2 == 0 || n2 % 2) return false;
  for (size_t i = 0; i < n2 / 2; ++i)
    if (beads[i] == beads[i + n2 / 2]) return false;
  return true;
}

std::string Necklace::str() const {
  std::string s;
  s.reserve(beads.size());
  for (uint8_t b : beads) s.push_back(b ? '1' : '0');
  return s;
}

Necklace Necklace::from_string(const std::string& bits) {
  Necklace nk;
  nk.beads.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("necklace: beads must be 0 or 1");
    nk.beads.push_back(c == '1');
  }
  if (nk.beads.empty() || nk.beads.size() % 2)
    throw ParseError("necklace: bead count must be even and positive");
  return nk;
}

ConoWheelSet build_conowheel(const std::vector<Point>& pts, size_t extra_index) {
  if (pts.size() < 2) throw NotConowheelError("conowheel: need at least 2 points");
  if (extra_index >= pts.size()) throw Error("conowheel: hub index out of range");
  for (const auto& p : pts)
    if (p.dim() != 2) throw Error("conowheel: planar points required");

  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      if (pts[i] == pts[j]) throw DegenerateError("conowheel: repeated point");
      for (size_t k = j + 1; k < m; ++k)
        if (orient2(pts[i], pts[j], pts[k]) == 0)
          throw DegenerateError("conowheel: three collinear points");
    }

  for (size_t i = 0; i < m; ++i) {
    if (i == extra_index) continue;
    if (interior_point(pts, i))
      throw NotConowheelError("conowheel: non-hub point is not extreme");
  }

  ConoWheelSet s;
  s.hub = pts[extra_index];
  for (size_t i = 0; i < m; ++i)
    if (i != extra_index) s.hull.push_back(pts[i]);
  s.hub_interior = interior_point(pts, extra_index);
  s.lcount = left_counts(s.hub, s.hull);
  s.rcount.resize(s.n());
  for (size_t i = 0; i < s.n(); ++i)
    s.rcount[i] = static_cast<long>(s.n()) - 1 - s.lcount[i];
  return s;
}

FrequencyVector frequency_vector(const ConoWheelSet& s) {
  FrequencyVector fv;
  fv.f.assign(s.n(), 0);
  for (size_t i = 0; i < s.n(); ++i)
    ++fv.f[static_cast<size_t>(std::abs(s.lcount[i] - s.rcount[i]))];
  return fv;
}

ValidationReport validate_frequency_vector(const std::vector<Int>& f) {
  ValidationReport rep;
  const size_t n = f.size();
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  if (n == 0) {
    fail("length must be positive");
    return rep;
  }
  Int sum(0);
  for (const auto& x : f) {
    if (x < 0) {
      fail("entries must be non-negative");
      break;
    }
    sum += x;
  }
  if (sum != Int(n)) fail("entries must sum to n");
  for (size_t k = 0; k < n; ++k) {
    if (k % 2 == n % 2 && f[k] != 0) {
      fail("entry at index with the parity of n must be zero");
      break;
    }
  }
  for (size_t k = 1; k < n; ++k) {
    if (f[k] % 2 != 0) {
      fail("entries at positive indices must be even");
      break;
    }
  }
  for (size_t k = 2; k < n; ++k) {
    if (f[k] != 0 && f[k - 2] == 0) {
      fail("support must be downward closed in steps of two");
      break;
    }
  }
  return rep;
}

std::vector<FrequencyVector> enumerate_frequency_vectors(size_t n) {
  if (n == 0) return {};
  const std::vector<int> ks = allowed_imbalances(n);
  std::vector<FrequencyVector> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
    const int k = ks[pos];
    const int minv = (k == 0) ? 1 : 2;
    for (int v = minv; v <= remaining; v += 2) {
      cur[static_cast<size_t>(k)] = v;
      if (v == remaining)
        out.push_back(FrequencyVector{cur});
      else if (pos + 1 < ks.size() && remaining - v >= 2)
        self(self, pos + 1, remaining - v);
      cur[static_cast<size_t>(k)] = 0;
    }
  };
  rec(rec, 0, static_cast<int>(n));
  return out;
}

Count count_frequency_vectors(size_t n) {
  if (n == 0) throw Error("count_frequency_vectors: n must be positive");
  return Int(1) << ((n + 1) / 2 - 1);
}

ConoWheelSet realize_frequency_vector(const FrequencyVector& f) {
  std::vector<Int> as_int(f.f.begin(), f.f.end());
  const ValidationReport rep = validate_frequency_vector(as_int);
  if (!rep.ok) throw ParseError("invalid frequency vector: " + rep.violations.front());
  const size_t n = f.n();

  int k_max = 0;
  for (size_t k = 0; k < n; ++k)
    if (f.f[k] != 0) k_max = static_cast<int>(k);

  // Imbalance walk: start at -k_max-1, climb to just below the smallest
  // allowed imbalance, then oscillate over each allowed value often enough
  // to hit its prescribed frequency, ending at +k_max+1.
  std::vector<int> walk{-k_max - 1};
  const std::vector<int> ks = allowed_imbalances(n);
  const int first = ks.front();
  while (walk.back() < first - 1) walk.push_back(walk.back() + 2);
  for (int k : ks) {
    if (k > k_max) break;
    const int jumps = f.f[static_cast<size_t>(k)] - (k == 0 ? 0 : 1);
    for (int t = 0; t < jumps; ++t)
      walk.push_back(walk.back() + ((t % 2 == 0) ? 2 : -2));
  }
  if (walk.size() != n + 1 || walk.back() != k_max + 1)
    throw Error("realize_frequency_vector: internal walk construction failed");

  // One line per step, counterclockwise within a half-turn; a rising step
  // puts the point on the back ray, a falling step on the front ray.
  std::vector<Point> pts;
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    Point u = circle_direction(static_cast<long>(i) + 1);
    if (walk[i + 1] > walk[i]) {
      u[0] = -u[0];
      u[1] = -u[1];
    }
    pts.push_back(std::move(u));
  }
  pts.push_back(Point{Rat(0), Rat(0)});

  ConoWheelSet s = build_conowheel(pts, pts.size() - 1);
  if (frequency_vector(s) != f)
    throw Error("realize_frequency_vector: realization does not match input");
  return s;
}

Necklace necklace_of(const ConoWheelSet& s) {
  struct Event {
    Point dir;
    uint8_t black;
  };
  std::vector<Event> events;
  events.reserve(2 * s.n());
  for (const auto& h : s.hull) {
    Point v = h - s.hub;
    Point a{-v[0], -v[1]};
    events.push_back({std::move(v), 1});
    events.push_back({std::move(a), 0});
  }
  const Point origin{Rat(0), Rat(0)};
  // The sweep starts at the positive x axis; [0, pi) is the first half turn.
  auto first_half = [](const Point& v) {
    const int sy = v[1].sign();
    return sy > 0 || (sy == 0 && v[0].sign() > 0);
  };
  std::sort(events.begin(), events.end(), [&](const Event& x, const Event& y) {
    const RadialOrder r = radial_compare(origin, x.dir, y.dir);
    if (r == RadialOrder::same_ray)
      throw DegenerateError("necklace: two hull points collinear with the hub");
    // Antipodal events are a point and another point's reflection; the one in
    // the first half turn sweeps first.
    if (r == RadialOrder::opposite_ray) return first_half(x.dir);
    return r == RadialOrder::before;
  });
  Necklace nk;
  nk.beads.reserve(events.size());
  for (const auto& e : events) nk.beads.push_back(e.black);
  return nk;
}

std::string canonical_necklace(const Necklace& nk, bool identify_reflection) {
  const size_t len = nk.size();
  if (len == 0 || len % 2) throw ParseError("necklace: bead count must be even and positive");
  if (len > 64) throw BoundError("necklace: at most 32 hull points supported");
  uint64_t best = min_over_rotations(encode_beads(nk.beads), len);
  if (identify_reflection) {
    std::vector<uint8_t> rev(nk.beads.rbegin(), nk.beads.rend());
    best = std::min(best, min_over_rotations(encode_beads(rev), len));
  }
  return decode_word(best, len);
}

ConoWheelSet realize_necklace(const Necklace& nk) {
  if (!nk.self_dual())
    throw ParseError("necklace: beads at distance n must differ");
  const size_t n = nk.n();
  std::vector<Point> pts;
  for (size_t j = 0; j < 2 * n; ++j) {
    if (!nk.beads[j]) continue;
    Point u = circle_direction(static_cast<long>(j % n));
    if (j >= n) {
      u[0] = -u[0];
      u[1] = -u[1];
    }
    pts.push_back(std::move(u));
  }
  pts.push_back(Point{Rat(0), Rat(0)});
  ConoWheelSet s = build_conowheel(pts, pts.size() - 1);
  if (canonical_necklace(necklace_of(s), false) != canonical_necklace(nk, false))
    throw Error("realize_necklace: realization does not match input");
  return s;
}

FrequencyVector frequency_vector_of_necklace(const Necklace& nk) {
  if (!nk.self_dual()) throw ParseError("necklace: beads at distance n must differ");
  const size_t n = nk.n();
  FrequencyVector fv;
  fv.f.assign(n, 0);
  for (size_t i = 0; i < 2 * n; ++i) {
    if (!nk.beads[i]) continue;
    long l = 0;
    for (size_t t = 1; t < n; ++t)
      if (nk.beads[(i + t) % (2 * n)]) ++l;
    const long r = static_cast<long>(n) - 1 - l;
    ++fv.f[static_cast<size_t>(std::abs(l - r))];
  }
  return fv;
}

Count count_order_types(size_t n, bool identify_reflection) {
  if (n == 0) throw Error("count_order_types: n must be positive");
  Int s(0);
  for (size_t k = 1; k <= n; k += 2) {
    if (n % k) continue;
    s += totient(k) * (Int(1) << (n / k));
  }
  Rat total = Rat(s, Int(2 * n));
  if (identify_reflection) {
    total /= 2;
    // 2^floor((n-3)/2), which is 1/2 for n in {1, 2}
    if (n >= 3)
      total += Rat(Int(1) << ((n - 3) / 2));
    else
      total += Rat(1, 2);
  }
  if (denominator(total) != 1) throw Error("count_order_types: non-integral total");
  return numerator(total);
}

std::vector<std::string> enumerate_order_types(size_t n, bool identify_reflection,
                                               size_t bound) {
  if (n == 0) throw Error("enumerate_order_types: n must be positive");
  if (n > bound) throw BoundError("enumerate_order_types: n exceeds the search bound");
  std::set<std::string> seen;
  Necklace nk;
  nk.beads.assign(2 * n, 0);
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    for (size_t i = 0; i < n; ++i) {
      nk.beads[i] = (x >> i) & 1;
      nk.beads[i + n] = !nk.beads[i];
    }
    seen.insert(canonical_necklace(nk, identify_reflection));
  }
  return {seen.begin(), seen.end()};
}

FrequencyVector sym_frequency_vector(size_t n) {
  if (n == 0) throw Error("sym_frequency_vector: n must be positive");
  FrequencyVector fv;
  fv.f.assign(n, 0);
  if (n % 2 == 1)
    fv.f[0] = static_cast<int>(n);
  else
    fv.f[1] = static_cast<int>(n);
  return fv;
}

FrequencyVector convex_frequency_vector(size_t n) {
  if (n == 0) throw Error("convex_frequency_vector: n must be positive");
  FrequencyVector fv;
  fv.f.assign(n, 0);
  for (long i = 1; i <= static_cast<long>(n); ++i)
    ++fv.f[static_cast<size_t>(std::abs(static_cast<long>(n) - 2 * i + 1))];
  return fv;
}

}  // namespace wheelset
