#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wheelset/exact.hpp"
#include "wheelset/linalg.hpp"
#include "wheelset/predicates.hpp"
#include "wheelset/sequences.hpp"

using namespace wheelset;

TEST_SUITE_BEGIN("exact_core");

TEST_CASE("rational parsing and normal form") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/8") == Rat(-3, 4));
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-0") == Rat(0));
  // normal form: lowest terms with positive denominator
  const Rat x = parse_rational("-6/8");
  CHECK(numerator(x) == -3);
  CHECK(denominator(x) == 4);
  CHECK(parse_rational("2/4") == parse_rational("1/2"));
  CHECK(to_string(parse_rational("-6/8")) == "-3/4");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("orientation in the plane") {
  const Point q{Rat(0), Rat(0)};
  const Point a{Rat(1), Rat(0)};
  const Point b{Rat(0), Rat(1)};
  CHECK(orient(q, {a, b}) == 1);
  CHECK(orient(q, {b, a}) == -1);
  CHECK(orient(q, {a, Point{Rat(2), Rat(0)}}) == 0);
  CHECK(orient2(q, a, b) == 1);
}

TEST_CASE("orientation: permutation parity and query-side flip") {
  std::mt19937_64 rng(7);
  auto coord = [&] { return Rat(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 7); };
  for (size_t d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      Point q;
      std::vector<Point> simplex(d);
      for (size_t j = 0; j < d; ++j) q.coords.push_back(coord());
      for (auto& p : simplex)
        for (size_t j = 0; j < d; ++j) p.coords.push_back(coord());
      const int base = orient(q, simplex);
      // swapping two simplex entries flips the sign
      std::vector<Point> swapped = simplex;
      std::swap(swapped[0], swapped[d - 1]);
      CHECK(orient(q, swapped) == -base);
      // an even permutation (two swaps) preserves it
      if (d >= 3) {
        std::vector<Point> rotated = simplex;
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.begin() + 3);
        CHECK(orient(q, rotated) == base);
      }
    }
  }
}

TEST_CASE("determinant: Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 2 + trial % 3;
    RatMatrix m(n, std::vector<Rat>(n));
    IntMatrix mi(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const long v = static_cast<long>(rng() % 41) - 20;
        m[i][j] = Rat(v);
        mi[i][j] = Int(v);
      }
    CHECK(Rat(bareiss_det(mi)) == det(m));
  }
}

TEST_CASE("determinant of larger matrices via row-cleared elimination") {
  // det of a 6x6 with known value: companion-style band matrix
  RatMatrix m(6, std::vector<Rat>(6, Rat(0)));
  for (size_t i = 0; i < 6; ++i) m[i][i] = Rat(2);
  for (size_t i = 0; i + 1 < 6; ++i) {
    m[i][i + 1] = Rat(1, 3);
    m[i + 1][i] = Rat(1, 2);
  }
  // tridiagonal determinant recurrence d_k = 2 d_{k-1} - (1/6) d_{k-2}
  Rat d0(1), d1(2);
  for (int k = 2; k <= 6; ++k) {
    Rat d2 = 2 * d1 - Rat(1, 6) * d0;
    d0 = d1;
    d1 = d2;
  }
  CHECK(det(m) == d1);
  CHECK(det_sign(m) == 1);
}

TEST_CASE("solve distinguishes unique, underdetermined and inconsistent") {
  RatMatrix m = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  auto x = solve(m, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 3);
  // rank-deficient but consistent: no unique solution
  RatMatrix flat = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_FALSE(solve(flat, {Rat(3), Rat(6)}).has_value());
  // rank-deficient and inconsistent: the augmented column gains the pivot
  CHECK_FALSE(solve(flat, {Rat(3), Rat(7)}).has_value());
  RatMatrix plane = {{Rat(1), Rat(-1), Rat(0), Rat(0)},
                     {Rat(0), Rat(0), Rat(1), Rat(-1)},
                     {Rat(0), Rat(0), Rat(0), Rat(0)},
                     {Rat(1), Rat(1), Rat(1), Rat(1)}};
  CHECK_FALSE(solve(plane, {Rat(0), Rat(0), Rat(1, 25), Rat(1)}).has_value());
}

TEST_CASE("nullspace shape and membership") {
  RatMatrix m = {{Rat(1), Rat(2), Rat(3), Rat(4)}, {Rat(0), Rat(1), Rat(1), Rat(1)}};
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    CHECK(v.size() == 4);
    for (const auto& row : m) {
      Rat dot(0);
      for (size_t j = 0; j < 4; ++j) dot += row[j] * v[j];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("radial order around a center") {
  const Point w{Rat(0), Rat(0)};
  CHECK(radial_compare(w, Point{Rat(1), Rat(0)}, Point{Rat(0), Rat(1)}) ==
        RadialOrder::before);
  CHECK(radial_compare(w, Point{Rat(0), Rat(1)}, Point{Rat(1), Rat(0)}) ==
        RadialOrder::after);
  CHECK(radial_compare(w, Point{Rat(1), Rat(0)}, Point{Rat(2), Rat(0)}) ==
        RadialOrder::same_ray);
  CHECK(radial_compare(w, Point{Rat(1), Rat(1)}, Point{Rat(-2), Rat(-2)}) ==
        RadialOrder::opposite_ray);
  // order sweeps counterclockwise from the positive x axis
  CHECK(radial_compare(w, Point{Rat(1), Rat(-1)}, Point{Rat(1), Rat(1)}) ==
        RadialOrder::after);
}

TEST_CASE("left counts match the quadratic definition") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const size_t n = 3 + trial % 9;
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p{Rat(static_cast<long>(rng() % 201) - 100),
              Rat(static_cast<long>(rng() % 201) - 100)};
      if (is_origin(p)) continue;
      bool bad = false;
      for (const auto& q : pts)
        if (cross2(p, q) == 0) bad = true;
      if (!bad) pts.push_back(std::move(p));
    }
    const auto fast = left_counts_of_directions(pts);
    for (size_t i = 0; i < n; ++i) {
      long slow = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != i && cross2(pts[i], pts[j]).sign() > 0) ++slow;
      CHECK(fast[i] == slow);
    }
  }
}

TEST_CASE("left counts reject collinear directions") {
  std::vector<Point> pts{Point{Rat(1), Rat(0)}, Point{Rat(2), Rat(0)},
                         Point{Rat(0), Rat(1)}};
  CHECK_THROWS_AS(left_counts_of_directions(pts), DegenerateError);
}

TEST_CASE("catalan, motzkin, ternary against binomial closed forms") {
  for (size_t k = 0; k <= 64; ++k) {
    CHECK(catalan(k) == exact_div(binomial(2 * (long long)k, (long long)k), Int(k) + 1));
    // Motzkin via its defining sum over Catalan numbers
    Int m(0);
    for (size_t j = 0; 2 * j <= k; ++j)
      m += binomial((long long)k, 2 * (long long)j) * catalan(j);
    CHECK(motzkin(k) == m);
  }
  for (size_t k = 1; k <= 64; ++k) {
    CHECK(ternary_trees(k) ==
          exact_div(binomial(3 * ((long long)k - 1), (long long)k - 1), 2 * Int(k) - 1));
  }
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(motzkin(4) == 9);
  CHECK(motzkin(6) == 51);
  CHECK(ternary_trees(3) == 3);
  CHECK(ternary_trees(4) == 12);
}

TEST_CASE("ternary tree convolution identity") {
  // sum_{k=0..m} T_{k+1} T_{m-k+1} = binom(3m+1, m)/(m+1)
  for (long long m = 0; m <= 20; ++m) {
    Int lhs(0);
    for (long long k = 0; k <= m; ++k)
      lhs += ternary_trees(k + 1) * ternary_trees(m - k + 1);
    CHECK(lhs == exact_div(binomial(3 * m + 1, m), Int(m) + 1));
  }
}

TEST_CASE("totient and binomial basics") {
  CHECK(totient(1) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(12) == 4);
  CHECK(totient(13) == 12);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(Int(50), Int(25)) == binomial(50LL, 25LL));
}

TEST_SUITE_END();
