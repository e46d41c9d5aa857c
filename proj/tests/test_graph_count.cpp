#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wheelset/graph_count.hpp"
#include "wheelset/oracle.hpp"
#include "wheelset/sequences.hpp"

using namespace wheelset;

namespace {

FrequencyVector fv(std::vector<int> entries) {
  return FrequencyVector{std::move(entries)};
}

std::vector<Point> full_point_set(const ConoWheelSet& cw) {
  std::vector<Point> pts = cw.hull;
  pts.push_back(cw.hub);
  return pts;
}

}  // namespace

TEST_SUITE_BEGIN("graph_count");

TEST_CASE("class names round-trip") {
  for (GraphClass cls : all_graph_classes())
    CHECK(parse_graph_class(to_string(cls)) == cls);
  CHECK_THROWS_AS(parse_graph_class("nonplanar_unicorns"), ParseError);
}

TEST_CASE("table values for small sizes") {
  const auto tri5 = build_class_table(GraphClass::embracing_triangles, 5);
  CHECK(tri5.gamma == Rat(10));
  CHECK(tri5.c_n == 6);
  CHECK(tri5.delta_at(1, 2) == 1);
  CHECK(tri5.delta_at(3, 0) == -3);
  CHECK_THROWS_AS(tri5.delta_at(1, 1), Error);
  CHECK_THROWS_AS(tri5.lambda_at(1, 2), Error);
  CHECK(tri5.lambda_at(1, 3) == binomial(1, 2) + binomial(3, 2));

  const auto m4 = build_class_table(GraphClass::matchings, 4);
  CHECK(m4.gamma == Rat(27));
  CHECK(m4.anchor_convex == motzkin(5));
  CHECK(m4.lambda_at(1, 2) == motzkin(1) * motzkin(2));

  const auto t4 = build_class_table(GraphClass::triangulations, 4);
  CHECK(t4.gamma == Rat(catalan(4), 2));
  CHECK(t4.anchor_convex == catalan(3));

  const auto p1 = build_class_table(GraphClass::spanning_paths, 1);
  CHECK(p1.anchor_convex == 1);
  CHECK_THROWS_AS(build_class_table(GraphClass::matchings, 0), ParseError);
}

TEST_CASE("delta antisymmetry and lambda symmetry") {
  for (GraphClass cls : all_graph_classes())
    for (size_t n = 1; n <= 20; ++n) {
      const auto t = build_class_table(cls, n);
      CAPTURE(to_string(cls));
      CAPTURE(n);
      for (size_t i = 0; i + 1 < n; ++i)
        CHECK(t.delta[i] == -t.delta[n - 2 - i]);
      for (size_t l = 0; l < n; ++l) CHECK(t.lambda[l] == t.lambda[n - 1 - l]);
    }
}

TEST_CASE("spanning tree deltas match the tree convolutions") {
  const auto convo_a = [](long long x) {
    Int s(0);
    for (long long k = 0; k <= x; ++k)
      s += ternary_trees(k + 1) * ternary_trees(x - k + 2);
    return s;
  };
  const auto convo_b = [](long long x) {
    Int s(0);
    for (long long k = 0; k <= x; ++k)
      s += ternary_trees(k + 1) * ternary_trees(x - k + 1);
    return s;
  };
  for (size_t n = 2; n <= 14; ++n) {
    const auto t = build_class_table(GraphClass::spanning_trees, n);
    for (size_t i = 0; i + 1 < n; ++i) {
      const long long x = static_cast<long long>(i);
      const long long y = static_cast<long long>(n - 2 - i);
      CHECK(t.delta[i] == 2 * (convo_a(y) * convo_b(x) - convo_a(x) * convo_b(y)));
    }
  }
}

TEST_CASE("engine count equals the brute-force oracle") {
  for (size_t n = 1; n <= 9; ++n) {
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto cw = realize_frequency_vector(f);
      const auto pts = full_point_set(cw);
      for (GraphClass cls : all_graph_classes()) {
        CAPTURE(to_string(cls));
        CAPTURE(f.str());
        CHECK(count(cls, f).value == oracle_graph_count(cls, pts));
      }
    }
  }
}

TEST_CASE("both evaluation forms agree") {
  for (size_t n = 1; n <= 14; ++n)
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto cw = realize_frequency_vector(f);
      for (GraphClass cls : all_graph_classes()) {
        CAPTURE(to_string(cls));
        CAPTURE(f.str());
        const auto by_f = count(cls, f);
        const auto by_set = count(cls, cw);
        CHECK(by_f.value == by_set.value);
        CHECK(by_f.convex_convention == by_set.convex_convention);
      }
    }
}

TEST_CASE("closed forms on special frequency vectors") {
  for (size_t n = 1; n <= 10; ++n) {
    const auto convex = convex_frequency_vector(n);
    CHECK(count(GraphClass::matchings, convex).value == motzkin(n + 1));
    CHECK(count(GraphClass::spanning_trees, convex).value == ternary_trees(n + 1));
    CHECK(count(GraphClass::embracing_triangles, convex).value == 0);
    for (const auto& f : enumerate_frequency_vectors(n)) {
      CAPTURE(f.str());
      CHECK(count(GraphClass::convex_partitions, f).value == catalan(n + 1));
      if (f.f[n - 1] > 0) continue;  // wheel sets below
      CHECK(count(GraphClass::spanning_cycles, f).value == n);
      CHECK(count(GraphClass::spanning_paths, f).value ==
            Count(n) * (Count(1) << (n - 1)));
    }
  }
  // non-extreme hub: the triangulation formula in closed form
  for (size_t n : {3, 5, 7}) {
    std::vector<int> entries(n, 0);
    entries[0] = static_cast<int>(n);
    const auto f = fv(entries);
    const size_t l = (n - 1) / 2;
    const Rat expect = Rat(catalan(n), 2) - Rat(n, 2) * catalan(l) * catalan(l);
    CHECK(Rat(count(GraphClass::triangulations, f).value) == expect);
    const auto cw = realize_frequency_vector(f);
    CHECK(count(GraphClass::triangulations, f).value ==
          oracle_graph_count(GraphClass::triangulations, full_point_set(cw)));
  }
}

TEST_CASE("worked examples") {
  CHECK(count(GraphClass::spanning_cycles, sym_frequency_vector(9)).value == 9);
  CHECK(count(GraphClass::triangulations, fv({0, 4, 0, 0})).value == 3);
  CHECK(count(GraphClass::embracing_triangles, fv({3, 0, 0})).value == 1);
  CHECK(count(GraphClass::convex_partitions, sym_frequency_vector(4)).value == 42);
  const auto conv = count(GraphClass::triangulations, convex_frequency_vector(6));
  CHECK(conv.value == catalan(5));
  CHECK(conv.convex_convention);
  CHECK_FALSE(count(GraphClass::matchings, convex_frequency_vector(6)).convex_convention);
  CHECK_THROWS_AS(count(GraphClass::matchings, fv({1, 1})), ParseError);
}

TEST_CASE("embracing subset counts match the oracle") {
  for (size_t n = 3; n <= 12; ++n)
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto cw = realize_frequency_vector(f);
      const auto prof = embrace_counts_2d(cw);
      CAPTURE(f.str());
      REQUIRE(prof.counts.size() == n - 2);
      for (size_t k = 3; k <= n; ++k)
        CHECK(prof.embr(k) == oracle_embrace(cw.hull, cw.hub, k));
    }
}

TEST_CASE("embracing profile inversion round-trips") {
  for (size_t n = 1; n <= 12; ++n)
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto cw = realize_frequency_vector(f);
      CAPTURE(f.str());
      CHECK(frequency_from_embrace(embrace_counts_2d(cw)) == f);
    }
  // an all-zero profile is convex position
  EmbraceProfile zeros;
  zeros.n = 6;
  zeros.counts.assign(4, Count(0));
  CHECK(frequency_from_embrace(zeros) == convex_frequency_vector(6));
  // the symmetric five-point wheel embraces with five triangles
  const auto sym5 = embrace_counts_2d(realize_frequency_vector(sym_frequency_vector(5)));
  CHECK(sym5.embr(3) == 5);

  EmbraceProfile bad;
  bad.n = 4;
  bad.counts = {Count(5), Count(0)};  // more triples than exist
  CHECK_THROWS_AS(frequency_from_embrace(bad), InconsistentProfileError);
  EmbraceProfile wrong_len;
  wrong_len.n = 5;
  wrong_len.counts = {Count(0)};
  CHECK_THROWS_AS(frequency_from_embrace(wrong_len), InconsistentProfileError);
  EmbraceProfile impossible;
  impossible.n = 5;
  impossible.counts = {Count(1), Count(5), Count(1)};
  CHECK_THROWS_AS(frequency_from_embrace(impossible), InconsistentProfileError);
}

TEST_CASE("triangle family basics") {
  const auto cw = realize_frequency_vector(fv({3, 0, 0}));
  const auto fam = triangle_family(cw);
  CHECK(fam.n == 3);
  CHECK(fam.triples == std::set<std::array<int, 3>>{{0, 1, 2}});
  for (size_t n = 3; n <= 9; ++n)
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto w = realize_frequency_vector(f);
      CAPTURE(f.str());
      CHECK(Count(triangle_family(w).triples.size()) ==
            embrace_counts_2d(w).embr(3));
    }
}

TEST_CASE("triangle families pin down the order type") {
  for (size_t n = 3; n <= 9; ++n) {
    for (const std::string& code : enumerate_order_types(n, true)) {
      const auto cw = realize_necklace(Necklace::from_string(code));
      const auto fam = triangle_family(cw);
      CAPTURE(code);
      CHECK(order_type_from_triangles(fam) == code);
    }
  }
}

TEST_CASE("order type reconstruction is label-free") {
  const auto cw = realize_frequency_vector(sym_frequency_vector(7));
  const auto fam = triangle_family(cw);
  const std::string want = order_type_from_triangles(fam);
  // relabel the outer points and feed the renamed family back in
  const std::vector<int> perm{3, 5, 0, 6, 1, 4, 2};
  TriangleFamily renamed;
  renamed.n = fam.n;
  for (const auto& t : fam.triples) {
    std::array<int, 3> u{perm[t[0]], perm[t[1]], perm[t[2]]};
    std::sort(u.begin(), u.end());
    renamed.triples.insert(u);
  }
  CHECK(order_type_from_triangles(renamed) == want);
}

TEST_CASE("order type reconstruction edge cases") {
  TriangleFamily empty8;
  empty8.n = 8;
  CHECK(order_type_from_triangles(empty8) == "0000000011111111");

  TriangleFamily lonely;
  lonely.n = 4;
  lonely.triples.insert({0, 1, 2});
  CHECK_THROWS_AS(order_type_from_triangles(lonely), NotRealizableError);

  TriangleFamily out_of_range;
  out_of_range.n = 3;
  out_of_range.triples.insert({0, 1, 5});
  CHECK_THROWS_AS(order_type_from_triangles(out_of_range), ParseError);

  TriangleFamily too_big;
  too_big.n = 33;
  too_big.triples.insert({0, 1, 2});
  CHECK_THROWS_AS(order_type_from_triangles(too_big), BoundError);
}

TEST_CASE("crossing statistics") {
  // convex positions have no concave quadruple
  std::vector<Point> pentagon;
  for (long t : {0, 1, -1, 2, -2}) {
    const Rat tt(t * t);
    pentagon.push_back(Point{(1 - tt) / (1 + tt), Rat(2 * t) / (1 + tt)});
  }
  const auto conv = crossing_stats(pentagon);
  CHECK(conv.convex_quads == 5);
  CHECK(conv.concave_quads == 0);

  for (size_t n : {4, 6, 8}) {
    for (const auto& f : enumerate_frequency_vectors(n)) {
      const auto pts = full_point_set(realize_frequency_vector(f));
      const auto cs = crossing_stats(pts);
      CAPTURE(f.str());
      CHECK(cs.concave_quads ==
            oracle_graph_count(GraphClass::embracing_triangles, pts));
      CHECK(cs.convex_quads + cs.concave_quads ==
            binomial(static_cast<long long>(pts.size()), 4));
    }
  }
  std::vector<Point> collinear{Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(1)},
                               Point{Rat(2), Rat(2)}, Point{Rat(5), Rat(0)}};
  CHECK_THROWS_AS(crossing_stats(collinear), DegenerateError);
}

TEST_CASE("the symmetric wheel maximizes monotone classes") {
  const auto e11 = check_sym_maximizer(GraphClass::embracing_triangles, 11);
  CHECK(e11.delta_nonneg);
  CHECK(e11.sym_is_max);
  const auto t10 = check_sym_maximizer(GraphClass::spanning_trees, 10);
  CHECK(t10.delta_nonneg);
  CHECK(t10.sym_is_max);
  const auto c8 = check_sym_maximizer(GraphClass::spanning_cycles, 8);
  CHECK(c8.delta_nonneg);
  CHECK(c8.sym_is_max);
  const auto m9 = check_sym_maximizer(GraphClass::matchings, 9);
  CHECK(m9.delta_nonneg);
  CHECK(m9.sym_is_max);
  // triangulations: the deltas are nonnegative yet convex position wins
  const auto tr5 = check_sym_maximizer(GraphClass::triangulations, 5);
  CHECK(tr5.delta_nonneg);
  CHECK_FALSE(tr5.sym_is_max);
}

TEST_CASE("mutation deltas from explicit placements") {
  // built-in tables against oracle recounts across the mutation
  for (size_t n = 4; n <= 6; ++n) {
    for (size_t i = 1; i + 1 <= n - 2; ++i) {
      const size_t j = n - 2 - i;
      auto [before, after] = mutation_pair(i, j);
      for (GraphClass cls : all_graph_classes()) {
        CAPTURE(to_string(cls));
        CAPTURE(i);
        CAPTURE(j);
        const Int diff = Int(oracle_graph_count(cls, after)) -
                         Int(oracle_graph_count(cls, before));
        CHECK(diff == build_class_table(cls, n).delta_at(i, j));
      }
    }
    // hub exit through the hull: valid for every class except triangulations
    auto [before, after] = mutation_pair(0, n - 2);
    for (GraphClass cls : all_graph_classes()) {
      if (cls == GraphClass::triangulations) continue;
      CAPTURE(to_string(cls));
      const Int diff = Int(oracle_graph_count(cls, after)) -
                       Int(oracle_graph_count(cls, before));
      CHECK(diff == build_class_table(cls, n).delta_at(0, n - 2));
    }
  }
}

TEST_CASE("custom class deltas") {
  CHECK(custom_class_delta(abstract_k4_with_isolated(8), 2, 3) == 1);
  CHECK(custom_class_delta(abstract_cycle(6), 1, 2) == 0);
  CHECK(custom_class_delta(abstract_matchings(5), 1, 1) == 0);
  CHECK(custom_class_delta(abstract_matchings(5), 0, 2) == 2);
  // family deltas reproduce the built-in tables
  for (size_t n = 3; n <= 5; ++n)
    for (size_t i = 0; i + 1 < n; ++i) {
      const size_t j = n - 2 - i;
      CAPTURE(n);
      CAPTURE(i);
      CHECK(custom_class_delta(abstract_k4_with_isolated(n + 1), i, j) ==
            build_class_table(GraphClass::embracing_triangles, n).delta_at(i, j));
      CHECK(custom_class_delta(abstract_matchings(n + 1), i, j) ==
            build_class_table(GraphClass::matchings, n).delta_at(i, j));
      if (n >= 3)
        CHECK(custom_class_delta(abstract_cycle(n + 1), i, j) ==
              build_class_table(GraphClass::spanning_cycles, n).delta_at(i, j));
    }
  CHECK_THROWS_AS(custom_class_delta(abstract_cycle(12), 4, 6), BoundError);
}

TEST_SUITE_END();
