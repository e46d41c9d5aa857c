#include "wheelset/oracle.hpp"

namespace wheelset {

namespace {

// Appendix figure coordinates are published as drawings, not numbers; the
// rational points below reproduce every combinatorial property the drawings
// encode (side counts per pair, containment pattern, expected counts) and
// were locked only after those checks passed.

Fixture appendix_b_pair() {
  const std::vector<Point> shared = {
      {Rat(0), Rat(1)},            // top hull vertex
      {Rat(-29, 20), Rat(2, 5)},   // upper left
      {Rat(-29, 20), Rat(-2, 5)},  // lower left
      {Rat(0), Rat(-1)},           // bottom hull vertex
      {Rat(27, 50), Rat(-9, 20)},  // interior companion
      {Rat(3, 2), Rat(0)},         // right hull vertex
  };
  Fixture f;
  f.name = "appendix_b_pair";
  f.sets.push_back({shared, Point{Rat(-1, 5), Rat(0)}});
  f.sets.push_back({shared, Point{Rat(1, 5), Rat(0)}});
  f.expected["triangulation_difference"] = {"1", Provenance::published};
  f.expected["triangulations"] = {"25,26", Provenance::derived};
  f.expected["point_frequency_multisets_equal"] = {"true",
                                                   Provenance::published};
  return f;
}

Fixture appendix_c_pair() {
  // Six points above the z = 0 plane and one below; the query is the origin.
  // Counts depend only on the directions from the origin, so each point
  // carries its own positive scale, chosen so that no four points are
  // affinely dependent and the brute-force counter accepts the sets.
  const std::vector<Point> first = {
      {Rat(7, 10), Rat(7, 10), Rat(1)},
      {Rat(0), Rat(2), Rat(2)},
      {Rat(-21, 10), Rat(21, 10), Rat(3)},
      {Rat(-26, 5), Rat(-3), Rat(4)},
      {Rat(13, 2), Rat(-15, 4), Rat(5)},
      {Rat(-9, 5), Rat(-12, 5), Rat(6)},
      {Rat(-3, 10), Rat(2, 5), Rat(-1)},
  };
  const std::vector<Point> second = {
      {Rat(9, 8), Rat(2, 5), Rat(1)},
      {Rat(7, 5), Rat(2), Rat(2)},
      {Rat(0), Rat(18, 5), Rat(3)},
      {Rat(-14, 5), Rat(4), Rat(4)},
      {Rat(-45, 8), Rat(2), Rat(5)},
      {Rat(0), Rat(15), Rat(6)},
      {Rat(1, 5), Rat(-1, 2), Rat(-1)},
  };
  const Point origin{Rat(0), Rat(0), Rat(0)};
  Fixture f;
  f.name = "appendix_c_pair";
  f.sets.push_back({first, origin});
  f.sets.push_back({second, origin});
  f.expected["depths"] = {"6,4", Provenance::published};
  f.expected["frequency_vector"] = {"0,12,0,9,0,0", Provenance::published};
  return f;
}

Fixture fig1_trio() {
  // Hull points on the unit circle, hub at the origin. The hull coordinates
  // realize the three frequency vectors and were frozen from the output of
  // realize_frequency_vector.
  Fixture f;
  f.name = "fig1_trio";
  f.sets.push_back({{
                        {Rat(0), Rat(-1)},
                        {Rat(3, 5), Rat(-4, 5)},
                        {Rat(4, 5), Rat(-3, 5)},
                        {Rat(15, 17), Rat(-8, 17)},
                        {Rat(12, 13), Rat(-5, 13)},
                        {Rat(35, 37), Rat(-12, 37)},
                        {Rat(24, 25), Rat(-7, 25)},
                    },
                    Point{Rat(0), Rat(0)}});
  f.sets.push_back({{
                        {Rat(0), Rat(-1)},
                        {Rat(3, 5), Rat(-4, 5)},
                        {Rat(4, 5), Rat(-3, 5)},
                        {Rat(15, 17), Rat(-8, 17)},
                        {Rat(12, 13), Rat(-5, 13)},
                        {Rat(-35, 37), Rat(12, 37)},
                        {Rat(24, 25), Rat(-7, 25)},
                    },
                    Point{Rat(0), Rat(0)}});
  f.sets.push_back({{
                        {Rat(0), Rat(-1)},
                        {Rat(-3, 5), Rat(4, 5)},
                        {Rat(4, 5), Rat(-3, 5)},
                        {Rat(-15, 17), Rat(8, 17)},
                        {Rat(12, 13), Rat(-5, 13)},
                        {Rat(-35, 37), Rat(12, 37)},
                        {Rat(24, 25), Rat(-7, 25)},
                    },
                    Point{Rat(0), Rat(0)}});
  f.expected["frequency_vectors"] = {
      "1,0,2,0,2,0,2;1,0,2,0,4,0,0;7,0,0,0,0,0,0", Provenance::published};
  return f;
}

}  // namespace

Fixture fixture(const std::string& name) {
  if (name == "appendix_b_pair") return appendix_b_pair();
  if (name == "appendix_c_pair") return appendix_c_pair();
  if (name == "fig1_trio") return fig1_trio();
  throw ParseError("unknown fixture: " + name);
}

}  // namespace wheelset
