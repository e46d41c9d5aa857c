#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wheelset/exact.hpp"

namespace wheelset {

/// Histogram of |l(h) - r(h)| over the hull points of a conowheel set:
/// entry k counts the points whose left/right imbalance around the hub is k.
struct FrequencyVector {
  std::vector<int> f;

  size_t n() const { return f.size(); }
  bool operator==(const FrequencyVector&) const = default;
  std::string str() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Cyclic 0/1 bead sequence of length 2n; bead i and bead i+n always differ.
/// Black (1) beads are hull-point directions, white (0) beads are their
/// antipodes, both in counterclockwise sweep order around the hub.
struct Necklace {
  std::vector<uint8_t> beads;

  size_t size() const { return beads.size(); }
  size_t n() const { return beads.size() / 2; }
  bool self_dual() const;
  std::string str() const;
  static Necklace from_string(const std::string& bits);  // throws ParseError
};

/// n + 1 planar points in general position: n hull points (all extreme in
/// the whole set) plus a hub that may be extreme (convex position) or
/// interior (wheel set). lcount/rcount hold, per hull point h, the number of
/// hull points strictly left/right of the directed line hub -> h.
struct ConoWheelSet {
  std::vector<Point> hull;
  Point hub;
  std::vector<long> lcount, rcount;
  bool hub_interior = false;

  size_t n() const { return hull.size(); }
  bool convex_position() const { return !hub_interior; }
};

/// Validates general position and extremality of all non-hub points, then
/// computes the per-point counts. extra_index selects the hub within pts.
/// Throws DegenerateError / NotConowheelError.
ConoWheelSet build_conowheel(const std::vector<Point>& pts, size_t extra_index);

FrequencyVector frequency_vector(const ConoWheelSet& s);

/// Checks the four characterization conditions: entries sum to n; entry k is
/// zero when k and n have equal parity; entries at k >= 1 are even; the
/// support is a parity-class prefix (F_k != 0 with k >= 2 forces
/// F_{k-2} != 0). Reports every violated condition.
ValidationReport validate_frequency_vector(const std::vector<Int>& f);

/// All valid frequency vectors of length n; there are exactly
/// 2^(ceil(n/2) - 1) of them. Deterministic order.
std::vector<FrequencyVector> enumerate_frequency_vectors(size_t n);

Count count_frequency_vectors(size_t n);

/// Builds a rational-coordinate conowheel set whose frequency vector is
/// exactly f. Hull points land on the unit circle around the hub (origin),
/// so general position and extremality hold by construction.
ConoWheelSet realize_frequency_vector(const FrequencyVector& f);

/// The bead sequence of the rotational sweep around the hub.
Necklace necklace_of(const ConoWheelSet& s);

/// Lexicographically minimal rotation; with identify_reflection also the
/// minimum over the reversed sequence's rotations.
std::string canonical_necklace(const Necklace& nk, bool identify_reflection);

/// Conowheel set with the prescribed bead sequence (up to rotation). Throws
/// ParseError on sequences that are not self-dual.
ConoWheelSet realize_necklace(const Necklace& nk);

/// Frequency vector determined by a bead sequence alone.
FrequencyVector frequency_vector_of_necklace(const Necklace& nk);

/// Number of order types of conowheel sets with |H| = n, counted via
/// self-dual 2-colored necklaces.
Count count_order_types(size_t n, bool identify_reflection);

/// Canonical representative of every order type, sorted. Throws BoundError
/// for n > bound (the search walks all 2^n half-patterns).
std::vector<std::string> enumerate_order_types(size_t n, bool identify_reflection,
                                               size_t bound = 16);

/// Frequency vector of the maximally symmetric wheel set: all mass on
/// imbalance 0 (odd n) or 1 (even n).
FrequencyVector sym_frequency_vector(size_t n);

/// Frequency vector of n points in convex position around an extreme hub.
FrequencyVector convex_frequency_vector(size_t n);

}  // namespace wheelset
