#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "wheelset/error.hpp"

namespace wheelset {

// Every geometric predicate runs on exact rationals and every counted
// quantity is an exact integer; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always lowest terms, denominator > 0

// Counts are cardinalities. Functions returning Count assert non-negativity
// at the point where the value is produced.
using Count = Int;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

/// Quotient a/b that must be exact; throws on a nonzero remainder.
Int exact_div(const Int& a, const Int& b);

/// A point in R^d, d >= 1. Dimension is the coordinate count.
struct Point {
  std::vector<Rat> coords;

  Point() = default;
  explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rat> c) : coords(c) {}

  size_t dim() const { return coords.size(); }
  const Rat& operator[](size_t i) const { return coords[i]; }
  Rat& operator[](size_t i) { return coords[i]; }
  bool operator==(const Point&) const = default;
};

/// Component-wise difference; dimensions must match.
Point operator-(const Point& a, const Point& b);

bool is_origin(const Point& p);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rat parse_rational(std::string_view text);

/// Decimal form, "p" or "p/q" with q > 1.
std::string to_string(const Rat& x);

std::string to_string(const Point& p);

}  // namespace wheelset
