#pragma once

#include <optional>
#include <vector>

#include "wheelset/exact.hpp"

namespace wheelset {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Exact determinant of a square rational matrix. Cofactor expansion for
/// order <= 4; for larger orders the rows are scaled to integers (scaling is
/// positive, so only the magnitude changes) and fraction-free elimination
/// runs on the integer matrix.
Rat det(const RatMatrix& m);

/// Sign of det(m) without always materializing the full value.
int det_sign(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant of an integer matrix.
Int bareiss_det(IntMatrix m);

/// Reduced row echelon form in place. Returns the pivot column of every
/// pivot row, in row order; rank is the number of pivots.
std::vector<size_t> rref(RatMatrix& m);

/// Basis of the right null space of m (vectors x with m x = 0), one vector
/// per free column. The free coordinates form an identity block, i.e. the
/// pivot block is solved against the negated free columns.
std::vector<std::vector<Rat>> nullspace(RatMatrix m);

size_t rank(RatMatrix m);

/// Solves a x = b exactly; std::nullopt when the system is singular or
/// inconsistent. a must be square.
std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b);

/// Scales a rational vector by the positive common denominator and divides
/// out the content, yielding a primitive integer vector with the same
/// direction. Zero vectors stay zero.
std::vector<Int> primitive_direction(const std::vector<Rat>& v);

}  // namespace wheelset
