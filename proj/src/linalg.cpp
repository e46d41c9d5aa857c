#include "wheelset/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace wheelset {

namespace {

void require_square(const RatMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("determinant: matrix not square");
}

Rat cofactor_det(const RatMatrix& m) {
  const size_t n = m.size();
  switch (n) {
    case 0:
      return Rat(1);
    case 1:
      return m[0][0];
    case 2:
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default: {
      // order 4: expand along the first row over 3x3 minors
      Rat acc(0);
      int s = 1;
      for (size_t c = 0; c < 4; ++c, s = -s) {
        RatMatrix minor(3, std::vector<Rat>(3));
        for (size_t i = 1; i < 4; ++i) {
          size_t cc = 0;
          for (size_t j = 0; j < 4; ++j) {
            if (j == c) continue;
            minor[i - 1][cc++] = m[i][j];
          }
        }
        if (m[0][c] != 0) acc += s * m[0][c] * cofactor_det(minor);
      }
      return acc;
    }
  }
}

// Scales every row by its positive common denominator. det sign unchanged,
// magnitude multiplied by the product of the scales.
IntMatrix clear_denominators(const RatMatrix& m, Int* scale_out) {
  IntMatrix out(m.size());
  Int scale(1);
  for (size_t i = 0; i < m.size(); ++i) {
    Int lcm(1);
    for (const auto& x : m[i]) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) out[i].push_back(numerator(x) * exact_div(lcm, denominator(x)));
    scale *= lcm;
  }
  if (scale_out) *scale_out = scale;
  return out;
}

}  // namespace

Int bareiss_det(IntMatrix m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant: matrix not square");
  if (n == 0) return Int(1);
  Int prev(1);
  int sgn = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Int(0);
      std::swap(m[k], m[p]);
      sgn = -sgn;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Rat det(const RatMatrix& m) {
  require_square(m);
  if (m.size() <= 4) return cofactor_det(m);
  Int scale;
  IntMatrix im = clear_denominators(m, &scale);
  return Rat(bareiss_det(std::move(im)), scale);
}

int det_sign(const RatMatrix& m) {
  require_square(m);
  if (m.size() <= 4) return cofactor_det(m).sign();
  IntMatrix im = clear_denominators(m, nullptr);
  return bareiss_det(std::move(im)).sign();
}

std::vector<size_t> rref(RatMatrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  const std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t rank(RatMatrix m) { return rref(m).size(); }

std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b) {
  const size_t n = a.size();
  if (n == 0) return std::vector<Rat>{};
  for (auto& row : a)
    if (row.size() != n) throw Error("solve: matrix not square");
  if (b.size() != n) throw Error("solve: rhs size mismatch");
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const std::vector<size_t> pivots = rref(a);
  // a pivot in the appended column marks an inconsistent system
  if (pivots.size() != n || pivots.back() == n) return std::nullopt;
  std::vector<Rat> x(n);
  for (size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
  return x;
}

std::vector<Int> primitive_direction(const std::vector<Rat>& v) {
  Int lcm(1);
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<Int> out;
  out.reserve(v.size());
  Int content(0);
  for (const auto& x : v) {
    out.push_back(numerator(x) * exact_div(lcm, denominator(x)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  if (content > 1)
    for (auto& x : out) x = exact_div(x, content);
  return out;
}

}  // namespace wheelset
