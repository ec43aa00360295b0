#pragma once

// Small dense linear algebra over commutative rings: division-free
// determinants and the Smith normal form over Z.

#include "quartic/error.hpp"
#include "quartic/integer.hpp"

#include <algorithm>
#include <vector>

namespace quartic {

template <typename S>
using Matrix = std::vector<std::vector<S>>;

/// Division-free determinant by cofactor expansion. For 4x4 input the
/// expansion goes through the 2x2 minors of the top and bottom row pairs.
template <typename S>
S determinant(const Matrix<S>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return S(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 4) {
    auto minor = [&](std::size_t r, std::size_t c0, std::size_t c1) {
      return m[r][c0] * m[r + 1][c1] - m[r][c1] * m[r + 1][c0];
    };
    // Generalized Laplace expansion along rows {0,1}.
    static constexpr std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    S sum = S(0);
    for (const auto& top : pairs) {
      std::size_t rest[2], k = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (c != top[0] && c != top[1]) rest[k++] = c;
      S term = minor(0, top[0], top[1]) * minor(2, rest[0], rest[1]);
      // sign (-1)^{(1+2) + (top0+1) + (top1+1)}
      bool negative = ((top[0] + top[1]) % 2) == 0;
      sum = negative ? sum - term : sum + term;
    }
    return sum;
  }
  S sum = S(0);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<S> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<S> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    S term = m[0][c] * determinant(sub);
    sum = (c % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

/// Diagonal of the Smith normal form of an integer matrix (nonnegative, each
/// dividing the next; zeros last).
inline std::vector<Integer> smith_diagonal(Matrix<Integer> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      Integer best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (!m[r][c].is_zero() && (best.is_zero() || abs(m[r][c]) < best)) {
            best = abs(m[r][c]);
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        for (std::size_t k = t; k < std::min(rows, cols); ++k) diag.push_back(0);
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        Integer q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (!m[r][t].is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Integer q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (!m[t][c].is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any row whose entries are not multiples of the pivot.
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!(m[r][c] % m[t][t]).is_zero()) {
            for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace quartic
