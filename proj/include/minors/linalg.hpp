// Exact linear algebra over arbitrary-precision integers and rationals:
// fraction-free rank, rational row reduction, nullspace bases, and the rank
// of a family of sparse vectors.
#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "minors/types.hpp"

namespace minors {

using IntMat = std::vector<std::vector<Int>>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Rank by Bareiss fraction-free elimination (destroys its copy).  All
// intermediate values stay integral, with single-division steps.
inline int rank_of(IntMat m) {
  const std::size_t nrows = m.size();
  std::size_t ncols = 0;
  for (const auto& row : m) ncols = std::max(ncols, row.size());
  for (auto& row : m) row.resize(ncols, Int(0));
  int rank = 0;
  Int prev_pivot = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pivot = row;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        m[i][j] = Int(m[row][col] * m[i][j] - m[i][col] * m[row][j]) /
                  prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMat& m) {
  const std::size_t nrows = m.size();
  std::size_t ncols = 0;
  for (const auto& row : m) ncols = std::max(ncols, row.size());
  for (auto& row : m) row.resize(ncols, Rat(0));
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pivot = row;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[row], m[pivot]);
    const Rat lead = m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] /= lead;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat factor = m[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank_of(RatMat m) { return static_cast<int>(rref(m).size()); }

// Basis of {x : m x = 0} with denominators cleared to coprime integers.
// `ncols` fixes the dimension of x even when trailing columns are zero.
inline std::vector<RatVec> nullspace(RatMat m, std::size_t ncols) {
  for (auto& row : m) row.resize(ncols, Rat(0));
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(ncols, Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < ncols && free < m[r].size())
        x[pivots[r]] = -m[r][free];
    Int scale = 1;
    for (const Rat& v : x) scale = lcm(scale, denominator(v));
    Int content = 0;
    for (Rat& v : x) {
      v *= scale;
      content = gcd(content, numerator(v));
    }
    if (content > 1)
      for (Rat& v : x) v /= content;
    basis.push_back(std::move(x));
  }
  return basis;
}

// Rank of the span of sparse vectors (maps from a common ordered key type
// to integer coefficients).
template <typename K>
int span_rank(const std::vector<std::map<K, Int>>& vectors) {
  std::map<K, std::size_t> columns;
  for (const auto& v : vectors)
    for (const auto& [key, coeff] : v) columns.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, index] : columns) index = next++;
  IntMat m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Int> row(columns.size(), Int(0));
    for (const auto& [key, coeff] : v) row[columns.at(key)] = coeff;
    m.push_back(std::move(row));
  }
  return rank_of(std::move(m));
}

}  // namespace minors
