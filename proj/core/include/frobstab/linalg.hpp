#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frobstab::linalg {

// Dense exact linear algebra over a finite field K. K needs add, sub, mul,
// inv on std::uint32_t elements (PrimeField and FiniteField both qualify).

using Row = std::vector<std::uint32_t>;
using Rows = std::vector<Row>;

/// Reduced row echelon form in place; zero rows are removed. Returns the
/// pivot columns, one per remaining row.
template <class K>
std::vector<std::size_t> rref(const K& k, Rows& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint32_t inv = k.inv(rows[r][c]);
    for (auto& x : rows[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (rows[r][j] != 0) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[r][j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class K>
std::size_t rank(const K& k, Rows rows) {
  return rref(k, rows).size();
}

/// Basis of {x : A x = 0} for A given by rows with ncols columns. The basis
/// is canonical: vector i has a 1 at the i-th free column and 0 at the other
/// free columns.
template <class K>
Rows kernel(const K& k, Rows a, std::size_t ncols) {
  for (auto& row : a) row.resize(ncols, 0);
  const auto pivots = rref(k, a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Rows basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = k.sub(0, a[i][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Transpose of a rows x cols matrix.
inline Rows transpose(const Rows& a, std::size_t ncols) {
  Rows t(ncols, Row(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

/// Solves sum_i x_i * cols[i] = target. Returns nullopt-like empty vector
/// with ok=false when inconsistent.
template <class K>
bool solve_in_span(const K& k, const Rows& columns, const Row& target, Row& solution) {
  const std::size_t n = columns.size();
  const std::size_t m = target.size();
  // augmented system: rows indexed by coordinates
  Rows aug(m, Row(n + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
    aug[i][n] = target[i];
  }
  const auto pivots = rref(k, aug);
  solution.assign(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return false;
    solution[pivots[i]] = aug[i][n];
  }
  return true;
}

}  // namespace frobstab::linalg
