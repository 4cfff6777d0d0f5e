#pragma once

// Exact nullspace of (I - A): the solution space of the neighbour-sum
// equations for an arbitrary simple graph.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "nsum/errors.hpp"
#include "nsum/ext_rat.hpp"
#include "nsum/graph.hpp"

namespace nsum {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct KernelBasis {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> basis;
};

/// Row x of the matrix is the equation f(x) - sum_{y ~ x} f(y) = 0.
inline RationalMatrix ns_matrix(const Graph& g) {
  const std::size_t n = g.order();
  RationalMatrix m(n, n);
  for (Vertex x = 0; x < n; ++x) {
    m(x, x) = 1;
    for (Vertex y : g.neighbours(x)) m(x, y) = -1;
  }
  return m;
}

/// Dense rows of (I - A) restricted to the given equations.
inline RationalMatrix ns_matrix(const Graph& g, std::span<const Vertex> equations) {
  RationalMatrix m(equations.size(), g.order());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    const Vertex x = equations[r];
    m(r, x) = 1;
    for (Vertex y : g.neighbours(x)) m(r, y) = -1;
  }
  return m;
}

/// Reduces m in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (m(row, c) != 0) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// One vector per free column, in increasing free-column order, each scaled so
/// its first nonzero entry is 1.
inline KernelBasis nullspace(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;

  KernelBasis out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*lead != 1) {
      const Rational scale = 1 / *lead;
      for (auto& x : v) x *= scale;
    }
    out.basis.push_back(std::move(v));
  }
  out.dim = out.basis.size();
  return out;
}

inline constexpr std::size_t dense_limit = 2000;

inline KernelBasis kernel_basis(const Graph& g) {
  if (g.order() > dense_limit) {
    throw PreconditionError("kernel_basis is dense; graph has " + std::to_string(g.order()) +
                            " vertices (limit " + std::to_string(dense_limit) + ")");
  }
  return nullspace(ns_matrix(g));
}

namespace detail {

struct SparseEntry {
  std::uint32_t col;
  Rational value;
};
using SparseRow = std::vector<SparseEntry>;

// row - factor * pivot, both sorted by column; drops cancelled entries.
inline SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].col < row[i].col) {
      out.push_back({pivot[j].col, Rational(-factor * pivot[j].value)});
      ++j;
    } else {
      Rational v = row[i].value - factor * pivot[j].value;
      if (v != 0) out.push_back({row[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline const Rational* find_entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace detail

/// Rank of a sparse system by exact elimination with a Markowitz-style pivot
/// order (shortest row first, then its sparsest column).
inline std::size_t sparse_rank(std::vector<detail::SparseRow> rows, std::size_t cols) {
  using detail::SparseRow;
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) col_rows[e.col].push_back(r);
  }
  std::vector<char> done(rows.size(), 0);
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (std::uint32_t r = 0; r < rows.size(); ++r) queue.emplace(rows[r].size(), r);

  std::size_t rank = 0;
  while (!queue.empty()) {
    auto [len, r] = queue.top();
    queue.pop();
    if (done[r] || len != rows[r].size()) continue;
    done[r] = 1;
    if (rows[r].empty()) continue;

    // Sparsest column of the pivot row; stale entries in col_rows only
    // overestimate counts.
    std::uint32_t col = rows[r].front().col;
    for (const auto& e : rows[r]) {
      if (col_rows[e.col].size() < col_rows[col].size()) col = e.col;
    }
    const SparseRow pivot = rows[r];
    const Rational pivot_value = *detail::find_entry(pivot, col);

    std::vector<std::uint32_t> touched = std::move(col_rows[col]);
    col_rows[col].clear();
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t s : touched) {
      if (done[s]) continue;
      const Rational* entry = detail::find_entry(rows[s], col);
      if (!entry) continue;
      const Rational factor = *entry / pivot_value;
      rows[s] = detail::axpy(rows[s], factor, pivot);
      for (const auto& e : rows[s]) {
        if (e.col != col) col_rows[e.col].push_back(s);
      }
      queue.emplace(rows[s].size(), s);
    }
    ++rank;
  }
  return rank;
}

/// dim ker(I - A). Sparse, so usable far beyond the dense basis limit.
inline std::size_t kernel_dim(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<detail::SparseRow> rows(n);
  for (Vertex x = 0; x < n; ++x) {
    auto& row = rows[x];
    row.reserve(g.degree(x) + 1);
    bool placed_diag = false;
    for (Vertex y : g.neighbours(x)) {
      if (!placed_diag && y > x) {
        row.push_back({x, Rational(1)});
        placed_diag = true;
      }
      row.push_back({y, Rational(-1)});
    }
    if (!placed_diag) row.push_back({x, Rational(1)});
  }
  return n - sparse_rank(std::move(rows), n);
}

}  // namespace nsum
