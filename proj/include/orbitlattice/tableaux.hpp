#pragma once

// Partitions, standard Young tableaux, and the two-column tableaux indexing
// orbital varieties of square-zero nilpotent matrices.  Everything here is a
// small immutable value validated on construction; enumeration orders are
// fixed so downstream reports and graphs come out deterministic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitlattice/errors.hpp"

namespace orbitlattice::tableaux {

// Integer partition: weakly decreasing positive parts.  The empty shape is
// allowed so dual() and hook_count() are total.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t r = 0; r < parts_.size(); ++r) {
      if (parts_[r] <= 0) throw DomainError("shape parts must be positive");
      if (r > 0 && parts_[r] > parts_[r - 1])
        throw DomainError("shape parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // Conjugate partition: column lengths of the diagram.
  Shape dual() const {
    Shape d;
    if (!parts_.empty()) {
      d.parts_.assign(parts_[0], 0);
      for (int p : parts_)
        for (int c = 0; c < p; ++c) ++d.parts_[c];
    }
    return d;
  }

  friend bool operator==(const Shape& a, const Shape& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
  friend bool operator<(const Shape& a, const Shape& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// Standard Young tableau stored by rows: the entries are exactly 1..n, rows
// increase left to right, columns increase top to bottom.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Shape(std::move(parts));
    const int n = shape_.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& r : rows_)
      for (int e : r) {
        if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
          throw DomainError("tableau entries must be exactly 1..n");
        seen[static_cast<std::size_t>(e)] = 1;
      }
    for (const auto& r : rows_)
      for (std::size_t c = 1; c < r.size(); ++c)
        if (r[c - 1] >= r[c]) throw DomainError("tableau rows must be increasing");
    for (std::size_t r = 1; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < rows_[r].size(); ++c)
        if (rows_[r - 1][c] >= rows_[r][c])
          throw DomainError("tableau columns must be increasing");
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const Shape& shape() const { return shape_; }
  int n() const { return shape_.size(); }

  std::vector<std::vector<int>> columns() const {
    std::vector<std::vector<int>> cols;
    if (!rows_.empty()) {
      cols.resize(rows_[0].size());
      for (const auto& r : rows_)
        for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    }
    return cols;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const StandardTableau& a, const StandardTableau& b) {
    return !(a == b);
  }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
    return a.columns() < b.columns();
  }

 private:
  std::vector<std::vector<int>> rows_;
  Shape shape_;
};

// Two-column tableau written by columns: col1 (length n-k) and col2 (length
// k) are increasing, together partition {1..n}, and col1[i] < col2[i] on every
// common row.  Its shape is the dual partition (n-k,k)*: k rows of length 2
// followed by n-2k rows of length 1.
class TwoColumnTableau {
 public:
  TwoColumnTableau(std::vector<int> col1, std::vector<int> col2)
      : col1_(std::move(col1)), col2_(std::move(col2)) {
    const int n = static_cast<int>(col1_.size() + col2_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto* col : {&col1_, &col2_})
      for (int e : *col) {
        if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
          throw DomainError("columns do not partition {1..n}");
        seen[static_cast<std::size_t>(e)] = 1;
      }
    for (std::size_t i = 1; i < col1_.size(); ++i)
      if (col1_[i - 1] >= col1_[i])
        throw DomainError("column 1 must be strictly increasing");
    for (std::size_t i = 1; i < col2_.size(); ++i)
      if (col2_[i - 1] >= col2_[i])
        throw DomainError("column 2 must be strictly increasing");
    if (col2_.size() > col1_.size())
      throw DomainError("second column longer than first (k > n-k)");
    for (std::size_t i = 0; i < col2_.size(); ++i)
      if (col1_[i] >= col2_[i])
        throw DomainError("row condition col1[" + std::to_string(i + 1) + "]<col2[" +
                          std::to_string(i + 1) + "] fails");
  }

  int n() const { return static_cast<int>(col1_.size() + col2_.size()); }
  int k() const { return static_cast<int>(col2_.size()); }
  const std::vector<int>& col1() const { return col1_; }
  const std::vector<int>& col2() const { return col2_; }

  Shape shape() const {
    std::vector<int> parts;
    for (int i = 0; i < k(); ++i) parts.push_back(2);
    for (int i = 0; i < n() - 2 * k(); ++i) parts.push_back(1);
    return Shape(std::move(parts));
  }

  StandardTableau to_standard() const {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < col1_.size(); ++i) {
      if (i < col2_.size())
        rows.push_back({col1_[i], col2_[i]});
      else
        rows.push_back({col1_[i]});
    }
    return StandardTableau(std::move(rows));
  }

  friend bool operator==(const TwoColumnTableau& a, const TwoColumnTableau& b) {
    return a.col1_ == b.col1_ && a.col2_ == b.col2_;
  }
  friend bool operator!=(const TwoColumnTableau& a, const TwoColumnTableau& b) {
    return !(a == b);
  }
  friend bool operator<(const TwoColumnTableau& a, const TwoColumnTableau& b) {
    return std::tie(a.col2_, a.col1_) < std::tie(b.col2_, b.col1_);
  }

 private:
  std::vector<int> col1_, col2_;
};

// Validating factory, mirroring the constructor for call sites that prefer a
// free function.
inline TwoColumnTableau tableau_from_columns(std::vector<int> col1, std::vector<int> col2) {
  return TwoColumnTableau(std::move(col1), std::move(col2));
}

// All two-column tableaux on n boxes with second column of length k, ordered
// lexicographically by the second column.  There are C(n,k) - C(n,k-1) of
// them: every k-subset whose complement dominates it row by row survives.
inline std::vector<TwoColumnTableau> enumerate_two_column(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 0 || 2 * k > n) throw DomainError("k must satisfy 0 <= 2k <= n");
  std::vector<TwoColumnTableau> out;
  std::vector<int> c2(static_cast<std::size_t>(k));
  std::iota(c2.begin(), c2.end(), 1);
  while (true) {
    std::vector<char> in2(static_cast<std::size_t>(n) + 1, 0);
    for (int e : c2) in2[static_cast<std::size_t>(e)] = 1;
    std::vector<int> c1;
    c1.reserve(static_cast<std::size_t>(n - k));
    for (int e = 1; e <= n; ++e)
      if (!in2[static_cast<std::size_t>(e)]) c1.push_back(e);
    bool rows_ok = true;
    for (int i = 0; i < k; ++i)
      if (c1[static_cast<std::size_t>(i)] >= c2[static_cast<std::size_t>(i)]) {
        rows_ok = false;
        break;
      }
    if (rows_ok) out.emplace_back(std::move(c1), std::vector<int>(c2));
    // advance c2 to the next k-subset of {1..n} in lexicographic order
    int i = k - 1;
    while (i >= 0 && c2[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c2[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t)
      c2[static_cast<std::size_t>(t)] = c2[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

namespace detail {
inline void fill_standard(const std::vector<int>& parts, std::vector<int>& cnt,
                          std::vector<std::vector<int>>& grid, int v, int n,
                          std::vector<StandardTableau>& out) {
  if (v > n) {
    out.emplace_back(grid);
    return;
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const int c = cnt[r];
    if (c >= parts[r]) continue;
    if (r > 0 && cnt[r - 1] <= c) continue;  // cell above must be filled
    grid[r][static_cast<std::size_t>(c)] = v;
    ++cnt[r];
    fill_standard(parts, cnt, grid, v + 1, n, out);
    --cnt[r];
  }
}
}  // namespace detail

// All standard tableaux of the given shape, sorted by their column lists.
inline std::vector<StandardTableau> enumerate_standard(const Shape& shape) {
  const auto& parts = shape.parts();
  std::vector<std::vector<int>> grid;
  for (int p : parts) grid.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<int> cnt(parts.size(), 0);
  std::vector<StandardTableau> out;
  detail::fill_standard(parts, cnt, grid, 1, shape.size(), out);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of standard tableaux of a shape: n! divided by the product of hook
// lengths, evaluated exactly in 128-bit arithmetic.
inline std::uint64_t hook_count(const Shape& shape) {
  const int n = shape.size();
  if (n > 25) throw DomainError("hook_count supports n <= 25");
  const auto& p = shape.parts();
  const auto d = shape.dual().parts();
  unsigned __int128 hooks = 1;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c)
      hooks *= static_cast<unsigned __int128>(p[r] - c + d[static_cast<std::size_t>(c)] -
                                              static_cast<int>(r) - 1);
  unsigned __int128 fact = 1;
  for (int v = 2; v <= n; ++v) fact *= static_cast<unsigned __int128>(v);
  return static_cast<std::uint64_t>(fact / hooks);
}

namespace detail {
inline void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions of n, reverse-lexicographic ((n) first, (1,..,1) last).
inline std::vector<Shape> partitions(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  std::vector<Shape> out;
  std::vector<int> acc;
  detail::gen_partitions(n, n, acc, out);
  return out;
}

}  // namespace orbitlattice::tableaux
