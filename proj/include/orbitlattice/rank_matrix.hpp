#pragma once

// Rank matrices of square-zero partial permutations: the complete B-orbit
// invariant.  Provides the membership test for the set of realizable
// matrices, its inverse (inclusion-exclusion reconstruction), the entrywise
// closure order, window projections, and the first-row tableau.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlattice/errors.hpp"
#include "orbitlattice/involutions.hpp"

namespace orbitlattice::rankmatrix {

using involutions::Involution;
using tableaux::TwoColumnTableau;

// Square non-negative integer matrix, zero on and below the diagonal.
// Indices are 1-based throughout, matching the window convention R_{i,j} for
// the segment i..j; at_or_zero extends by the virtual zero row n+1 and
// column 0 used by the membership conditions.
class UpperMatrix {
 public:
  explicit UpperMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    n_ = static_cast<int>(rows_.size());
    if (n_ < 1) throw DomainError("matrix must be non-empty");
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) != n_) throw DomainError("matrix must be square");
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        const int v = rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (v < 0) throw DomainError("matrix entries must be non-negative");
        if (i >= j && v != 0)
          throw DomainError("entries on or below the diagonal must be zero");
      }
  }

  static UpperMatrix zero(int n) {
    if (n < 1) throw DomainError("matrix must be non-empty");
    return UpperMatrix(std::vector<std::vector<int>>(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)));
  }

  int n() const { return n_; }

  int at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw DomainError("matrix index out of range");
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  int at_or_zero(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return 0;
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  long long entry_sum() const {
    long long s = 0;
    for (const auto& r : rows_)
      for (int v : r) s += v;
    return s;
  }

  friend bool operator==(const UpperMatrix& a, const UpperMatrix& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const UpperMatrix& a, const UpperMatrix& b) { return !(a == b); }

 private:
  int n_;
  std::vector<std::vector<int>> rows_;
};

// 0/1 matrix of the involution: a one at (i,j) per cycle (i,j).
inline UpperMatrix n_matrix(const Involution& s) {
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(s.n()),
      std::vector<int>(static_cast<std::size_t>(s.n()), 0));
  for (auto [i, j] : s.cycles())
    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
  return UpperMatrix(std::move(rows));
}

// R_{i,j} = number of cycles (a,b) with i <= a < b <= j; equivalently the
// rank of the window i..j of the 0/1 matrix.  Built by the quadrant
// recurrence R_{i,j} = N_{i,j} + R_{i+1,j} + R_{i,j-1} - R_{i+1,j-1}.
inline UpperMatrix rank_matrix(const Involution& s) {
  const int n = s.n();
  const auto nm = n_matrix(s);
  std::vector<std::vector<int>> r(
      static_cast<std::size_t>(n + 2), std::vector<int>(static_cast<std::size_t>(n + 2), 0));
  for (int i = n; i >= 1; --i)
    for (int j = 1; j <= n; ++j)
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          nm.at(i, j) + r[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] +
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
          r[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j - 1)];
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return UpperMatrix(std::move(rows));
}

enum class Cond { ii_row, ii_col, iiia, iiib, iiic };

inline std::string to_string(Cond c) {
  switch (c) {
    case Cond::ii_row: return "ii-row";
    case Cond::ii_col: return "ii-col";
    case Cond::iiia: return "iiia";
    case Cond::iiib: return "iiib";
    case Cond::iiic: return "iiic";
  }
  return "?";
}

struct Violation {
  Cond cond;
  int i, j;  // the triggering cell, 1-based
  friend bool operator==(const Violation& a, const Violation& b) {
    return a.cond == b.cond && a.i == b.i && a.j == b.j;
  }
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;  // scan order: by (i,j), then condition
};

// Membership test for realizable rank matrices.  Writing g for at_or_zero
// (virtual zero row n+1 and column 0), a matrix qualifies iff for all i < j:
//
//   (ii)  g(i+1,j) <= g(i,j) <= g(i+1,j)+1        [tag ii-row]
//         g(i,j-1) <= g(i,j) <= g(i,j-1)+1        [tag ii-col]
//   (iii) whenever g(i,j) = g(i+1,j)+1 = g(i,j-1)+1 = g(i+1,j-1)+1:
//     (a) g(i,k) = g(i+1,k) for k < j,  g(i,k) = g(i+1,k)+1 for k >= j
//     (b) g(k,j) = g(k,j-1) for k > i,  g(k,j) = g(k,j-1)+1 for k <= i
//     (c) g(j,k) = g(j+1,k) and g(k,i) = g(k,i-1) for every k in 1..n
//
// Zeros on and below the diagonal are already the type invariant, so only
// these tags can appear.  One violation is recorded per (condition,
// triggering cell), every triggering cell is reported.
inline ValidityReport validate(const UpperMatrix& R) {
  const int n = R.n();
  ValidityReport rep;
  auto g = [&](int i, int j) { return R.at_or_zero(i, j); };
  auto record = [&](Cond c, int i, int j) {
    rep.valid = false;
    rep.violations.push_back({c, i, j});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int v = g(i, j);
      if (v < g(i + 1, j) || v > g(i + 1, j) + 1) record(Cond::ii_row, i, j);
      if (v < g(i, j - 1) || v > g(i, j - 1) + 1) record(Cond::ii_col, i, j);
      const bool trigger = v == g(i + 1, j) + 1 && v == g(i, j - 1) + 1 &&
                           v == g(i + 1, j - 1) + 1;
      if (!trigger) continue;
      for (int k = 1; k <= n; ++k)
        if (g(i, k) != g(i + 1, k) + (k >= j ? 1 : 0)) {
          record(Cond::iiia, i, j);
          break;
        }
      for (int k = 1; k <= n; ++k)
        if (g(k, j) != g(k, j - 1) + (k <= i ? 1 : 0)) {
          record(Cond::iiib, i, j);
          break;
        }
      for (int k = 1; k <= n; ++k)
        if (g(j, k) != g(j + 1, k) || g(k, i) != g(k, i - 1)) {
          record(Cond::iiic, i, j);
          break;
        }
    }
  return rep;
}

// Inclusion-exclusion inverse: N_{i,j} = R_{i,j} - R_{i+1,j} - R_{i,j-1} +
// R_{i+1,j-1}.  Yields an involution exactly when the recovered N is a
// square-zero partial permutation whose rank matrix reproduces R.  This route
// deliberately never calls validate(): the two membership tests stay
// independent so they can be cross-checked against each other.
inline std::optional<Involution> reconstruct_involution(const UpperMatrix& R) {
  const int n = R.n();
  std::vector<std::pair<int, int>> cycles;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int v = R.at(i, j) - R.at_or_zero(i + 1, j) - R.at(i, j - 1) +
                    R.at_or_zero(i + 1, j - 1);
      if (v != 0 && v != 1) return std::nullopt;
      if (v == 1) cycles.emplace_back(i, j);
    }
  std::optional<Involution> s;
  try {
    s.emplace(n, std::move(cycles));
  } catch (const DomainError&) {
    return std::nullopt;  // endpoints collide: not a partial matching
  }
  if (!(rank_matrix(*s) == R)) return std::nullopt;
  return s;
}

// Contract form of the inverse: requires a valid matrix, and the
// reconstruction must then succeed (the two membership tests agreeing is an
// internal consistency requirement, hence the logic_error).
inline Involution sigma_of_rank_matrix(const UpperMatrix& R) {
  if (!validate(R).valid)
    throw DomainError("matrix is not a realizable rank matrix");
  auto s = reconstruct_involution(R);
  if (!s)
    throw std::logic_error(
        "internal consistency: validate accepted a matrix the reconstructor rejects");
  return *s;
}

// Entrywise closure order on rank matrices.
inline bool leq(const UpperMatrix& a, const UpperMatrix& b) {
  if (a.n() != b.n()) throw DomainError("size mismatch");
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      if (a.at(i, j) > b.at(i, j)) return false;
  return true;
}

// Window extraction: the (j-i+1)-square matrix W with W_{a,b} = R_{i-1+a,i-1+b}.
inline UpperMatrix project(const UpperMatrix& R, int i, int j) {
  if (i < 1 || i > j || j > R.n()) throw DomainError("bad window range");
  const int m = j - i + 1;
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
          R.at(i - 1 + a, i - 1 + b);
  return UpperMatrix(std::move(rows));
}

// Window extraction on involutions: drop every cycle with an endpoint outside
// {i..j} and relabel the survivors onto {1..j-i+1}, so that
// project(rank_matrix(s), i, j) = rank_matrix(project(s, i, j)).
inline Involution project(const Involution& s, int i, int j) {
  if (i < 1 || i > j || j > s.n()) throw DomainError("bad window range");
  std::vector<std::pair<int, int>> cycles;
  for (auto [a, b] : s.cycles())
    if (i <= a && b <= j) cycles.emplace_back(a - (i - 1), b - (i - 1));
  return Involution(j - i + 1, std::move(cycles));
}

// First-row tableau of a valid rank matrix: m sits in the second column
// exactly when R_{1,m} jumps, i.e. R_{1,m} = R_{1,m-1} + 1.  On the rank
// matrix of sigma_T this recovers T.
inline TwoColumnTableau st1_tableau(const UpperMatrix& R) {
  if (!validate(R).valid)
    throw DomainError("matrix is not a realizable rank matrix");
  std::vector<int> col1, col2;
  for (int m = 1; m <= R.n(); ++m)
    (R.at(1, m) == R.at_or_zero(1, m - 1) + 1 ? col2 : col1).push_back(m);
  return TwoColumnTableau(std::move(col1), std::move(col2));
}

}  // namespace orbitlattice::rankmatrix
