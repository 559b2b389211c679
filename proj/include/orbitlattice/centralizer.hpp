#pragma once

// Independent dimension oracle.  The orbit dimension of N under the Borel of
// upper-triangular invertibles is dim(Borel) minus the dimension of the
// stabilizer {X upper-triangular, diagonal included : XN = NX}; equivalently
// it is the rank of the linear map X -> XN - NX on those n(n+1)/2 unknowns.
// The rank is computed by fraction-free (Bareiss) elimination over the
// integers in 128-bit arithmetic -- no floating point, no formula reuse.

#include <vector>

#include "orbitlattice/involutions.hpp"
#include "orbitlattice/rank_matrix.hpp"

namespace orbitlattice::cli {

namespace detail {
// Rank of an integer matrix by Bareiss elimination (exact divisions).
inline int integer_rank(std::vector<std::vector<__int128>>& a) {
  const int nrows = static_cast<int>(a.size());
  if (nrows == 0) return 0;
  const int ncols = static_cast<int>(a[0].size());
  int rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < nrows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const __int128 factor = row[static_cast<std::size_t>(col)];
      for (int c = col + 1; c < ncols; ++c)
        row[static_cast<std::size_t>(c)] =
            (row[static_cast<std::size_t>(c)] * prow[static_cast<std::size_t>(col)] -
             factor * prow[static_cast<std::size_t>(c)]) /
            prev;
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = prow[static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}
}  // namespace detail

inline int centralizer_dim_oracle(const involutions::Involution& s) {
  const int n = s.n();
  const auto nm = rankmatrix::n_matrix(s);
  // unknowns X_{a,b}, 1 <= a <= b <= n, in row-major order
  std::vector<std::vector<int>> var(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  int vars = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) var[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = vars++;
  std::vector<std::vector<__int128>> eq;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<__int128> row(static_cast<std::size_t>(vars), 0);
      bool nonzero = false;
      for (int m = i; m <= n; ++m)
        if (nm.at(m, j) != 0) {
          row[static_cast<std::size_t>(
              var[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)])] += 1;
          nonzero = true;
        }
      for (int m = 1; m <= j; ++m)
        if (nm.at(i, m) != 0) {
          row[static_cast<std::size_t>(
              var[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])] -= 1;
          nonzero = true;
        }
      if (nonzero) eq.push_back(std::move(row));
    }
  return detail::integer_rank(eq);
}

}  // namespace orbitlattice::cli
