#pragma once

// Pairwise intersections of B-orbit closures: meet matrices, the
// irreducibility criterion (the meet is realizable), component enumeration
// with dimensions, closure sets, and the all-pairs table for a stratum.

#include <algorithm>
#include <utility>
#include <vector>

#include "orbitlattice/errors.hpp"
#include "orbitlattice/parallel.hpp"
#include "orbitlattice/rank_matrix.hpp"

namespace orbitlattice::intersections {

using involutions::Involution;
using rankmatrix::UpperMatrix;
using tableaux::TwoColumnTableau;

// Entrywise minimum; the closure of the intersection is the union of orbits
// whose rank matrix sits below this.
inline UpperMatrix meet(const UpperMatrix& a, const UpperMatrix& b) {
  if (a.n() != b.n()) throw DomainError("size mismatch");
  std::vector<std::vector<int>> rows = a.rows();
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::min(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   b.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return UpperMatrix(std::move(rows));
}

// Every involution whose orbit lies in the closure of B.N_sigma, i.e. all
// sigma' with R_{sigma'} <= R_sigma entrywise (ranks 0..L(sigma)), sorted
// canonically.  Always contains the identity and sigma itself.
inline std::vector<Involution> closure_set(const Involution& s) {
  const auto r = rankmatrix::rank_matrix(s);
  std::vector<Involution> out;
  for (int k = 0; k <= s.k(); ++k)
    for (const auto& c : involutions::enumerate_involutions(s.n(), k))
      if (rankmatrix::leq(rankmatrix::rank_matrix(c), r)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

struct Component {
  Involution sigma;
  int dim;    // orbit dimension
  int codim;  // ambient_dim - dim
  int rank;   // number of two-cycles of sigma
};

struct IntersectionReport {
  Involution left, right;
  int n;
  UpperMatrix meet;
  bool irreducible;
  std::vector<Component> components;  // sorted by cycle sequence
  int ambient_dim;  // orbit_dim(left); equals k(n-k) for a dense rank-k orbit
  bool same_rank;   // L(left) == L(right)
};

namespace detail {
// Maximal elements below the meet.  Candidates are scanned by decreasing
// entry sum: anything strictly below a candidate has a strictly smaller sum,
// so comparing against already-accepted components suffices.
inline std::vector<Involution> maximal_below(const UpperMatrix& m, int n) {
  std::vector<std::pair<Involution, UpperMatrix>> cands;
  const int kmax = m.at(1, n);  // L(sigma'') = R_{1,n} <= meet's corner
  for (int k = 0; k <= kmax; ++k)
    for (const auto& c : involutions::enumerate_involutions(n, k)) {
      auto r = rankmatrix::rank_matrix(c);
      if (rankmatrix::leq(r, m)) cands.emplace_back(c, std::move(r));
    }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    const auto sa = a.second.entry_sum(), sb = b.second.entry_sum();
    if (sa != sb) return sa > sb;
    return a.first < b.first;
  });
  std::vector<Involution> out;
  std::vector<const UpperMatrix*> accepted;
  for (const auto& [c, r] : cands) {
    bool dominated = false;
    for (const auto* ar : accepted)
      if (rankmatrix::leq(r, *ar)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      out.push_back(c);
      accepted.push_back(&r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

// The intersection of the two orbit closures: irreducible exactly when the
// meet is itself realizable, in which case the meet's own involution is the
// unique component; otherwise the components are the maximal orbits below
// the meet.  Codimensions are measured against orbit_dim(left), which is
// k(n-k) whenever left is the dense involution of a rank-k tableau.
inline IntersectionReport intersect(const Involution& left, const Involution& right) {
  if (left.n() != right.n()) throw DomainError("size mismatch");
  const int n = left.n();
  auto m = meet(rankmatrix::rank_matrix(left), rankmatrix::rank_matrix(right));
  const int ambient = involutions::orbit_dim(left);
  IntersectionReport rep{left,  right, n, m, rankmatrix::validate(m).valid,
                         {},    ambient, left.k() == right.k()};
  std::vector<Involution> comps;
  if (rep.irreducible) {
    comps.push_back(rankmatrix::sigma_of_rank_matrix(m));
  } else {
    comps = detail::maximal_below(m, n);
  }
  for (const auto& c : comps) {
    const int d = involutions::orbit_dim(c);
    rep.components.push_back({c, d, ambient - d, c.k()});
  }
  return rep;
}

inline IntersectionReport intersect(const TwoColumnTableau& left,
                                    const TwoColumnTableau& right) {
  return intersect(involutions::sigma_of_tableau(left),
                   involutions::sigma_of_tableau(right));
}

struct PairwiseCell {
  int codim;            // ambient k(n-k) minus the largest component dim
  bool irreducible;
  int component_count;
  friend bool operator==(const PairwiseCell& a, const PairwiseCell& b) {
    return a.codim == b.codim && a.irreducible == b.irreducible &&
           a.component_count == b.component_count;
  }
};

struct PairwiseTable {
  int n, k;
  std::vector<TwoColumnTableau> tableaux;  // enumeration order
  std::vector<std::vector<PairwiseCell>> cells;
};

// All-pairs intersection table over the tableaux of a stratum.  Symmetric,
// zero diagonal; cells are independent, so they may be computed in parallel
// without changing the result.
inline PairwiseTable pairwise_table(int n, int k) {
  PairwiseTable t{n, k, tableaux::enumerate_two_column(n, k), {}};
  const std::size_t m = t.tableaux.size();
  std::vector<Involution> sigmas;
  sigmas.reserve(m);
  for (const auto& tab : t.tableaux) sigmas.push_back(involutions::sigma_of_tableau(tab));
  t.cells.assign(m, std::vector<PairwiseCell>(m, PairwiseCell{0, true, 1}));
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) jobs.emplace_back(a, b);
  parallel::parallel_for(jobs.size(), [&](std::size_t idx) {
    const auto [a, b] = jobs[idx];
    const auto rep = intersect(sigmas[a], sigmas[b]);
    int best = 0;
    for (const auto& c : rep.components) best = std::max(best, c.dim);
    const PairwiseCell cell{rep.ambient_dim - best, rep.irreducible,
                            static_cast<int>(rep.components.size())};
    t.cells[a][b] = cell;
    t.cells[b][a] = cell;
  });
  return t;
}

}  // namespace orbitlattice::intersections
