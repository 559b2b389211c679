#pragma once

// Involutions of S_n in canonical cycle form, the tableau correspondence
// T <-> sigma_T, the r_s statistics, the B-orbit dimension formula and the
// minimal element sigma_o(k).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "orbitlattice/errors.hpp"
#include "orbitlattice/tableaux.hpp"

namespace orbitlattice::involutions {

using tableaux::TwoColumnTableau;

// Product of disjoint two-cycles (i_1,j_1)...(i_k,j_k) on {1..n}, kept in
// canonical order: i_s < j_s inside each cycle and i_1 < i_2 < ... across
// cycles (input cycles may arrive in any order).  k is the matrix rank of the
// associated square-zero partial permutation.
class Involution {
 public:
  Involution(int n, std::vector<std::pair<int, int>> cycles)
      : n_(n), cycles_(std::move(cycles)) {
    if (n_ < 1) throw DomainError("n must be positive");
    std::vector<char> used(static_cast<std::size_t>(n_) + 1, 0);
    for (auto& [a, b] : cycles_) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > n_) throw DomainError("cycle endpoint out of range 1..n");
      if (a == b) throw DomainError("cycle endpoints must be distinct");
      for (int e : {a, b}) {
        if (used[static_cast<std::size_t>(e)])
          throw DomainError("cycles must be disjoint");
        used[static_cast<std::size_t>(e)] = 1;
      }
    }
    std::sort(cycles_.begin(), cycles_.end());
  }

  static Involution identity(int n) { return Involution(n, {}); }

  int n() const { return n_; }
  int k() const { return static_cast<int>(cycles_.size()); }
  const std::vector<std::pair<int, int>>& cycles() const { return cycles_; }
  bool is_identity() const { return cycles_.empty(); }

  int apply(int x) const {
    for (auto [a, b] : cycles_) {
      if (x == a) return b;
      if (x == b) return a;
    }
    return x;
  }

  friend bool operator==(const Involution& a, const Involution& b) {
    return a.n_ == b.n_ && a.cycles_ == b.cycles_;
  }
  friend bool operator!=(const Involution& a, const Involution& b) { return !(a == b); }
  friend bool operator<(const Involution& a, const Involution& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.cycles_ < b.cycles_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> cycles_;
};

// The dense-orbit involution of a two-column tableau: run j over the second
// column bottom-up in value (i.e. increasing) and pair it with the largest
// still-unused first-column entry below it.  The partner always exists: the
// s-th entry of col2 exceeds at least s entries of col1.
inline Involution sigma_of_tableau(const TwoColumnTableau& t) {
  std::vector<int> avail = t.col1();
  std::vector<std::pair<int, int>> cycles;
  cycles.reserve(static_cast<std::size_t>(t.k()));
  for (int j : t.col2()) {
    auto it = std::lower_bound(avail.begin(), avail.end(), j);
    --it;  // never begin(): see note above
    cycles.emplace_back(*it, j);
    avail.erase(it);
  }
  return Involution(t.n(), std::move(cycles));
}

// Inverse direction: col2 is the sorted list of second endpoints, col1 the
// complement.  Only involutions arising from sigma_of_tableau are accepted;
// anything else rebuilds to a tableau whose involution differs and is
// rejected (the rebuilt columns themselves are always a valid tableau).
inline TwoColumnTableau tableau_of_sigma(const Involution& s) {
  std::vector<char> second(static_cast<std::size_t>(s.n()) + 1, 0);
  for (auto [i, j] : s.cycles()) second[static_cast<std::size_t>(j)] = 1;
  std::vector<int> col1, col2;
  for (int e = 1; e <= s.n(); ++e)
    (second[static_cast<std::size_t>(e)] ? col2 : col1).push_back(e);
  TwoColumnTableau t(std::move(col1), std::move(col2));
  if (!(sigma_of_tableau(t) == s))
    throw DomainError("not in the image of sigma_of_tableau");
  return t;
}

// r_s = #{p : i_p < i_s and j_p < j_s} + #{p : j_p < i_s}, with cycles in
// canonical order and s 1-based.  Always 0 for s = 1.
inline int r_stat(const Involution& s, int sidx) {
  const auto& c = s.cycles();
  if (sidx < 1 || sidx > static_cast<int>(c.size()))
    throw DomainError("cycle index out of range 1..k");
  const auto [is, js] = c[static_cast<std::size_t>(sidx - 1)];
  int r = 0;
  for (auto [ip, jp] : c) {
    if (ip < is && jp < js) ++r;
    if (jp < is) ++r;
  }
  return r;
}

// dim B.N_sigma = k n - sum_s (j_s - i_s) - sum_{s >= 2} r_s.
inline int orbit_dim(const Involution& s) {
  const int n = s.n();
  int dim = s.k() * n;
  for (auto [i, j] : s.cycles()) dim -= j - i;
  for (int sidx = 2; sidx <= s.k(); ++sidx) dim -= r_stat(s, sidx);
  return dim;
}

// The unique minimal rank-k involution (1,n-k+1)(2,n-k+2)...(k,n).
inline Involution sigma_o(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 0 || 2 * k > n) throw DomainError("k must satisfy 0 <= 2k <= n");
  std::vector<std::pair<int, int>> cycles;
  cycles.reserve(static_cast<std::size_t>(k));
  for (int s = 1; s <= k; ++s) cycles.emplace_back(s, n - k + s);
  return Involution(n, std::move(cycles));
}

namespace detail {
inline void gen_involutions(int n, int lo, int remaining,
                            std::vector<std::pair<int, int>>& acc,
                            std::vector<Involution>& out,
                            std::vector<char>& used) {
  if (remaining == 0) {
    out.emplace_back(n, acc);
    return;
  }
  // smallest unused element: either opens the next cycle or stays fixed
  int a = lo;
  while (a <= n && used[static_cast<std::size_t>(a)]) ++a;
  // not enough room for the remaining cycles
  int free_cnt = 0;
  for (int e = a; e <= n; ++e)
    if (!used[static_cast<std::size_t>(e)]) ++free_cnt;
  if (free_cnt < 2 * remaining) return;
  used[static_cast<std::size_t>(a)] = 1;
  for (int b = a + 1; b <= n; ++b) {
    if (used[static_cast<std::size_t>(b)]) continue;
    used[static_cast<std::size_t>(b)] = 1;
    acc.emplace_back(a, b);
    gen_involutions(n, a + 1, remaining - 1, acc, out, used);
    acc.pop_back();
    used[static_cast<std::size_t>(b)] = 0;
  }
  used[static_cast<std::size_t>(a)] = 0;
  gen_involutions(n, a + 1, remaining, acc, out, used);
}
}  // namespace detail

// All involutions of S_n with exactly k two-cycles, sorted by cycle sequence.
inline std::vector<Involution> enumerate_involutions(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 0 || 2 * k > n) throw DomainError("k must satisfy 0 <= 2k <= n");
  std::vector<Involution> out;
  std::vector<std::pair<int, int>> acc;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  detail::gen_involutions(n, 1, k, acc, out, used);
  std::sort(out.begin(), out.end());
  return out;
}

// All involutions of S_n (every rank), sorted: identity first, then by cycle
// sequence.
inline std::vector<Involution> enumerate_involutions(int n) {
  std::vector<Involution> out;
  for (int k = 0; 2 * k <= n; ++k) {
    auto part = enumerate_involutions(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitlattice::involutions
