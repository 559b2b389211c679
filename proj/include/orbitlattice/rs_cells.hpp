#pragma once

// Robinson-Schensted in both directions, the cells C_T of permutations with a
// fixed insertion tableau, the labeled cell graphs, root-position sets, and
// the comparison of graph edges against intersection codimensions.
//
// Convention (pinned by the calibration tests, not by notation): rs() does
// row insertion of w(1)..w(n), the first tableau is the insertion tableau P
// and the second the recording tableau Q; RS(T,S) is the permutation with
// P = T, Q = S; the edge action exchanges the entries at positions k and k+1
// of the one-line word.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitlattice/errors.hpp"
#include "orbitlattice/intersections.hpp"

namespace orbitlattice::rscells {

using tableaux::Shape;
using tableaux::StandardTableau;
using tableaux::TwoColumnTableau;

class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = static_cast<int>(w_.size());
    if (n < 1) throw DomainError("permutation must be non-empty");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw DomainError("values must be a rearrangement of 1..n");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& one_line() const { return w_; }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
      inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.w_ < b.w_;
  }

 private:
  std::vector<int> w_;
};

// Row insertion of the word w(1)..w(n); returns (insertion P, recording Q).
inline std::pair<StandardTableau, StandardTableau> rs(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int idx = 1; idx <= w.n(); ++idx) {
    int x = w(idx);
    for (std::size_t r = 0;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({idx});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(idx);
        break;
      }
      std::swap(x, *it);  // bump the smallest entry larger than x
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

// Inverse correspondence by reverse bumping, peeling off the largest
// recording entry each step; rs(rs_inverse(P,Q)) = (P,Q).
inline Permutation rs_inverse(const StandardTableau& P, const StandardTableau& Q) {
  if (P.shape() != Q.shape()) throw DomainError("shape mismatch");
  auto p = P.rows();
  const auto& q = Q.rows();
  const int n = P.n();
  if (n < 1) throw DomainError("permutation must be non-empty");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::vector<int> len(q.size());
  for (std::size_t r = 0; r < q.size(); ++r) len[r] = static_cast<int>(q[r].size());
  for (int step = n; step >= 1; --step) {
    std::size_t row = 0;
    while (q[row][static_cast<std::size_t>(len[row] - 1)] != step) ++row;
    int x = p[row][static_cast<std::size_t>(len[row] - 1)];
    p[row].pop_back();
    --len[row];
    for (std::size_t r = row; r-- > 0;) {
      auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
      --it;  // the largest entry below x; exists since columns increase
      std::swap(x, *it);
    }
    w[static_cast<std::size_t>(step - 1)] = x;
  }
  return Permutation(std::move(w));
}

// The cell of T: all permutations with insertion tableau T, listed in the
// enumeration order of their recording tableaux.
inline std::vector<Permutation> cell(const StandardTableau& t) {
  std::vector<Permutation> out;
  for (const auto& q : tableaux::enumerate_standard(t.shape()))
    out.push_back(rs_inverse(t, q));
  return out;
}

struct CellEdge {
  int a, b;   // vertex indices, a < b
  int label;  // k in 1..n-1
  friend bool operator==(const CellEdge& x, const CellEdge& y) {
    return x.a == y.a && x.b == y.b && x.label == y.label;
  }
  friend bool operator<(const CellEdge& x, const CellEdge& y) {
    return std::tie(x.a, x.b, x.label) < std::tie(y.a, y.b, y.label);
  }
};

struct CellGraph {
  StandardTableau base;
  std::vector<StandardTableau> vertices;  // all tableaux of the shape
  std::vector<CellEdge> edges;            // sorted
};

// Graph on the tableaux of sh(T): S' and S'' are joined with label k when
// exchanging the entries at positions k,k+1 of RS(T,S') gives RS(T,S'').
// The exchanged word usually leaves the cell; edges are exactly the swaps
// that land back in it.
inline CellGraph cell_graph(const StandardTableau& t) {
  CellGraph g{t, tableaux::enumerate_standard(t.shape()), {}};
  const int n = t.n();
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> words;
  words.reserve(g.vertices.size());
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    words.push_back(rs_inverse(t, g.vertices[a]).one_line());
    index[words.back()] = static_cast<int>(a);
  }
  for (std::size_t a = 0; a < words.size(); ++a)
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<int> w = words[a];
      std::swap(w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]);
      auto it = index.find(w);
      if (it != index.end() && it->second > static_cast<int>(a))
        g.edges.push_back({static_cast<int>(a), it->second, k});
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

struct RootPositionSet {
  Permutation w;
  std::vector<std::pair<int, int>> positions;  // (i,j), i<j, sorted
};

// Positions (i,j), i<j, with w^{-1}(i) < w^{-1}(j): the coordinate subspace
// preserved both before and after twisting by w.
inline RootPositionSet root_positions(const Permutation& w) {
  const auto inv = w.inverse();
  RootPositionSet out{w, {}};
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (inv(i) < inv(j)) out.positions.emplace_back(i, j);
  return out;
}

struct EdgeCodimPair {
  int a, b;  // indices into the two-column enumeration, a < b
  int codim;
  bool joined;       // edge between the pair in at least one cell graph
  bool discrepancy;  // joined differs from (codim == 1)
};

struct EdgeCodimReport {
  int n, k;
  std::vector<TwoColumnTableau> tableaux;
  std::vector<EdgeCodimPair> pairs;  // all unordered pairs in index order
  int discrepancy_count = 0;
};

// Compare graph adjacency against intersection codimension over a whole
// stratum.  Edges always imply codimension 1; the converse can fail, and
// every such pair is flagged as a discrepancy.
inline EdgeCodimReport edge_vs_codim(int n, int k) {
  EdgeCodimReport rep{n, k, tableaux::enumerate_two_column(n, k), {}, 0};
  const auto table = intersections::pairwise_table(n, k);
  std::map<std::vector<std::vector<int>>, int> tab_index;
  for (std::size_t i = 0; i < rep.tableaux.size(); ++i)
    tab_index[rep.tableaux[i].to_standard().columns()] = static_cast<int>(i);
  std::set<std::pair<int, int>> joined;
  for (const auto& base : rep.tableaux) {
    const auto g = cell_graph(base.to_standard());
    std::vector<int> vmap(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      vmap[v] = tab_index.at(g.vertices[v].columns());
    for (const auto& e : g.edges) {
      const int ta = vmap[static_cast<std::size_t>(e.a)];
      const int tb = vmap[static_cast<std::size_t>(e.b)];
      joined.insert({std::min(ta, tb), std::max(ta, tb)});
    }
  }
  for (std::size_t a = 0; a < rep.tableaux.size(); ++a)
    for (std::size_t b = a + 1; b < rep.tableaux.size(); ++b) {
      const int codim = table.cells[a][b].codim;
      const bool j = joined.count({static_cast<int>(a), static_cast<int>(b)}) > 0;
      const bool disc = j != (codim == 1);
      rep.pairs.push_back({static_cast<int>(a), static_cast<int>(b), codim, j, disc});
      if (disc) ++rep.discrepancy_count;
    }
  return rep;
}

}  // namespace orbitlattice::rscells
