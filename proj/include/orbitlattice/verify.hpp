#pragma once

// Cross-module consistency suites.  Each suite exercises one family of
// invariants over exhaustive small-n inputs and records a minimal reproducing
// description for every failed check.  Suites clamp their own n so that a
// large --n-max cannot silently start an exponential run; verify() itself
// refuses n_max > 8 without an explicit opt-in and n_max > 10 always.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitlattice/centralizer.hpp"
#include "orbitlattice/errors.hpp"
#include "orbitlattice/intersections.hpp"
#include "orbitlattice/involutions.hpp"
#include "orbitlattice/io.hpp"
#include "orbitlattice/rank_matrix.hpp"
#include "orbitlattice/rs_cells.hpp"
#include "orbitlattice/tableaux.hpp"

namespace orbitlattice::cli {

struct VerifySuiteResult {
  std::string suite;
  long long cases = 0;
  std::vector<std::string> failures;
  long long wall_ms = 0;  // integer milliseconds, measured per suite
};

namespace verify_detail {

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Checker bound to one suite result: counts every check, records failures.
struct Checker {
  VerifySuiteResult& res;
  void operator()(bool ok, const std::string& repro) {
    ++res.cases;
    if (!ok) res.failures.push_back(repro);
  }
};

inline std::string tab_str(const tableaux::TwoColumnTableau& t) {
  return io::format_tableau(t);
}

inline std::string inv_str(const involutions::Involution& s) {
  return io::format_involution(s);
}

inline rankmatrix::UpperMatrix matrix_of(std::vector<std::vector<int>> rows) {
  return rankmatrix::UpperMatrix(std::move(rows));
}

// Frozen worked example: n = 5, T = 1,3,5|2,4 against T' = 1,2,4|3,5.
inline rankmatrix::UpperMatrix example5_left() {
  return matrix_of({{0, 1, 1, 2, 2},
                    {0, 0, 0, 1, 1},
                    {0, 0, 0, 1, 1},
                    {0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0}});
}

inline rankmatrix::UpperMatrix example5_right() {
  return matrix_of({{0, 0, 1, 1, 2},
                    {0, 0, 1, 1, 2},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0}});
}

inline rankmatrix::UpperMatrix example5_meet() {
  return matrix_of({{0, 0, 1, 1, 2},
                    {0, 0, 0, 1, 1},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0}});
}

// Frozen worked example: n = 6, T = 1,2,4,5|3,6 against T' = 1,3,4,6|2,5.
inline rankmatrix::UpperMatrix example6_meet() {
  return matrix_of({{0, 0, 1, 1, 1, 2},
                    {0, 0, 0, 0, 1, 1},
                    {0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0}});
}

}  // namespace verify_detail

namespace suites {

// Enumeration sizes and well-formedness of the tableau generators.
inline void tableaux_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 10);
  for (int n = 1; n <= cap; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto tabs = tableaux::enumerate_two_column(n, k);
      const std::uint64_t expected = binom(n, k) - binom(n, k - 1);
      check(tabs.size() == expected,
            "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                ": two-column count " + std::to_string(tabs.size()) +
                " != " + std::to_string(expected));
      std::set<std::string> seen;
      bool dup = false, sorted = true;
      for (std::size_t i = 0; i < tabs.size(); ++i) {
        if (!seen.insert(tab_str(tabs[i])).second) dup = true;
        if (i > 0 && !(tabs[i - 1] < tabs[i])) sorted = false;
      }
      check(!dup, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      ": duplicate two-column tableaux");
      check(sorted, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        ": enumeration not strictly ordered");
      if (!tabs.empty()) {
        const auto shape = tabs.front().shape();
        check(tableaux::hook_count(shape) == tabs.size(),
              "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                  ": hook count disagrees with enumeration");
      }
    }
    if (n <= 8) {
      for (const auto& shape : tableaux::partitions(n)) {
        check(shape.dual().dual() == shape,
              "n=" + std::to_string(n) + ": dual not an involution on shapes");
        auto std_tabs = tableaux::enumerate_standard(shape);
        check(tableaux::hook_count(shape) == std_tabs.size(),
              "n=" + std::to_string(n) +
                  ": standard-tableau count disagrees with hook count");
      }
    }
  }
}

// The greedy tableau -> involution map: injective, dimension-maximal in its
// stratum, invertible exactly on its image.
inline void sigma_tableau_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto tabs = tableaux::enumerate_two_column(n, k);
      std::set<involutions::Involution> image;
      for (const auto& t : tabs) {
        auto s = involutions::sigma_of_tableau(t);
        check(image.insert(s).second,
              "n=" + std::to_string(n) + ": sigma collision at " + tab_str(t));
        check(involutions::orbit_dim(s) == k * (n - k),
              "n=" + std::to_string(n) + " " + tab_str(t) +
                  ": orbit dim != k(n-k)");
        auto back = involutions::tableau_of_sigma(s);
        check(back == t, "n=" + std::to_string(n) + " " + tab_str(t) +
                             ": tableau_of_sigma roundtrip");
      }
      int maximal = 0;
      for (const auto& s : involutions::enumerate_involutions(n, k)) {
        const int d = involutions::orbit_dim(s);
        check(d <= k * (n - k), "n=" + std::to_string(n) + " " + inv_str(s) +
                                    ": orbit dim above k(n-k)");
        if (d == k * (n - k)) ++maximal;
        if (image.count(s) == 0) {
          bool threw = false;
          try {
            involutions::tableau_of_sigma(s);
          } catch (const DomainError&) {
            threw = true;
          }
          check(threw, "n=" + std::to_string(n) + " " + inv_str(s) +
                           ": tableau_of_sigma accepted a non-image");
        }
      }
      check(maximal == static_cast<int>(tabs.size()),
            "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                ": dimension-maximal orbits != tableau count");
    }
  }
}

// Combinatorial orbit dimension against the linear-algebra oracle (rank of
// X |-> XN - NX on upper-triangular X, computed fraction-free over integers).
inline void dimension_oracle_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 6);
  for (int n = 1; n <= cap; ++n) {
    for (const auto& s : involutions::enumerate_involutions(n)) {
      check(involutions::orbit_dim(s) == centralizer_dim_oracle(s),
            "n=" + std::to_string(n) + " " + inv_str(s) +
                ": combinatorial dim != centralizer oracle");
    }
  }
}

// Rank matrices: valid, a complete invariant, and invertible.
inline void rank_matrix_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::vector<int>> keys;
    for (const auto& s : involutions::enumerate_involutions(n)) {
      auto R = rankmatrix::rank_matrix(s);
      check(rankmatrix::validate(R).valid,
            "n=" + std::to_string(n) + " " + inv_str(s) +
                ": own rank matrix fails validation");
      std::vector<int> key;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) key.push_back(R.at(i, j));
      check(keys.insert(key).second,
            "n=" + std::to_string(n) + " " + inv_str(s) +
                ": rank matrix collides with another involution");
      check(rankmatrix::sigma_of_rank_matrix(R) == s,
            "n=" + std::to_string(n) + " " + inv_str(s) +
                ": sigma_of_rank_matrix roundtrip");
    }
  }
}

// The two independent membership tests (condition scan vs reconstruction)
// must agree on arbitrary entrywise meets, which need not be rank matrices.
inline void membership_dual_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 7);
  for (int n = 1; n <= cap; ++n) {
    auto all = involutions::enumerate_involutions(n);
    std::vector<rankmatrix::UpperMatrix> mats;
    mats.reserve(all.size());
    for (const auto& s : all) mats.push_back(rankmatrix::rank_matrix(s));
    for (std::size_t a = 0; a < mats.size(); ++a) {
      for (std::size_t b = a; b < mats.size(); ++b) {
        auto m = intersections::meet(mats[a], mats[b]);
        const bool by_conditions = rankmatrix::validate(m).valid;
        const bool by_reconstruction =
            rankmatrix::reconstruct_involution(m).has_value();
        check(by_conditions == by_reconstruction,
              "n=" + std::to_string(n) + " meet of " + inv_str(all[a]) +
                  " and " + inv_str(all[b]) +
                  ": condition scan and reconstruction disagree");
      }
    }
  }
}

// Consecutive-difference structure of genuine rank matrices, both directions.
inline void propagation_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& s : involutions::enumerate_involutions(n)) {
      auto R = rankmatrix::rank_matrix(s);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const int here = R.at(i, j);
          const int below = R.at_or_zero(i + 1, j);
          const int left = R.at_or_zero(i, j - 1);
          check(below <= here && here <= below + 1 && left <= here &&
                    here <= left + 1,
                "n=" + std::to_string(n) + " " + inv_str(s) + " at (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    "): adjacent entries differ by more than 1");
        }
      }
    }
  }
}

// Rank matrices add over disjoint unions of cycles.
inline void additivity_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 6);
  for (int n = 1; n <= cap; ++n) {
    for (const auto& s : involutions::enumerate_involutions(n)) {
      const auto& cyc = s.cycles();
      const int k = static_cast<int>(cyc.size());
      auto R = rankmatrix::rank_matrix(s);
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<std::pair<int, int>> part, rest;
        for (int c = 0; c < k; ++c)
          ((mask >> c) & 1 ? part : rest).push_back(cyc[c]);
        auto Ra = rankmatrix::rank_matrix(involutions::Involution(n, part));
        auto Rb = rankmatrix::rank_matrix(involutions::Involution(n, rest));
        bool additive = true;
        for (int i = 1; i <= n && additive; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (R.at(i, j) != Ra.at(i, j) + Rb.at(i, j)) {
              additive = false;
              break;
            }
        check(additive, "n=" + std::to_string(n) + " " + inv_str(s) +
                            " mask=" + std::to_string(mask) +
                            ": rank matrix not additive over cycle split");
      }
    }
  }
}

// Partial-order axioms for entrywise comparison, dimension monotonicity, and
// the closed form + minimality of the smallest orbit in each stratum.
inline void order_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    auto all = involutions::enumerate_involutions(n);
    const std::size_t m = all.size();
    std::vector<rankmatrix::UpperMatrix> mats;
    std::vector<int> dims;
    mats.reserve(m);
    for (const auto& s : all) {
      mats.push_back(rankmatrix::rank_matrix(s));
      dims.push_back(involutions::orbit_dim(s));
    }
    std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        le[a][b] = rankmatrix::leq(mats[a], mats[b]) ? 1 : 0;
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) ok = le[a][a];
    check(ok, "n=" + std::to_string(n) + ": order not reflexive");
    ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && le[a][b] && le[b][a]) {
          ok = false;
          break;
        }
    check(ok, "n=" + std::to_string(n) + ": order not antisymmetric");
    ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b) {
        if (!le[a][b]) continue;
        for (std::size_t c = 0; c < m; ++c)
          if (le[b][c] && !le[a][c]) {
            ok = false;
            break;
          }
      }
    check(ok, "n=" + std::to_string(n) + ": order not transitive");
    ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && le[a][b] && dims[a] >= dims[b]) {
          ok = false;
          break;
        }
    check(ok, "n=" + std::to_string(n) +
                  ": dimension not strictly monotone under strict order");
    for (int k = 0; 2 * k <= n; ++k) {
      auto so = involutions::sigma_o(n, k);
      auto Ro = rankmatrix::rank_matrix(so);
      bool closed_form = true;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (Ro.at(i, j) != std::max(0, j - i + 1 - (n - k)))
            closed_form = false;
      check(closed_form, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": minimal orbit closed form");
      bool minimal = true;
      for (const auto& s : involutions::enumerate_involutions(n, k))
        if (!rankmatrix::leq(Ro, rankmatrix::rank_matrix(s))) minimal = false;
      check(minimal, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         ": minimal orbit not below whole stratum");
    }
  }
}

// Window projections commute with taking rank matrices.
inline void projection_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 6);
  for (int n = 1; n <= cap; ++n) {
    for (const auto& s : involutions::enumerate_involutions(n)) {
      auto R = rankmatrix::rank_matrix(s);
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          auto sub = rankmatrix::project(R, i, j);
          auto dropped = rankmatrix::project(s, i, j);
          check(sub == rankmatrix::rank_matrix(dropped),
                "n=" + std::to_string(n) + " " + inv_str(s) + " window " +
                    std::to_string(i) + ".." + std::to_string(j) +
                    ": projection does not commute with rank matrix");
        }
      }
    }
  }
}

// Pairwise-intersection component lists: irreducibility criterion, antichain
// structure, completeness, symmetry, and the global lower bound.
inline void intersections_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    auto candidates = involutions::enumerate_involutions(n);
    for (int k = 0; 2 * k <= n; ++k) {
      auto tabs = tableaux::enumerate_two_column(n, k);
      auto Ro = rankmatrix::rank_matrix(involutions::sigma_o(n, k));
      for (std::size_t a = 0; a < tabs.size(); ++a) {
        for (std::size_t b = a; b < tabs.size(); ++b) {
          auto rep = intersections::intersect(tabs[a], tabs[b]);
          const std::string where = "n=" + std::to_string(n) + " pair " +
                                    tab_str(tabs[a]) + " / " +
                                    tab_str(tabs[b]);
          check(!rep.components.empty(), where + ": empty component list");
          check(rep.irreducible == rankmatrix::validate(rep.meet).valid,
                where + ": irreducible flag disagrees with meet validity");
          check(rep.irreducible == (rep.components.size() == 1),
                where + ": irreducible flag disagrees with component count");
          if (rep.irreducible)
            check(rankmatrix::rank_matrix(rep.components[0].sigma) == rep.meet,
                  where + ": single component is not the meet itself");
          for (const auto& comp : rep.components) {
            auto Rc = rankmatrix::rank_matrix(comp.sigma);
            check(rankmatrix::leq(Rc, rep.meet),
                  where + ": component not below the meet");
            check(comp.dim == involutions::orbit_dim(comp.sigma) &&
                      comp.codim == rep.ambient_dim - comp.dim,
                  where + ": component dim/codim bookkeeping");
            check(rankmatrix::leq(Ro, Rc),
                  where + ": minimal orbit not below component " +
                      inv_str(comp.sigma));
          }
          bool antichain = true;
          for (std::size_t x = 0; x < rep.components.size(); ++x)
            for (std::size_t y = 0; y < rep.components.size(); ++y)
              if (x != y &&
                  rankmatrix::leq(
                      rankmatrix::rank_matrix(rep.components[x].sigma),
                      rankmatrix::rank_matrix(rep.components[y].sigma)))
                antichain = false;
          check(antichain, where + ": components not an antichain");
          if (n <= 7) {
            bool complete = true;
            for (const auto& c : candidates) {
              auto Rc = rankmatrix::rank_matrix(c);
              if (!rankmatrix::leq(Rc, rep.meet)) continue;
              bool dominated = false;
              for (const auto& comp : rep.components)
                if (rankmatrix::leq(Rc,
                                    rankmatrix::rank_matrix(comp.sigma)))
                  dominated = true;
              if (!dominated) complete = false;
            }
            check(complete,
                  where + ": some orbit below the meet escapes all components");
          }
          if (n <= 6) {
            auto flipped = intersections::intersect(tabs[b], tabs[a]);
            bool same = flipped.components.size() == rep.components.size();
            if (same)
              for (std::size_t x = 0; x < rep.components.size(); ++x)
                if (!(flipped.components[x].sigma == rep.components[x].sigma))
                  same = false;
            check(same, where + ": intersection not symmetric");
          }
        }
      }
    }
  }
}

// For n <= 4 every equal-rank pairwise intersection is irreducible; the first
// reducible equal-rank pair appears at n = 5 (see the snapshots suite).
inline void small_n_irreducible_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 4);
  for (int n = 1; n <= cap; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto stratum = involutions::enumerate_involutions(n, k);
      for (std::size_t a = 0; a < stratum.size(); ++a) {
        for (std::size_t b = a + 1; b < stratum.size(); ++b) {
          auto m = intersections::meet(rankmatrix::rank_matrix(stratum[a]),
                                       rankmatrix::rank_matrix(stratum[b]));
          check(rankmatrix::validate(m).valid,
                "n=" + std::to_string(n) + " " + inv_str(stratum[a]) + " / " +
                    inv_str(stratum[b]) +
                    ": equal-rank meet unexpectedly reducible");
        }
      }
    }
  }
}

// Observed on all tractable n: codimension-1 intersections of tableau orbit
// closures are irreducible.  Kept as its own suite so a counterexample shows
// up under a dedicated name rather than inside a broader failure list.
inline void codim1_irreducible_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto table = intersections::pairwise_table(n, k);
      const std::size_t m = table.tableaux.size();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          const auto& cell = table.cells[a][b];
          if (cell.codim == 1)
            check(cell.irreducible,
                  "n=" + std::to_string(n) + " pair " +
                      tab_str(table.tableaux[a]) + " / " +
                      tab_str(table.tableaux[b]) +
                      ": codim-1 intersection reducible");
        }
    }
  }
}

// Row-insertion correspondence: bijectivity, inverse, cell partition, and
// soundness of cell-graph edges against the intersection table.
inline void rs_cells_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  const int cap = std::min(n_max, 6);
  for (int n = 1; n <= cap; ++n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::set<std::pair<std::vector<std::vector<int>>,
                       std::vector<std::vector<int>>>>
        pairs;
    std::vector<int> line = base;
    do {
      rscells::Permutation w(line);
      auto [P, Q] = rscells::rs(w);
      check(P.shape() == Q.shape(),
            "n=" + std::to_string(n) + " w=" + io::format_permutation(w) +
                ": insertion and recording shapes differ");
      check(rscells::rs_inverse(P, Q) == w,
            "n=" + std::to_string(n) + " w=" + io::format_permutation(w) +
                ": correspondence roundtrip");
      pairs.insert({P.rows(), Q.rows()});
    } while (std::next_permutation(line.begin(), line.end()));
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    check(pairs.size() == fact,
          "n=" + std::to_string(n) + ": correspondence not injective");
  }
  const int cap_part = std::min(n_max, 5);
  for (int n = 1; n <= cap_part; ++n) {
    std::set<std::vector<int>> seen;
    std::uint64_t total = 0;
    for (const auto& shape : tableaux::partitions(n)) {
      for (const auto& t : tableaux::enumerate_standard(shape)) {
        for (const auto& w : rscells::cell(t)) {
          check(seen.insert(w.one_line()).second,
                "n=" + std::to_string(n) +
                    ": permutation appears in two cells");
          ++total;
        }
      }
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    check(total == fact,
          "n=" + std::to_string(n) + ": cells do not partition all of S_n");
  }
  for (int n = 1; n <= cap; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto tabs = tableaux::enumerate_two_column(n, k);
      if (tabs.size() < 2) continue;
      auto table = intersections::pairwise_table(n, k);
      std::map<std::vector<std::vector<int>>, std::size_t> index;
      for (std::size_t i = 0; i < tabs.size(); ++i)
        index[tabs[i].to_standard().columns()] = i;
      for (const auto& t : tabs) {
        auto g = rscells::cell_graph(t.to_standard());
        for (const auto& e : g.edges) {
          const std::size_t a =
              index.at(g.vertices[static_cast<std::size_t>(e.a)].columns());
          const std::size_t b =
              index.at(g.vertices[static_cast<std::size_t>(e.b)].columns());
          check(table.cells[a][b].codim == 1,
                "n=" + std::to_string(n) + " base " + tab_str(t) + " edge " +
                    std::to_string(e.label) +
                    ": joined pair not codimension 1");
        }
      }
    }
  }
}

// The first row of a valid matrix recovers the tableau of its orbit.
inline void st1_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  Checker check{res};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      for (const auto& t : tableaux::enumerate_two_column(n, k)) {
        auto R = rankmatrix::rank_matrix(involutions::sigma_of_tableau(t));
        check(rankmatrix::st1_tableau(R) == t,
              "n=" + std::to_string(n) + " " + tab_str(t) +
                  ": first-row tableau readout");
      }
    }
  }
}

// Frozen worked examples at n = 4, 5, 6: exact matrices, component lists,
// cells, and graphs.  Everything is re-derived from scratch, then compared.
inline void snapshots_suite(int n_max, VerifySuiteResult& res) {
  using namespace verify_detail;
  using involutions::Involution;
  Checker check{res};
  if (n_max >= 4) {
    // Cell of the hook tableau with columns 1,2,4 | 3, and the rank-1 orbits
    // whose closures assemble the matching fiber component.
    tableaux::StandardTableau t({{1, 3}, {2}, {4}});
    auto words = rscells::cell(t);
    std::set<std::vector<int>> got;
    for (const auto& w : words) got.insert(w.one_line());
    std::set<std::vector<int>> want = {
        {4, 2, 3, 1}, {2, 4, 3, 1}, {4, 2, 1, 3}};
    check(got == want, "n=4 hook cell contents");
    auto closure = intersections::closure_set(Involution(4, {{2, 3}}));
    std::set<std::string> rank1;
    for (const auto& s : closure)
      if (s.k() == 1) rank1.insert(inv_str(s));
    check(rank1 == std::set<std::string>{"(1,3)", "(1,4)", "(2,3)", "(2,4)"},
          "n=4 closure of (2,3): rank-1 members");
    // Mixed-rank meets can already be reducible at n = 4.
    auto rep = intersections::intersect(Involution(4, {{1, 2}, {3, 4}}),
                                        Involution(4, {{2, 3}}));
    check(!rep.irreducible && rep.components.size() == 2,
          "n=4 mixed-rank reducible witness");
  }
  if (n_max >= 5) {
    auto T = tableaux::tableau_from_columns({1, 3, 5}, {2, 4});
    auto Tp = tableaux::tableau_from_columns({1, 2, 4}, {3, 5});
    auto sL = involutions::sigma_of_tableau(T);
    auto sR = involutions::sigma_of_tableau(Tp);
    check(sL == Involution(5, {{1, 2}, {3, 4}}), "n=5 sigma of 1,3,5|2,4");
    check(sR == Involution(5, {{2, 3}, {4, 5}}), "n=5 sigma of 1,2,4|3,5");
    check(rankmatrix::rank_matrix(sL) == example5_left(),
          "n=5 left rank matrix");
    check(rankmatrix::rank_matrix(sR) == example5_right(),
          "n=5 right rank matrix");
    auto rep = intersections::intersect(T, Tp);
    check(rep.meet == example5_meet(), "n=5 meet matrix");
    auto report = rankmatrix::validate(rep.meet);
    bool saw_iiic = false;
    for (const auto& v : report.violations)
      if (v.cond == rankmatrix::Cond::iiic && v.i == 1 && v.j == 3)
        saw_iiic = true;
    check(!report.valid && saw_iiic, "n=5 meet fails with iiic at (1,3)");
    std::set<std::string> comps;
    for (const auto& c : rep.components) {
      comps.insert(inv_str(c.sigma));
      check(c.dim == 4 && c.codim == 2, "n=5 component dims");
    }
    check(comps == std::set<std::string>{"(1,3)(2,5)", "(1,4)(3,5)",
                                         "(1,5)(2,4)"},
          "n=5 component list");
    auto so_closure = intersections::closure_set(involutions::sigma_o(5, 2));
    std::set<std::string> got;
    for (const auto& s : so_closure) got.insert(inv_str(s));
    check(got == std::set<std::string>{"()", "(1,4)", "(1,4)(2,5)", "(1,5)",
                                       "(2,5)"},
          "n=5 closure of the minimal rank-2 orbit");
    auto witness = intersections::intersect(Involution(5, {{1, 2}, {3, 4}}),
                                            Involution(5, {{1, 3}, {4, 5}}));
    check(!witness.irreducible, "n=5 first reducible equal-rank pair");
  }
  if (n_max >= 6) {
    auto T = tableaux::tableau_from_columns({1, 2, 4, 5}, {3, 6});
    auto Tp = tableaux::tableau_from_columns({1, 3, 4, 6}, {2, 5});
    check(involutions::sigma_of_tableau(T) == Involution(6, {{2, 3}, {5, 6}}),
          "n=6 sigma of 1,2,4,5|3,6");
    check(involutions::sigma_of_tableau(Tp) == Involution(6, {{1, 2}, {4, 5}}),
          "n=6 sigma of 1,3,4,6|2,5");
    auto rep = intersections::intersect(T, Tp);
    check(rep.meet == example6_meet(), "n=6 rank-2 meet matrix");
    check(!rep.irreducible && rep.components.size() == 2,
          "n=6 rank-2 meet reducible with two components");
    std::map<std::string, std::pair<int, int>> dims;
    for (const auto& c : rep.components)
      dims[inv_str(c.sigma)] = {c.dim, c.codim};
    check(dims.count("(1,3)(4,6)") &&
              dims["(1,3)(4,6)"] == std::make_pair(6, 2),
          "n=6 component (1,3)(4,6) dims");
    check(dims.count("(1,6)(2,5)") &&
              dims["(1,6)(2,5)"] == std::make_pair(4, 4),
          "n=6 component (1,6)(2,5) dims");

    // The five tableaux of the 2+2+2 shape at n = 6, in the naming used
    // throughout the worked example.
    auto t1 = tableaux::tableau_from_columns({1, 2, 3}, {4, 5, 6});
    auto t2 = tableaux::tableau_from_columns({1, 2, 4}, {3, 5, 6});
    auto t3 = tableaux::tableau_from_columns({1, 3, 4}, {2, 5, 6});
    auto t4 = tableaux::tableau_from_columns({1, 2, 5}, {3, 4, 6});
    auto t5 = tableaux::tableau_from_columns({1, 3, 5}, {2, 4, 6});
    const std::vector<tableaux::TwoColumnTableau> named = {t1, t2, t3, t4, t5};
    check(involutions::sigma_of_tableau(t1) ==
              Involution(6, {{1, 6}, {2, 5}, {3, 4}}),
          "n=6 sigma of T1");
    check(involutions::sigma_of_tableau(t5) ==
              Involution(6, {{1, 2}, {3, 4}, {5, 6}}),
          "n=6 sigma of T5");

    // All five cell graphs coincide; freeze the edge set with its labels.
    std::set<std::tuple<std::string, std::string, int>> expected_edges = {
        {tab_str(t1), tab_str(t2), 3},
        {tab_str(t2), tab_str(t3), 2},
        {tab_str(t2), tab_str(t4), 4},
        {tab_str(t3), tab_str(t5), 4},
        {tab_str(t4), tab_str(t5), 2}};
    for (const auto& base : named) {
      auto g = rscells::cell_graph(base.to_standard());
      std::set<std::tuple<std::string, std::string, int>> got;
      for (const auto& e : g.edges) {
        auto ea = io::format_tableau(g.vertices[static_cast<std::size_t>(e.a)]);
        auto eb = io::format_tableau(g.vertices[static_cast<std::size_t>(e.b)]);
        if (eb < ea) std::swap(ea, eb);
        got.insert({ea, eb, e.label});
      }
      check(got == expected_edges,
            "n=6 cell graph of " + tab_str(base) + ": edge set");
    }

    // Codimension classes of the ten pairs, the one codim-1 pair that is not
    // a cell-graph edge, and the unique reducible pair with its components.
    auto r15 = intersections::intersect(t1, t5);
    check(r15.irreducible && r15.components.size() == 1 &&
              r15.components[0].codim == 1 &&
              r15.components[0].sigma ==
                  Involution(6, {{1, 5}, {2, 6}, {3, 4}}),
          "n=6 T1/T5 codim-1 irreducible with known orbit");
    std::set<std::string> codim1, codim2;
    for (std::size_t a = 0; a < named.size(); ++a)
      for (std::size_t b = a + 1; b < named.size(); ++b) {
        auto rr = intersections::intersect(named[a], named[b]);
        int best = rr.components.front().codim;
        for (const auto& c : rr.components) best = std::min(best, c.codim);
        const std::string key =
            "T" + std::to_string(a + 1) + "T" + std::to_string(b + 1);
        if (best == 1) codim1.insert(key);
        if (best == 2) codim2.insert(key);
      }
    check(codim1 == std::set<std::string>{"T1T2", "T1T5", "T2T3", "T2T4",
                                          "T3T5", "T4T5"},
          "n=6 codim-1 pair set");
    check(codim2 == std::set<std::string>{"T1T3", "T1T4", "T2T5", "T3T4"},
          "n=6 codim-2 pair set");
    auto r25 = intersections::intersect(t2, t5);
    std::set<std::string> comps25;
    for (const auto& c : r25.components) {
      comps25.insert(inv_str(c.sigma));
      check(c.dim == 7, "n=6 T2/T5 component dim");
    }
    check(comps25 == std::set<std::string>{"(1,3)(2,5)(4,6)",
                                           "(1,4)(2,6)(3,5)",
                                           "(1,5)(2,4)(3,6)"},
          "n=6 T2/T5 component list");

    // Edge set vs codim-1: exactly one discrepancy, the pair T1/T5.
    auto ec = rscells::edge_vs_codim(6, 3);
    check(ec.discrepancy_count == 1, "n=6 k=3 discrepancy count");
    bool found = false;
    for (const auto& p : ec.pairs)
      if (p.discrepancy) {
        std::set<std::string> pr = {
            tab_str(ec.tableaux[static_cast<std::size_t>(p.a)]),
            tab_str(ec.tableaux[static_cast<std::size_t>(p.b)])};
        if (pr == std::set<std::string>{tab_str(t1), tab_str(t5)}) found = true;
      }
    check(found, "n=6 k=3 discrepancy is the T1/T5 pair");
  }
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "tableaux",      "sigma-tableau",       "dimension-oracle",
      "rank-matrix",   "membership-dual",     "propagation",
      "additivity",    "order",               "projection",
      "intersections", "small-n-irreducible", "codim1-irreducible",
      "rs-cells",      "st1",                 "snapshots"};
  return names;
}

inline VerifySuiteResult run_suite(const std::string& name, int n_max) {
  VerifySuiteResult res;
  res.suite = name;
  const auto start = std::chrono::steady_clock::now();
  if (name == "tableaux")
    suites::tableaux_suite(n_max, res);
  else if (name == "sigma-tableau")
    suites::sigma_tableau_suite(n_max, res);
  else if (name == "dimension-oracle")
    suites::dimension_oracle_suite(n_max, res);
  else if (name == "rank-matrix")
    suites::rank_matrix_suite(n_max, res);
  else if (name == "membership-dual")
    suites::membership_dual_suite(n_max, res);
  else if (name == "propagation")
    suites::propagation_suite(n_max, res);
  else if (name == "additivity")
    suites::additivity_suite(n_max, res);
  else if (name == "order")
    suites::order_suite(n_max, res);
  else if (name == "projection")
    suites::projection_suite(n_max, res);
  else if (name == "intersections")
    suites::intersections_suite(n_max, res);
  else if (name == "small-n-irreducible")
    suites::small_n_irreducible_suite(n_max, res);
  else if (name == "codim1-irreducible")
    suites::codim1_irreducible_suite(n_max, res);
  else if (name == "rs-cells")
    suites::rs_cells_suite(n_max, res);
  else if (name == "st1")
    suites::st1_suite(n_max, res);
  else if (name == "snapshots")
    suites::snapshots_suite(n_max, res);
  else
    throw DomainError("unknown verify suite: " + name);
  const auto stop = std::chrono::steady_clock::now();
  res.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return res;
}

// Runs every suite (or the one named by `filter`) up to n_max.  Guard rails:
// enumeration over all involutions/pairs grows fast enough that n_max > 8 is
// refused without unsafe_no_cap, and n_max > 10 is refused outright.
inline std::vector<VerifySuiteResult> verify(int n_max,
                                             const std::string& filter = "",
                                             bool unsafe_no_cap = false) {
  if (n_max < 1) throw DomainError("verify: n_max must be at least 1");
  if (n_max > 10) throw DomainError("verify: n_max > 10 is not supported");
  if (n_max > 8 && !unsafe_no_cap)
    throw DomainError(
        "verify: n_max > 8 needs --unsafe-no-cap (expect a long run)");
  std::vector<VerifySuiteResult> out;
  if (!filter.empty()) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), filter) == names.end())
      throw DomainError("unknown verify suite: " + filter);
    out.push_back(run_suite(filter, n_max));
    return out;
  }
  for (const auto& name : suite_names()) out.push_back(run_suite(name, n_max));
  return out;
}

}  // namespace orbitlattice::cli
