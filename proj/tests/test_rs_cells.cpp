#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "orbitlattice/rs_cells.hpp"

using namespace orbitlattice;
using rscells::Permutation;
using tableaux::StandardTableau;

TEST_CASE("permutation basics") {
  Permutation w({4, 2, 3, 1});
  REQUIRE(w(1) == 4);
  REQUIRE(w(4) == 1);
  REQUIRE(w.inverse() == Permutation({4, 2, 3, 1}));  // an involution here
  REQUIRE(Permutation({2, 3, 1}).inverse() == Permutation({3, 1, 2}));
  REQUIRE_THROWS_AS(Permutation({1, 1, 2}), DomainError);
  REQUIRE_THROWS_AS(Permutation({0, 1}), DomainError);
  REQUIRE(Permutation::identity(3) == Permutation({1, 2, 3}));
}

TEST_CASE("row insertion") {
  auto [P, Q] = rscells::rs(Permutation({4, 2, 3, 1}));
  REQUIRE(P.rows() == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  REQUIRE(Q.rows() == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  auto [P2, Q2] = rscells::rs(Permutation({1, 2, 3}));
  REQUIRE(P2.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
  auto [P3, Q3] = rscells::rs(Permutation({3, 2, 1}));
  REQUIRE(P3.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  REQUIRE(Q3.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("inverse insertion") {
  std::vector<int> line = {1, 2, 3, 4, 5};
  do {
    Permutation w(line);
    auto [P, Q] = rscells::rs(w);
    REQUIRE(rscells::rs_inverse(P, Q) == w);
  } while (std::next_permutation(line.begin(), line.end()));
  REQUIRE_THROWS_AS(
      rscells::rs_inverse(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})),
      DomainError);
}

TEST_CASE("cells partition the symmetric group") {
  StandardTableau t({{1, 3}, {2}, {4}});
  auto words = rscells::cell(t);
  std::set<std::vector<int>> got;
  for (const auto& w : words) got.insert(w.one_line());
  REQUIRE(got == std::set<std::vector<int>>{
                     {4, 2, 3, 1}, {2, 4, 3, 1}, {4, 2, 1, 3}});

  std::size_t total = 0;
  for (const auto& shape : tableaux::partitions(4))
    for (const auto& base : tableaux::enumerate_standard(shape))
      total += rscells::cell(base).size();
  REQUIRE(total == 24);
}

TEST_CASE("cell graph for the 2+2+2 shape") {
  auto t = tableaux::TwoColumnTableau({1, 2, 4}, {3, 5, 6}).to_standard();
  auto g = rscells::cell_graph(t);
  REQUIRE(g.vertices.size() == 5);
  REQUIRE(g.edges.size() == 5);
  // edges carry the swapped position as label
  std::set<std::tuple<std::string, std::string, int>> got;
  auto name = [&](int v) {
    std::string out;
    for (const auto& col : g.vertices[static_cast<std::size_t>(v)].columns()) {
      if (!out.empty()) out += '|';
      for (std::size_t i = 0; i < col.size(); ++i)
        out += (i ? "," : "") + std::to_string(col[i]);
    }
    return out;
  };
  for (const auto& e : g.edges) {
    auto a = name(e.a), b = name(e.b);
    if (b < a) std::swap(a, b);
    got.insert({a, b, e.label});
  }
  const std::set<std::tuple<std::string, std::string, int>> expected = {
      {"1,2,3|4,5,6", "1,2,4|3,5,6", 3},
      {"1,2,4|3,5,6", "1,3,4|2,5,6", 2},
      {"1,2,4|3,5,6", "1,2,5|3,4,6", 4},
      {"1,3,4|2,5,6", "1,3,5|2,4,6", 4},
      {"1,2,5|3,4,6", "1,3,5|2,4,6", 2}};
  REQUIRE(got == expected);

  // every base of the shape sees the same graph
  for (const auto& other : tableaux::enumerate_standard(t.shape())) {
    auto g2 = rscells::cell_graph(other);
    std::set<std::tuple<int, int, int>> e1, e2;
    for (const auto& e : g.edges) e1.insert({e.a, e.b, e.label});
    for (const auto& e : g2.edges) e2.insert({e.a, e.b, e.label});
    REQUIRE(e1 == e2);
  }
}

TEST_CASE("root positions") {
  auto all = rscells::root_positions(Permutation({1, 2, 3}));
  REQUIRE(all.positions ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  REQUIRE(rscells::root_positions(Permutation({3, 2, 1})).positions.empty());
  REQUIRE(rscells::root_positions(Permutation({4, 2, 3, 1})).positions ==
          std::vector<std::pair<int, int>>{{2, 3}});
  REQUIRE(rscells::root_positions(Permutation({2, 4, 3, 1})).positions ==
          std::vector<std::pair<int, int>>{{2, 3}, {2, 4}});
  REQUIRE(rscells::root_positions(Permutation({4, 2, 1, 3})).positions ==
          std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("edges against codimension") {
  // at n=4 and n=5 the two notions agree exactly
  REQUIRE(rscells::edge_vs_codim(4, 2).discrepancy_count == 0);
  REQUIRE(rscells::edge_vs_codim(5, 2).discrepancy_count == 0);
  // at n=6, k=3 exactly one codim-1 pair has no edge
  auto rep = rscells::edge_vs_codim(6, 3);
  REQUIRE(rep.discrepancy_count == 1);
  int disc = 0;
  for (const auto& p : rep.pairs) {
    if (p.joined) REQUIRE(p.codim == 1);
    if (p.discrepancy) {
      ++disc;
      REQUIRE(p.codim == 1);
      REQUIRE_FALSE(p.joined);
    }
  }
  REQUIRE(disc == 1);
}
