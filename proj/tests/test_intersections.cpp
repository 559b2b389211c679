#include <catch_amalgamated.hpp>

#include <set>
#include <string>

#include "orbitlattice/intersections.hpp"
#include "orbitlattice/io.hpp"

using namespace orbitlattice;
using involutions::Involution;
using tableaux::TwoColumnTableau;

namespace {

std::set<std::string> component_names(const intersections::IntersectionReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.components) out.insert(io::format_involution(c.sigma));
  return out;
}

}  // namespace

TEST_CASE("meet is the entrywise minimum") {
  auto a = rankmatrix::rank_matrix(Involution(5, {{1, 2}, {3, 4}}));
  auto b = rankmatrix::rank_matrix(Involution(5, {{2, 3}, {4, 5}}));
  auto m = intersections::meet(a, b);
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j)
      REQUIRE(m.at(i, j) == std::min(a.at(i, j), b.at(i, j)));
  REQUIRE_THROWS_AS(
      intersections::meet(a, rankmatrix::UpperMatrix::zero(4)), DomainError);
}

TEST_CASE("closure sets") {
  auto closure = intersections::closure_set(involutions::sigma_o(5, 2));
  std::set<std::string> got;
  for (const auto& s : closure) got.insert(io::format_involution(s));
  REQUIRE(got == std::set<std::string>{"()", "(1,4)", "(1,4)(2,5)", "(1,5)",
                                       "(2,5)"});
  // the closure of (2,3) at n=4 contains exactly the four rank-1 orbits of
  // the matching fiber component, plus the zero orbit
  auto c4 = intersections::closure_set(Involution(4, {{2, 3}}));
  std::set<std::string> got4;
  for (const auto& s : c4) got4.insert(io::format_involution(s));
  REQUIRE(got4 == std::set<std::string>{"()", "(1,3)", "(1,4)", "(2,3)",
                                        "(2,4)"});
}

TEST_CASE("reducible pair at n=5") {
  auto rep = intersections::intersect(TwoColumnTableau({1, 3, 5}, {2, 4}),
                                      TwoColumnTableau({1, 2, 4}, {3, 5}));
  REQUIRE(rep.n == 5);
  REQUIRE(rep.same_rank);
  REQUIRE(rep.ambient_dim == 6);
  REQUIRE_FALSE(rep.irreducible);
  REQUIRE(component_names(rep) ==
          std::set<std::string>{"(1,3)(2,5)", "(1,4)(3,5)", "(1,5)(2,4)"});
  for (const auto& c : rep.components) {
    REQUIRE(c.dim == 4);
    REQUIRE(c.codim == 2);
    REQUIRE(c.rank == 2);
  }
}

TEST_CASE("reducible pair at n=6 with unequal component dims") {
  auto rep = intersections::intersect(TwoColumnTableau({1, 2, 4, 5}, {3, 6}),
                                      TwoColumnTableau({1, 3, 4, 6}, {2, 5}));
  REQUIRE_FALSE(rep.irreducible);
  REQUIRE(rep.components.size() == 2);
  REQUIRE(component_names(rep) ==
          std::set<std::string>{"(1,3)(4,6)", "(1,6)(2,5)"});
  for (const auto& c : rep.components) {
    if (io::format_involution(c.sigma) == "(1,3)(4,6)") {
      REQUIRE(c.dim == 6);
      REQUIRE(c.codim == 2);
    } else {
      REQUIRE(c.dim == 4);
      REQUIRE(c.codim == 4);
    }
  }
}

TEST_CASE("irreducible pair") {
  auto rep = intersections::intersect(TwoColumnTableau({1, 2, 3}, {4, 5, 6}),
                                      TwoColumnTableau({1, 3, 5}, {2, 4, 6}));
  REQUIRE(rep.irreducible);
  REQUIRE(rep.components.size() == 1);
  REQUIRE(rep.components[0].sigma == Involution(6, {{1, 5}, {2, 6}, {3, 4}}));
  REQUIRE(rep.components[0].dim == 8);
  REQUIRE(rep.components[0].codim == 1);
  REQUIRE(rankmatrix::rank_matrix(rep.components[0].sigma) == rep.meet);
}

TEST_CASE("self intersection is the orbit itself") {
  TwoColumnTableau t({1, 2, 4}, {3, 5});
  auto rep = intersections::intersect(t, t);
  REQUIRE(rep.irreducible);
  REQUIRE(rep.components.size() == 1);
  REQUIRE(rep.components[0].sigma == involutions::sigma_of_tableau(t));
  REQUIRE(rep.components[0].codim == 0);
}

TEST_CASE("mixed-rank intersections can be reducible at n=4") {
  auto rep = intersections::intersect(Involution(4, {{1, 2}, {3, 4}}),
                                      Involution(4, {{2, 3}}));
  REQUIRE_FALSE(rep.irreducible);
  REQUIRE_FALSE(rep.same_rank);
  REQUIRE(component_names(rep) == std::set<std::string>{"(1,3)", "(2,4)"});
  auto rep2 = intersections::intersect(Involution(4, {{1, 3}, {2, 4}}),
                                       Involution(4, {{2, 3}}));
  REQUIRE(component_names(rep2) == std::set<std::string>{"(1,3)", "(2,4)"});
}

TEST_CASE("size mismatch is rejected") {
  REQUIRE_THROWS_AS(intersections::intersect(Involution(4, {{1, 2}}),
                                             Involution(5, {{1, 2}})),
                    DomainError);
}

TEST_CASE("pairwise table over a stratum") {
  auto table = intersections::pairwise_table(6, 3);
  REQUIRE(table.tableaux.size() == 5);
  const std::size_t m = table.tableaux.size();
  for (std::size_t a = 0; a < m; ++a) {
    REQUIRE(table.cells[a][a].codim == 0);
    REQUIRE(table.cells[a][a].irreducible);
    for (std::size_t b = 0; b < m; ++b) {
      REQUIRE(table.cells[a][b].codim == table.cells[b][a].codim);
      REQUIRE(table.cells[a][b].irreducible == table.cells[b][a].irreducible);
      REQUIRE(table.cells[a][b].component_count ==
              table.cells[b][a].component_count);
    }
  }
  int reducible = 0, codim1 = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!table.cells[a][b].irreducible) ++reducible;
      if (table.cells[a][b].codim == 1) ++codim1;
    }
  REQUIRE(reducible == 1);  // one pair splits into three components
  REQUIRE(codim1 == 6);
  REQUIRE_THROWS_AS(intersections::pairwise_table(4, 3), DomainError);
}
