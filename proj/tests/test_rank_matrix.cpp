#include <catch_amalgamated.hpp>

#include "orbitlattice/rank_matrix.hpp"

using namespace orbitlattice;
using involutions::Involution;
using rankmatrix::UpperMatrix;

namespace {

UpperMatrix M(std::vector<std::vector<int>> rows) {
  return UpperMatrix(std::move(rows));
}

}  // namespace

TEST_CASE("upper matrix validation and access") {
  UpperMatrix z = UpperMatrix::zero(3);
  REQUIRE(z.n() == 3);
  REQUIRE(z.entry_sum() == 0);
  REQUIRE_THROWS_AS(M({{0, 1}, {1, 0}}), DomainError);   // below diagonal
  REQUIRE_THROWS_AS(M({{1, 0}, {0, 0}}), DomainError);   // on diagonal
  REQUIRE_THROWS_AS(M({{0, -1}, {0, 0}}), DomainError);  // negative
  REQUIRE_THROWS_AS(M({{0, 1}}), DomainError);           // not square
  UpperMatrix m = M({{0, 1}, {0, 0}});
  REQUIRE(m.at(1, 2) == 1);
  REQUIRE_THROWS_AS(m.at(0, 1), DomainError);
  REQUIRE(m.at_or_zero(3, 2) == 0);
  REQUIRE(m.at_or_zero(1, 0) == 0);
}

TEST_CASE("cycle matrix") {
  auto N = rankmatrix::n_matrix(involutions::sigma_o(5, 2));
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) {
      const bool one = (i == 1 && j == 4) || (i == 2 && j == 5);
      REQUIRE(N.at(i, j) == (one ? 1 : 0));
    }
}

TEST_CASE("rank matrix entries") {
  // R[i][j] counts the cycles of sigma lying inside the window i..j
  auto R = rankmatrix::rank_matrix(Involution(5, {{1, 2}, {3, 4}}));
  REQUIRE(R == M({{0, 1, 1, 2, 2},
                  {0, 0, 0, 1, 1},
                  {0, 0, 0, 1, 1},
                  {0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0}}));
  auto R2 = rankmatrix::rank_matrix(Involution(5, {{2, 3}, {4, 5}}));
  REQUIRE(R2 == M({{0, 0, 1, 1, 2},
                   {0, 0, 1, 1, 2},
                   {0, 0, 0, 0, 1},
                   {0, 0, 0, 0, 1},
                   {0, 0, 0, 0, 0}}));
  REQUIRE(rankmatrix::rank_matrix(Involution::identity(3)) ==
          UpperMatrix::zero(3));
}

TEST_CASE("validation rejects the 3x3 counterexample") {
  // satisfies the consecutive-difference conditions but not propagation
  auto report = rankmatrix::validate(M({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}));
  REQUIRE_FALSE(report.valid);
  REQUIRE_FALSE(report.violations.empty());
  for (const auto& v : report.violations) REQUIRE(v.cond == rankmatrix::Cond::iiic);
}

TEST_CASE("validation accepts genuine rank matrices") {
  for (const auto& s : involutions::enumerate_involutions(5)) {
    auto report = rankmatrix::validate(rankmatrix::rank_matrix(s));
    REQUIRE(report.valid);
    REQUIRE(report.violations.empty());
  }
}

TEST_CASE("validation pinpoints the violated condition") {
  // meet of the two n=5 matrices above: fails the propagation row rule at (1,3)
  auto meet = M({{0, 0, 1, 1, 2},
                 {0, 0, 0, 1, 1},
                 {0, 0, 0, 0, 1},
                 {0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0}});
  auto report = rankmatrix::validate(meet);
  REQUIRE_FALSE(report.valid);
  bool at_1_3 = false;
  for (const auto& v : report.violations)
    if (v.cond == rankmatrix::Cond::iiic && v.i == 1 && v.j == 3) at_1_3 = true;
  REQUIRE(at_1_3);
}

TEST_CASE("reconstruction inverts rank_matrix") {
  for (const auto& s : involutions::enumerate_involutions(6)) {
    auto back = rankmatrix::reconstruct_involution(rankmatrix::rank_matrix(s));
    REQUIRE(back.has_value());
    REQUIRE(*back == s);
  }
  REQUIRE_FALSE(
      rankmatrix::reconstruct_involution(M({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}))
          .has_value());
}

TEST_CASE("sigma_of_rank_matrix") {
  Involution s(6, {{1, 6}, {2, 3}, {4, 5}});
  REQUIRE(rankmatrix::sigma_of_rank_matrix(rankmatrix::rank_matrix(s)) == s);
  REQUIRE_THROWS_AS(
      rankmatrix::sigma_of_rank_matrix(M({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}})),
      DomainError);
}

TEST_CASE("entrywise order") {
  auto a = rankmatrix::rank_matrix(involutions::sigma_o(5, 2));
  auto b = rankmatrix::rank_matrix(Involution(5, {{1, 2}, {3, 4}}));
  REQUIRE(rankmatrix::leq(a, b));
  REQUIRE_FALSE(rankmatrix::leq(b, a));
  REQUIRE(rankmatrix::leq(a, a));
  REQUIRE_THROWS_AS(rankmatrix::leq(a, UpperMatrix::zero(4)), DomainError);
}

TEST_CASE("window projection") {
  Involution s(6, {{1, 5}, {2, 6}, {3, 4}});
  // cycles with an endpoint outside 2..6 are dropped, the rest relabeled
  REQUIRE(rankmatrix::project(s, 2, 6) == Involution(5, {{1, 5}, {2, 3}}));
  REQUIRE(rankmatrix::project(s, 1, 6) == s);
  REQUIRE(rankmatrix::project(s, 3, 4) == Involution(2, {{1, 2}}));
  REQUIRE(rankmatrix::project(rankmatrix::rank_matrix(s), 2, 6) ==
          rankmatrix::rank_matrix(rankmatrix::project(s, 2, 6)));
  REQUIRE_THROWS_AS(rankmatrix::project(s, 0, 3), DomainError);
  REQUIRE_THROWS_AS(rankmatrix::project(s, 4, 3), DomainError);
}

TEST_CASE("tableau readout from the first row") {
  auto R = rankmatrix::rank_matrix(Involution(5, {{1, 3}, {2, 5}}));
  auto t = rankmatrix::st1_tableau(R);
  REQUIRE(t.col1() == std::vector<int>{1, 2, 4});
  REQUIRE(t.col2() == std::vector<int>{3, 5});
  REQUIRE_THROWS_AS(
      rankmatrix::st1_tableau(M({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}})),
      DomainError);
}
