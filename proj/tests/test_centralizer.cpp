#include <catch_amalgamated.hpp>

#include "orbitlattice/centralizer.hpp"

using namespace orbitlattice;
using involutions::Involution;

TEST_CASE("centralizer oracle on corner cases") {
  // identity: the centralizer is the whole Borel, so the orbit is a point
  REQUIRE(cli::centralizer_dim_oracle(Involution::identity(4)) == 0);
  REQUIRE(cli::centralizer_dim_oracle(Involution::identity(1)) == 0);
  // minimal rank-2 orbit at n=5 vs. a dense one of dimension k(n-k) = 6
  REQUIRE(cli::centralizer_dim_oracle(involutions::sigma_o(5, 2)) == 3);
  REQUIRE(cli::centralizer_dim_oracle(Involution(5, {{1, 2}, {3, 4}})) == 6);
  REQUIRE(cli::centralizer_dim_oracle(Involution(2, {{1, 2}})) == 1);
}

TEST_CASE("oracle agrees with the combinatorial dimension") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : involutions::enumerate_involutions(n))
      REQUIRE(cli::centralizer_dim_oracle(s) == involutions::orbit_dim(s));
}

TEST_CASE("integer rank on a known system") {
  // rank of [[2,4],[1,2]] is 1; [[1,0],[0,1]] is 2; zero matrix is 0
  std::vector<std::vector<__int128>> a = {{2, 4}, {1, 2}};
  REQUIRE(cli::detail::integer_rank(a) == 1);
  std::vector<std::vector<__int128>> b = {{1, 0}, {0, 1}};
  REQUIRE(cli::detail::integer_rank(b) == 2);
  std::vector<std::vector<__int128>> z = {{0, 0}, {0, 0}};
  REQUIRE(cli::detail::integer_rank(z) == 0);
}
