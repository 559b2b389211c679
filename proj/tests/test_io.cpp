#include <catch_amalgamated.hpp>

#include <algorithm>

#include "orbitlattice/io.hpp"

using namespace orbitlattice;
using involutions::Involution;
using tableaux::StandardTableau;
using tableaux::TwoColumnTableau;

TEST_CASE("tableau text round-trip") {
  REQUIRE(io::format_tableau(TwoColumnTableau({1, 3, 5}, {2, 4})) ==
          "1,3,5|2,4");
  REQUIRE(io::format_tableau(TwoColumnTableau({1, 2}, {})) == "1,2");
  REQUIRE(io::parse_tableau("1,3,5|2,4") == TwoColumnTableau({1, 3, 5}, {2, 4}));
  REQUIRE(io::parse_tableau(" 1 , 2 ") == TwoColumnTableau({1, 2}, {}));
  REQUIRE_THROWS_AS(io::parse_tableau("1|2|3"), ParseError);
  REQUIRE_THROWS_AS(io::parse_tableau("1,x|2"), ParseError);
  REQUIRE_THROWS_AS(io::parse_tableau("2,3|1"), DomainError);

  StandardTableau st({{1, 3}, {2, 5}, {4}});
  REQUIRE(io::format_tableau(st) == "1,2,4|3,5");
  REQUIRE(io::parse_standard_tableau("1,2,4|3,5") == st);
  REQUIRE(io::parse_standard_tableau("1,2,3") ==
          StandardTableau({{1}, {2}, {3}}));
  REQUIRE_THROWS_AS(io::parse_standard_tableau("1|2,3"), DomainError);
  REQUIRE_THROWS_AS(io::parse_standard_tableau(""), ParseError);
}

TEST_CASE("involution text round-trip") {
  REQUIRE(io::format_involution(Involution::identity(4)) == "()");
  REQUIRE(io::format_involution(Involution(5, {{3, 4}, {1, 2}})) ==
          "(1,2)(3,4)");
  REQUIRE(io::parse_involution("(1,2)(3,4)", 5) ==
          Involution(5, {{1, 2}, {3, 4}}));
  REQUIRE(io::parse_involution("(2,1)", 3) == Involution(3, {{1, 2}}));
  REQUIRE(io::parse_involution("()", 3) == Involution::identity(3));
  REQUIRE_THROWS_AS(io::parse_involution("(1,2", 4), ParseError);
  REQUIRE_THROWS_AS(io::parse_involution("1,2", 4), ParseError);
  REQUIRE_THROWS_AS(io::parse_involution("(1,2,3)", 4), ParseError);
  REQUIRE_THROWS_AS(io::parse_involution("(1,9)", 4), DomainError);
}

TEST_CASE("matrix text round-trip") {
  auto m = io::parse_matrix("0,1,2;0,0,1;0,0,0");
  REQUIRE(m.n() == 3);
  REQUIRE(m.at(1, 3) == 2);
  REQUIRE(io::format_matrix_csv(m) == "0,1,2;0,0,1;0,0,0");
  REQUIRE(io::parse_matrix(io::format_matrix_csv(m)) == m);
  REQUIRE(io::format_matrix_grid(m) == "0 1 2\n0 0 1\n0 0 0\n");
  REQUIRE_THROWS_AS(io::parse_matrix("0,1;1,0"), DomainError);
  REQUIRE_THROWS_AS(io::parse_matrix("0,a;0,0"), ParseError);
}

TEST_CASE("json round-trips for every document type") {
  TwoColumnTableau t({1, 2, 4}, {3, 5});
  REQUIRE(io::tableau_from_json(io::json_of(t)) == t);

  StandardTableau st({{1, 3}, {2}, {4}});
  REQUIRE(io::standard_tableau_from_json(io::json_of(st)) == st);

  Involution s(5, {{1, 2}, {3, 4}});
  REQUIRE(io::involution_from_json(io::json_of(s)) == s);
  REQUIRE(io::involution_from_json(io::json_of(Involution::identity(3))) ==
          Involution::identity(3));

  auto R = rankmatrix::rank_matrix(s);
  REQUIRE(io::matrix_from_json(io::json_of(R)) == R);

  auto meet = intersections::meet(
      R, rankmatrix::rank_matrix(Involution(5, {{2, 3}, {4, 5}})));
  auto validity = rankmatrix::validate(meet);
  auto validity2 = io::validity_from_json(io::json_of(validity));
  REQUIRE(validity2.valid == validity.valid);
  REQUIRE(validity2.violations.size() == validity.violations.size());
  for (std::size_t i = 0; i < validity.violations.size(); ++i) {
    REQUIRE(validity2.violations[i].cond == validity.violations[i].cond);
    REQUIRE(validity2.violations[i].i == validity.violations[i].i);
    REQUIRE(validity2.violations[i].j == validity.violations[i].j);
  }

  auto rep = intersections::intersect(TwoColumnTableau({1, 3, 5}, {2, 4}),
                                      TwoColumnTableau({1, 2, 4}, {3, 5}));
  auto rep2 = io::intersection_from_json(io::json_of(rep));
  REQUIRE(rep2.left == rep.left);
  REQUIRE(rep2.right == rep.right);
  REQUIRE(rep2.meet == rep.meet);
  REQUIRE(rep2.irreducible == rep.irreducible);
  REQUIRE(rep2.ambient_dim == rep.ambient_dim);
  REQUIRE(rep2.same_rank == rep.same_rank);
  REQUIRE(rep2.components.size() == rep.components.size());
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    REQUIRE(rep2.components[i].sigma == rep.components[i].sigma);
    REQUIRE(rep2.components[i].dim == rep.components[i].dim);
    REQUIRE(rep2.components[i].codim == rep.components[i].codim);
    REQUIRE(rep2.components[i].rank == rep.components[i].rank);
  }

  auto table = intersections::pairwise_table(5, 2);
  auto table2 = io::pairwise_from_json(io::json_of(table));
  REQUIRE(table2.n == table.n);
  REQUIRE(table2.k == table.k);
  REQUIRE(table2.tableaux == table.tableaux);
  REQUIRE(table2.cells.size() == table.cells.size());
  for (std::size_t a = 0; a < table.cells.size(); ++a)
    for (std::size_t b = 0; b < table.cells.size(); ++b) {
      REQUIRE(table2.cells[a][b].codim == table.cells[a][b].codim);
      REQUIRE(table2.cells[a][b].irreducible == table.cells[a][b].irreducible);
      REQUIRE(table2.cells[a][b].component_count ==
              table.cells[a][b].component_count);
    }

  auto g = rscells::cell_graph(st);
  auto g2 = io::cell_graph_from_json(io::json_of(g));
  REQUIRE(g2.base == g.base);
  REQUIRE(g2.vertices == g.vertices);
  REQUIRE(g2.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    REQUIRE(g2.edges[i].a == g.edges[i].a);
    REQUIRE(g2.edges[i].b == g.edges[i].b);
    REQUIRE(g2.edges[i].label == g.edges[i].label);
  }

  auto roots = rscells::root_positions(rscells::Permutation({4, 2, 3, 1}));
  auto roots2 = io::root_positions_from_json(io::json_of(roots));
  REQUIRE(roots2.w == roots.w);
  REQUIRE(roots2.positions == roots.positions);

  auto ec = rscells::edge_vs_codim(5, 2);
  auto ec2 = io::edge_codim_from_json(io::json_of(ec));
  REQUIRE(ec2.n == ec.n);
  REQUIRE(ec2.k == ec.k);
  REQUIRE(ec2.tableaux == ec.tableaux);
  REQUIRE(ec2.discrepancy_count == ec.discrepancy_count);
  REQUIRE(ec2.pairs.size() == ec.pairs.size());
  for (std::size_t i = 0; i < ec.pairs.size(); ++i) {
    REQUIRE(ec2.pairs[i].a == ec.pairs[i].a);
    REQUIRE(ec2.pairs[i].b == ec.pairs[i].b);
    REQUIRE(ec2.pairs[i].codim == ec.pairs[i].codim);
    REQUIRE(ec2.pairs[i].joined == ec.pairs[i].joined);
    REQUIRE(ec2.pairs[i].discrepancy == ec.pairs[i].discrepancy);
  }
}

TEST_CASE("dot output") {
  auto g = rscells::cell_graph(
      TwoColumnTableau({1, 2, 4}, {3, 5, 6}).to_standard());
  auto dot = io::cell_graph_dot(g);
  REQUIRE(dot.rfind("graph", 0) == 0);
  REQUIRE(dot.find("label=") != std::string::npos);
  REQUIRE(dot.find("--") != std::string::npos);
  // byte-identical across calls
  REQUIRE(io::cell_graph_dot(g) == dot);

  auto table = intersections::pairwise_table(6, 3);
  auto cdot = io::codim1_graph_dot(table);
  REQUIRE(cdot.rfind("graph", 0) == 0);
  REQUIRE(io::codim1_graph_dot(table) == cdot);
  // six codim-1 pairs, one line each
  REQUIRE(std::count(cdot.begin(), cdot.end(), '-') == 2 * 6);
}

TEST_CASE("text reports") {
  auto rep = intersections::intersect(TwoColumnTableau({1, 3, 5}, {2, 4}),
                                      TwoColumnTableau({1, 2, 4}, {3, 5}));
  auto text = io::format_intersection_text(rep);
  REQUIRE(text.find("irreducible: no") != std::string::npos);
  REQUIRE(text.find("(1,4)(3,5)") != std::string::npos);

  auto validity = rankmatrix::validate(
      io::parse_matrix("0,1,2;0,0,1;0,0,0"));
  auto vtext = io::format_validity_text(validity);
  REQUIRE(vtext.rfind("invalid", 0) == 0);
  REQUIRE(vtext.find("iiic at (1,2)") != std::string::npos);

  auto table = intersections::pairwise_table(6, 3);
  auto ttext = io::format_table_text(table);
  REQUIRE(ttext.find("T1") != std::string::npos);
  auto csv = io::format_table_csv(table);
  REQUIRE(csv.find("left,right,codim,irreducible,components") == 0);
}
