#pragma once

// Subcommand driver shared by the binary and the tests: run() takes argv in
// natural order (program name excluded), writes documents to `out` and
// diagnostics to `err`, and returns the exit code: 0 success, 1 domain error,
// 2 parse error, 3 verification failures.

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitlattice/centralizer.hpp"
#include "orbitlattice/errors.hpp"
#include "orbitlattice/intersections.hpp"
#include "orbitlattice/involutions.hpp"
#include "orbitlattice/io.hpp"
#include "orbitlattice/rank_matrix.hpp"
#include "orbitlattice/rs_cells.hpp"
#include "orbitlattice/tableaux.hpp"
#include "orbitlattice/verify.hpp"

namespace orbitlattice::cli {

namespace cli_detail {

inline void require_format(const std::string& format,
                           std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string msg = "--format: '" + format + "' not supported here (use";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw orbitlattice::ParseError(msg + ")");
}

inline io::json json_of(const VerifySuiteResult& r) {
  return io::json{{"suite", r.suite},
                  {"cases", r.cases},
                  {"failures", r.failures},
                  {"wall_ms", r.wall_ms}};
}

inline std::string format_verify_text(const std::vector<VerifySuiteResult>& rs) {
  std::string out;
  long long failures = 0;
  for (const auto& r : rs) {
    out += r.suite + ": cases=" + std::to_string(r.cases) +
           " failures=" + std::to_string(r.failures.size()) +
           " wall_ms=" + std::to_string(r.wall_ms) + "\n";
    for (const auto& f : r.failures) out += "  " + f + "\n";
    failures += static_cast<long long>(r.failures.size());
  }
  out += failures == 0 ? "all suites passed\n"
                       : std::to_string(failures) + " failure(s)\n";
  return out;
}

inline std::string format_cell_graph_text(const rscells::CellGraph& g) {
  std::string out;
  for (const auto& e : g.edges)
    out += io::format_tableau(g.vertices[static_cast<std::size_t>(e.a)]) +
           " -- " +
           io::format_tableau(g.vertices[static_cast<std::size_t>(e.b)]) +
           " (" + std::to_string(e.label) + ")\n";
  return out;
}

inline std::string format_codim1_text(const intersections::PairwiseTable& t) {
  std::string out;
  for (std::size_t a = 0; a < t.tableaux.size(); ++a)
    for (std::size_t b = a + 1; b < t.tableaux.size(); ++b)
      if (t.cells[a][b].codim == 1)
        out += io::format_tableau(t.tableaux[a]) + " -- " +
               io::format_tableau(t.tableaux[b]) + "\n";
  return out;
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  using cli_detail::require_format;
  CLI::App app{"two-column orbit closures: order, intersections, cells"};
  app.name("orbitlattice");
  app.require_subcommand(1);

  std::string format = "text";
  const auto fmt_check = CLI::IsMember({"text", "json", "dot", "csv"});
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(fmt_check);
  };

  int n = 0, k = 0, n_max = 0;
  std::string tableau_text, sigma_text, matrix_text, lhs_text, rhs_text;
  std::string left_text, right_text, suite;
  bool as_tableaux = false, unsafe_no_cap = false;

  auto* cmd_tableaux = app.add_subcommand("tableaux", "list the two-column tableaux for n, k");
  cmd_tableaux->add_option("--n", n)->required();
  cmd_tableaux->add_option("--k", k)->required();
  add_format(cmd_tableaux);

  auto* cmd_sigma = app.add_subcommand("sigma", "involution attached to a two-column tableau");
  cmd_sigma->add_option("--tableau", tableau_text)->required();
  add_format(cmd_sigma);

  auto* cmd_tableau = app.add_subcommand("tableau", "tableau whose attached involution is --sigma");
  cmd_tableau->add_option("--sigma", sigma_text)->required();
  cmd_tableau->add_option("--n", n)->required();
  add_format(cmd_tableau);

  auto* cmd_nmatrix = app.add_subcommand("nmatrix", "0/1 cycle matrix of an involution");
  cmd_nmatrix->add_option("--sigma", sigma_text)->required();
  cmd_nmatrix->add_option("--n", n)->required();
  add_format(cmd_nmatrix);

  auto* cmd_rankmatrix = app.add_subcommand("rankmatrix", "rank matrix of an involution");
  cmd_rankmatrix->add_option("--sigma", sigma_text)->required();
  cmd_rankmatrix->add_option("--n", n)->required();
  add_format(cmd_rankmatrix);

  auto* cmd_validate = app.add_subcommand("validate", "is the matrix the rank matrix of some involution?");
  cmd_validate->add_option("--matrix", matrix_text, "rows ';'-separated, entries ','-separated")->required();
  add_format(cmd_validate);

  auto* cmd_dim = app.add_subcommand("dim", "orbit dimension of an involution");
  cmd_dim->add_option("--sigma", sigma_text)->required();
  cmd_dim->add_option("--n", n)->required();
  add_format(cmd_dim);

  auto* cmd_order = app.add_subcommand("order", "is lhs below rhs in the closure order?");
  cmd_order->add_option("--lhs", lhs_text)->required();
  cmd_order->add_option("--rhs", rhs_text)->required();
  cmd_order->add_option("--n", n)->required();
  add_format(cmd_order);

  auto* cmd_closure = app.add_subcommand("closure", "all orbits in the closure of --sigma");
  cmd_closure->add_option("--sigma", sigma_text)->required();
  cmd_closure->add_option("--n", n)->required();
  add_format(cmd_closure);

  auto* cmd_intersect = app.add_subcommand("intersect", "components of the pairwise closure intersection");
  cmd_intersect->add_option("--left", left_text)->required();
  cmd_intersect->add_option("--right", right_text)->required();
  cmd_intersect->add_flag("--as-tableaux", as_tableaux, "parse --left/--right as tableaux");
  cmd_intersect->add_option("--n", n, "needed when the inputs are involutions");
  add_format(cmd_intersect);

  auto* cmd_table = app.add_subcommand("table", "pairwise codimension table over a whole stratum");
  cmd_table->add_option("--n", n)->required();
  cmd_table->add_option("--k", k)->required();
  add_format(cmd_table);

  auto* cmd_cell = app.add_subcommand("cell", "permutations whose recording data is the given tableau");
  cmd_cell->add_option("--tableau", tableau_text)->required();
  add_format(cmd_cell);

  auto* cmd_cellgraph = app.add_subcommand("cellgraph", "swap graph on the cells of a shape");
  cmd_cellgraph->add_option("--tableau", tableau_text)->required();
  add_format(cmd_cellgraph);

  auto* cmd_codim1 = app.add_subcommand("codim1graph", "graph of codimension-1 pairwise intersections");
  cmd_codim1->add_option("--n", n)->required();
  cmd_codim1->add_option("--k", k)->required();
  add_format(cmd_codim1);

  auto* cmd_ec = app.add_subcommand("edge-vs-codim", "cell-graph edges against codimension-1 pairs");
  cmd_ec->add_option("--n", n)->required();
  cmd_ec->add_option("--k", k)->required();
  add_format(cmd_ec);

  auto* cmd_verify = app.add_subcommand("verify", "cross-module invariant suites up to --n-max");
  cmd_verify->add_option("--n-max", n_max)->required();
  cmd_verify->add_option("--suite", suite, "run a single suite by name");
  cmd_verify->add_flag("--unsafe-no-cap", unsafe_no_cap, "allow n-max above the safety cap");
  add_format(cmd_verify);

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty())
      target = target->get_subcommands().back();
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_tableaux)) {
      require_format(format, {"text", "json"});
      auto tabs = tableaux::enumerate_two_column(n, k);
      if (format == "json") {
        io::json arr = io::json::array();
        for (const auto& t : tabs) arr.push_back(io::json_of(t));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& t : tabs) out << io::format_tableau(t) << "\n";
      }
    } else if (app.got_subcommand(cmd_sigma)) {
      require_format(format, {"text", "json"});
      auto s = involutions::sigma_of_tableau(io::parse_tableau(tableau_text));
      if (format == "json")
        out << io::json_of(s).dump(2) << "\n";
      else
        out << io::format_involution(s) << "\n";
    } else if (app.got_subcommand(cmd_tableau)) {
      require_format(format, {"text", "json"});
      auto t = involutions::tableau_of_sigma(io::parse_involution(sigma_text, n));
      if (format == "json")
        out << io::json_of(t).dump(2) << "\n";
      else
        out << io::format_tableau(t) << "\n";
    } else if (app.got_subcommand(cmd_nmatrix) ||
               app.got_subcommand(cmd_rankmatrix)) {
      require_format(format, {"text", "json", "csv"});
      auto s = io::parse_involution(sigma_text, n);
      auto m = app.got_subcommand(cmd_nmatrix) ? rankmatrix::n_matrix(s)
                                               : rankmatrix::rank_matrix(s);
      if (format == "json")
        out << io::json_of(m).dump(2) << "\n";
      else if (format == "csv")
        out << io::format_matrix_csv(m);
      else
        out << io::format_matrix_grid(m);
    } else if (app.got_subcommand(cmd_validate)) {
      require_format(format, {"text", "json"});
      auto report = rankmatrix::validate(io::parse_matrix(matrix_text));
      if (format == "json")
        out << io::json_of(report).dump(2) << "\n";
      else
        out << io::format_validity_text(report);
    } else if (app.got_subcommand(cmd_dim)) {
      require_format(format, {"text", "json"});
      const int d = involutions::orbit_dim(io::parse_involution(sigma_text, n));
      if (format == "json")
        out << io::json{{"dim", d}}.dump(2) << "\n";
      else
        out << d << "\n";
    } else if (app.got_subcommand(cmd_order)) {
      require_format(format, {"text", "json"});
      auto lhs = io::parse_involution(lhs_text, n);
      auto rhs = io::parse_involution(rhs_text, n);
      const bool le = rankmatrix::leq(rankmatrix::rank_matrix(lhs),
                                      rankmatrix::rank_matrix(rhs));
      if (format == "json")
        out << io::json{{"leq", le}}.dump(2) << "\n";
      else
        out << (le ? "true" : "false") << "\n";
    } else if (app.got_subcommand(cmd_closure)) {
      require_format(format, {"text", "json"});
      auto closure =
          intersections::closure_set(io::parse_involution(sigma_text, n));
      if (format == "json") {
        io::json arr = io::json::array();
        for (const auto& s : closure) arr.push_back(io::json_of(s));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& s : closure) out << io::format_involution(s) << "\n";
      }
    } else if (app.got_subcommand(cmd_intersect)) {
      require_format(format, {"text", "json"});
      intersections::IntersectionReport rep =
          as_tableaux
              ? intersections::intersect(io::parse_tableau(left_text),
                                         io::parse_tableau(right_text))
              : intersections::intersect(io::parse_involution(left_text, n),
                                         io::parse_involution(right_text, n));
      if (format == "json")
        out << io::json_of(rep).dump(2) << "\n";
      else
        out << io::format_intersection_text(rep);
    } else if (app.got_subcommand(cmd_table)) {
      require_format(format, {"text", "json", "csv"});
      auto table = intersections::pairwise_table(n, k);
      if (format == "json")
        out << io::json_of(table).dump(2) << "\n";
      else if (format == "csv")
        out << io::format_table_csv(table);
      else
        out << io::format_table_text(table);
    } else if (app.got_subcommand(cmd_cell)) {
      require_format(format, {"text", "json"});
      auto t = io::parse_standard_tableau(tableau_text);
      auto words = rscells::cell(t);
      if (format == "json") {
        io::json arr = io::json::array();
        for (const auto& w : words) arr.push_back(w.one_line());
        out << io::json{{"base", io::json_of(t)}, {"words", arr}}.dump(2)
            << "\n";
      } else {
        for (const auto& w : words) out << io::format_permutation(w) << "\n";
      }
    } else if (app.got_subcommand(cmd_cellgraph)) {
      require_format(format, {"text", "json", "dot"});
      auto g = rscells::cell_graph(io::parse_standard_tableau(tableau_text));
      if (format == "json")
        out << io::json_of(g).dump(2) << "\n";
      else if (format == "dot")
        out << io::cell_graph_dot(g);
      else
        out << cli_detail::format_cell_graph_text(g);
    } else if (app.got_subcommand(cmd_codim1)) {
      require_format(format, {"text", "json", "dot"});
      auto table = intersections::pairwise_table(n, k);
      if (format == "json")
        out << io::json_of(table).dump(2) << "\n";
      else if (format == "dot")
        out << io::codim1_graph_dot(table);
      else
        out << cli_detail::format_codim1_text(table);
    } else if (app.got_subcommand(cmd_ec)) {
      require_format(format, {"text", "json"});
      auto rep = rscells::edge_vs_codim(n, k);
      if (format == "json")
        out << io::json_of(rep).dump(2) << "\n";
      else
        out << io::format_edge_codim_text(rep);
    } else if (app.got_subcommand(cmd_verify)) {
      require_format(format, {"text", "json"});
      auto results = verify(n_max, suite, unsafe_no_cap);
      if (format == "json") {
        io::json arr = io::json::array();
        for (const auto& r : results) arr.push_back(cli_detail::json_of(r));
        out << arr.dump(2) << "\n";
      } else {
        out << cli_detail::format_verify_text(results);
      }
      for (const auto& r : results)
        if (!r.failures.empty()) return 3;
    }
  } catch (const orbitlattice::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const orbitlattice::DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace orbitlattice::cli
