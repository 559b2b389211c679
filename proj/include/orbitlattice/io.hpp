#pragma once

// Text, JSON, DOT and CSV encodings for everything the CLI emits, plus the
// strict parsers for command-line inputs.  Input syntax:
//   tableau   "1,3,5|2,4"   columns separated by '|' (general shapes allowed,
//                           a single column may omit the bar)
//   cycles    "(1,3)(2,5)"  canonicalized on parse; "()" is the identity
//   matrix    "0,1;0,0"     rows separated by ';', entries by ','
// Emission is deterministic: equal values give byte-identical documents.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlattice/errors.hpp"
#include "orbitlattice/intersections.hpp"
#include "orbitlattice/rs_cells.hpp"

namespace orbitlattice::io {

using json = nlohmann::json;
using involutions::Involution;
using rankmatrix::UpperMatrix;
using tableaux::StandardTableau;
using tableaux::TwoColumnTableau;

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty integer token");
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (...) {
    throw ParseError("not an integer: '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("not an integer: '" + t + "'");
  return v;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

// ---------- text encodings ----------

inline std::string format_tableau(const StandardTableau& t) {
  const auto cols = t.columns();
  std::string out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out += '|';
    out += detail::join_ints(cols[c]);
  }
  return out;
}

inline std::string format_tableau(const TwoColumnTableau& t) {
  std::string out = detail::join_ints(t.col1());
  if (t.k() > 0) out += '|' + detail::join_ints(t.col2());
  return out;
}

// Any number of columns; used for cell/cellgraph inputs of general shape.
inline StandardTableau parse_standard_tableau(const std::string& text) {
  auto parts = detail::split(text, '|');
  if (parts.size() > 1 && detail::trim(parts.back()).empty())
    parts.pop_back();  // tolerate a trailing bar
  std::vector<std::vector<int>> cols;
  for (const auto& part : parts) {
    auto col = detail::parse_int_list(part);
    if (col.empty()) throw ParseError("empty tableau column");
    cols.push_back(std::move(col));
  }
  if (cols.empty()) throw ParseError("empty tableau");
  for (std::size_t c = 1; c < cols.size(); ++c)
    if (cols[c].size() > cols[c - 1].size())
      throw DomainError("column lengths must be weakly decreasing");
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < cols[0].size(); ++r) {
    std::vector<int> row;
    for (const auto& col : cols)
      if (r < col.size()) row.push_back(col[r]);
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

inline TwoColumnTableau parse_tableau(const std::string& text) {
  auto parts = detail::split(text, '|');
  if (parts.size() > 2) throw ParseError("expected at most two columns");
  auto col1 = detail::parse_int_list(parts[0]);
  auto col2 = parts.size() == 2 ? detail::parse_int_list(parts[1]) : std::vector<int>{};
  return TwoColumnTableau(std::move(col1), std::move(col2));
}

inline std::string format_involution(const Involution& s) {
  if (s.is_identity()) return "()";
  std::string out;
  for (auto [i, j] : s.cycles())
    out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
  return out;
}

inline Involution parse_involution(const std::string& text, int n) {
  const std::string t = detail::trim(text);
  if (t == "()") return Involution::identity(n);
  std::vector<std::pair<int, int>> cycles;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[pos]))) {
      ++pos;
      continue;
    }
    if (t[pos] != '(') throw ParseError("expected '(' in cycle list");
    const auto close = t.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in cycle list");
    const auto body = detail::split(t.substr(pos + 1, close - pos - 1), ',');
    if (body.size() != 2) throw ParseError("cycle must have exactly two entries");
    cycles.emplace_back(detail::parse_int(body[0]), detail::parse_int(body[1]));
    pos = close + 1;
  }
  if (cycles.empty()) throw ParseError("empty cycle list (use '()' for the identity)");
  return Involution(n, std::move(cycles));
}

inline std::string format_permutation(const rscells::Permutation& w) {
  return detail::join_ints(w.one_line());
}

inline UpperMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : detail::split(text, ';'))
    rows.push_back(detail::parse_int_list(row));
  return UpperMatrix(std::move(rows));
}

inline std::string format_matrix_csv(const UpperMatrix& m) {
  std::string out;
  for (int i = 1; i <= m.n(); ++i) {
    if (i > 1) out += ';';
    for (int j = 1; j <= m.n(); ++j) {
      if (j > 1) out += ',';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

// Aligned full-square grid, one row per line.
inline std::string format_matrix_grid(const UpperMatrix& m) {
  std::size_t width = 1;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j)
      width = std::max(width, std::to_string(m.at(i, j)).size());
  std::string out;
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = 1; j <= m.n(); ++j) {
      const std::string e = std::to_string(m.at(i, j));
      if (j > 1) out += ' ';
      out += std::string(width - e.size(), ' ') + e;
    }
    out += '\n';
  }
  return out;
}

// ---------- JSON encodings ----------

inline json json_of(const TwoColumnTableau& t) {
  return json{{"col1", t.col1()}, {"col2", t.col2()}};
}

inline TwoColumnTableau tableau_from_json(const json& j) {
  return TwoColumnTableau(j.at("col1").get<std::vector<int>>(),
                          j.at("col2").get<std::vector<int>>());
}

inline json json_of(const StandardTableau& t) {
  return json{{"columns", t.columns()}};
}

inline StandardTableau standard_tableau_from_json(const json& j) {
  const auto cols = j.at("columns").get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> rows;
  if (!cols.empty()) {
    for (std::size_t r = 0; r < cols[0].size(); ++r) {
      std::vector<int> row;
      for (const auto& col : cols)
        if (r < col.size()) row.push_back(col[r]);
      rows.push_back(std::move(row));
    }
  }
  return StandardTableau(std::move(rows));
}

inline json json_of(const Involution& s) {
  json cycles = json::array();
  for (auto [i, j] : s.cycles()) cycles.push_back(json::array({i, j}));
  return json{{"n", s.n()}, {"cycles", cycles}};
}

inline Involution involution_from_json(const json& j) {
  std::vector<std::pair<int, int>> cycles;
  for (const auto& c : j.at("cycles")) cycles.emplace_back(c.at(0), c.at(1));
  return Involution(j.at("n").get<int>(), std::move(cycles));
}

inline json json_of(const UpperMatrix& m) { return json(m.rows()); }

inline UpperMatrix matrix_from_json(const json& j) {
  return UpperMatrix(j.get<std::vector<std::vector<int>>>());
}

inline json json_of(const rankmatrix::ValidityReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back(json{{"condition", rankmatrix::to_string(viol.cond)},
                     {"i", viol.i},
                     {"j", viol.j}});
  return json{{"valid", r.valid}, {"violations", v}};
}

inline rankmatrix::Cond cond_from_string(const std::string& s) {
  using rankmatrix::Cond;
  for (Cond c : {Cond::ii_row, Cond::ii_col, Cond::iiia, Cond::iiib, Cond::iiic})
    if (rankmatrix::to_string(c) == s) return c;
  throw ParseError("unknown condition tag: " + s);
}

inline rankmatrix::ValidityReport validity_from_json(const json& j) {
  rankmatrix::ValidityReport r;
  r.valid = j.at("valid").get<bool>();
  for (const auto& v : j.at("violations"))
    r.violations.push_back({cond_from_string(v.at("condition").get<std::string>()),
                            v.at("i").get<int>(), v.at("j").get<int>()});
  return r;
}

inline json json_of(const intersections::Component& c) {
  return json{{"cycles", json_of(c.sigma).at("cycles")},
              {"dim", c.dim},
              {"codim", c.codim},
              {"rank", c.rank}};
}

inline json json_of(const intersections::IntersectionReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(json_of(c));
  return json{{"left", json_of(r.left)},     {"right", json_of(r.right)},
              {"n", r.n},                    {"meet", json_of(r.meet)},
              {"irreducible", r.irreducible}, {"components", comps},
              {"ambient_dim", r.ambient_dim}, {"same_rank", r.same_rank}};
}

inline intersections::IntersectionReport intersection_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  auto comp_sigma = [&](const json& c) {
    std::vector<std::pair<int, int>> cycles;
    for (const auto& p : c.at("cycles")) cycles.emplace_back(p.at(0), p.at(1));
    return Involution(n, std::move(cycles));
  };
  intersections::IntersectionReport r{involution_from_json(j.at("left")),
                                      involution_from_json(j.at("right")),
                                      n,
                                      matrix_from_json(j.at("meet")),
                                      j.at("irreducible").get<bool>(),
                                      {},
                                      j.at("ambient_dim").get<int>(),
                                      j.at("same_rank").get<bool>()};
  for (const auto& c : j.at("components"))
    r.components.push_back({comp_sigma(c), c.at("dim").get<int>(),
                            c.at("codim").get<int>(), c.at("rank").get<int>()});
  return r;
}

inline json json_of(const intersections::PairwiseTable& t) {
  json tabs = json::array();
  for (const auto& tab : t.tableaux) tabs.push_back(json_of(tab));
  json cells = json::array();
  for (const auto& row : t.cells) {
    json jr = json::array();
    for (const auto& c : row)
      jr.push_back(json{{"codim", c.codim},
                        {"irreducible", c.irreducible},
                        {"components", c.component_count}});
    cells.push_back(jr);
  }
  return json{{"n", t.n}, {"k", t.k}, {"tableaux", tabs}, {"cells", cells}};
}

inline intersections::PairwiseTable pairwise_from_json(const json& j) {
  intersections::PairwiseTable t{j.at("n").get<int>(), j.at("k").get<int>(), {}, {}};
  for (const auto& tab : j.at("tableaux")) t.tableaux.push_back(tableau_from_json(tab));
  for (const auto& row : j.at("cells")) {
    std::vector<intersections::PairwiseCell> r;
    for (const auto& c : row)
      r.push_back({c.at("codim").get<int>(), c.at("irreducible").get<bool>(),
                   c.at("components").get<int>()});
    t.cells.push_back(std::move(r));
  }
  return t;
}

inline json json_of(const rscells::CellGraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back(json_of(v));
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"a", e.a}, {"b", e.b}, {"label", e.label}});
  return json{{"base", json_of(g.base)}, {"vertices", verts}, {"edges", edges}};
}

inline rscells::CellGraph cell_graph_from_json(const json& j) {
  rscells::CellGraph g{standard_tableau_from_json(j.at("base")), {}, {}};
  for (const auto& v : j.at("vertices")) g.vertices.push_back(standard_tableau_from_json(v));
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("label").get<int>()});
  return g;
}

inline json json_of(const rscells::RootPositionSet& r) {
  json pos = json::array();
  for (auto [i, j] : r.positions) pos.push_back(json::array({i, j}));
  return json{{"w", r.w.one_line()}, {"positions", pos}};
}

inline rscells::RootPositionSet root_positions_from_json(const json& j) {
  rscells::RootPositionSet r{rscells::Permutation(j.at("w").get<std::vector<int>>()), {}};
  for (const auto& p : j.at("positions")) r.positions.emplace_back(p.at(0), p.at(1));
  return r;
}

inline json json_of(const rscells::EdgeCodimReport& r) {
  json tabs = json::array();
  for (const auto& tab : r.tableaux) tabs.push_back(json_of(tab));
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back(json{{"a", p.a},
                         {"b", p.b},
                         {"codim", p.codim},
                         {"joined", p.joined},
                         {"discrepancy", p.discrepancy}});
  return json{{"n", r.n},
              {"k", r.k},
              {"tableaux", tabs},
              {"pairs", pairs},
              {"discrepancies", r.discrepancy_count}};
}

inline rscells::EdgeCodimReport edge_codim_from_json(const json& j) {
  rscells::EdgeCodimReport r{j.at("n").get<int>(), j.at("k").get<int>(), {}, {},
                             j.at("discrepancies").get<int>()};
  for (const auto& tab : j.at("tableaux")) r.tableaux.push_back(tableau_from_json(tab));
  for (const auto& p : j.at("pairs"))
    r.pairs.push_back({p.at("a").get<int>(), p.at("b").get<int>(),
                       p.at("codim").get<int>(), p.at("joined").get<bool>(),
                       p.at("discrepancy").get<bool>()});
  return r;
}

// ---------- DOT ----------

inline std::string cell_graph_dot(const rscells::CellGraph& g) {
  std::string out = "graph cellgraph {\n";
  for (const auto& v : g.vertices) out += "  \"" + format_tableau(v) + "\";\n";
  for (const auto& e : g.edges)
    out += "  \"" + format_tableau(g.vertices[static_cast<std::size_t>(e.a)]) +
           "\" -- \"" + format_tableau(g.vertices[static_cast<std::size_t>(e.b)]) +
           "\" [label=" + std::to_string(e.label) + "];\n";
  out += "}\n";
  return out;
}

inline std::string codim1_graph_dot(const intersections::PairwiseTable& t) {
  std::string out = "graph codim1 {\n";
  for (const auto& tab : t.tableaux) out += "  \"" + format_tableau(tab) + "\";\n";
  for (std::size_t a = 0; a < t.tableaux.size(); ++a)
    for (std::size_t b = a + 1; b < t.tableaux.size(); ++b)
      if (t.cells[a][b].codim == 1)
        out += "  \"" + format_tableau(t.tableaux[a]) + "\" -- \"" +
               format_tableau(t.tableaux[b]) + "\";\n";
  out += "}\n";
  return out;
}

// ---------- text rendering of reports ----------

inline std::string format_validity_text(const rankmatrix::ValidityReport& r) {
  if (r.valid) return "valid\n";
  std::string out = "invalid\n";
  for (const auto& v : r.violations)
    out += rankmatrix::to_string(v.cond) + " at (" + std::to_string(v.i) + "," +
           std::to_string(v.j) + ")\n";
  return out;
}

inline std::string format_intersection_text(const intersections::IntersectionReport& r) {
  std::string out;
  out += "left:      " + format_involution(r.left) + "\n";
  out += "right:     " + format_involution(r.right) + "\n";
  out += "n:         " + std::to_string(r.n) + "\n";
  out += "meet:\n" + format_matrix_grid(r.meet);
  out += std::string("irreducible: ") + (r.irreducible ? "yes" : "no") + "\n";
  out += "ambient_dim: " + std::to_string(r.ambient_dim) + "\n";
  if (!r.same_rank) out += "note: inputs have different ranks\n";
  out += "components (" + std::to_string(r.components.size()) + "):\n";
  for (const auto& c : r.components)
    out += "  " + format_involution(c.sigma) + "  dim " + std::to_string(c.dim) +
           "  codim " + std::to_string(c.codim) + "  rank " + std::to_string(c.rank) + "\n";
  return out;
}

inline std::string format_table_text(const intersections::PairwiseTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.tableaux.size(); ++i)
    out += "T" + std::to_string(i + 1) + " = " + format_tableau(t.tableaux[i]) + "\n";
  out += "cell = codim, *m marks a reducible intersection with m components\n";
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 2;
  for (std::size_t a = 0; a < t.tableaux.size(); ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < t.tableaux.size(); ++b) {
      std::string c = std::to_string(t.cells[a][b].codim);
      if (!t.cells[a][b].irreducible)
        c += "*" + std::to_string(t.cells[a][b].component_count);
      width = std::max(width, c.size());
      row.push_back(std::move(c));
    }
    cells.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < cells.size(); ++a) {
    out += "T" + std::to_string(a + 1) + (a + 1 < 10 ? " " : "") + ":";
    for (const auto& c : cells[a]) out += " " + std::string(width - c.size(), ' ') + c;
    out += "\n";
  }
  return out;
}

inline std::string format_table_csv(const intersections::PairwiseTable& t) {
  std::string out = "left,right,codim,irreducible,components\n";
  for (std::size_t a = 0; a < t.tableaux.size(); ++a)
    for (std::size_t b = 0; b < t.tableaux.size(); ++b)
      out += "\"" + format_tableau(t.tableaux[a]) + "\",\"" +
             format_tableau(t.tableaux[b]) + "\"," +
             std::to_string(t.cells[a][b].codim) + "," +
             (t.cells[a][b].irreducible ? "true" : "false") + "," +
             std::to_string(t.cells[a][b].component_count) + "\n";
  return out;
}

inline std::string format_edge_codim_text(const rscells::EdgeCodimReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.tableaux.size(); ++i)
    out += "T" + std::to_string(i + 1) + " = " + format_tableau(r.tableaux[i]) + "\n";
  for (const auto& p : r.pairs)
    out += "T" + std::to_string(p.a + 1) + " T" + std::to_string(p.b + 1) + ": codim " +
           std::to_string(p.codim) + ", " + (p.joined ? "joined" : "not joined") +
           (p.discrepancy ? "  <-- discrepancy" : "") + "\n";
  out += "discrepancies: " + std::to_string(r.discrepancy_count) + "\n";
  return out;
}

}  // namespace orbitlattice::io
