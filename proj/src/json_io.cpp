#include "stabres/json_io.hpp"

namespace stabres {

using nlohmann::json;

json ideal_json(const MonomialIdeal& N) {
  json j;
  j["format"] = 1;
  j["vars"] = N.var_names();
  json gens = json::array();
  json strings = json::array();
  for (std::size_t i = 0; i < N.generator_count(); ++i) {
    gens.push_back(N.generator(i).exponents());
    strings.push_back(N.generator_string(i));
  }
  j["gens"] = std::move(gens);
  j["gens_pretty"] = std::move(strings);
  return j;
}

json symbol_json(const SymbolPoset& P, std::size_t id) {
  const AdmissibleSymbol& s = P.symbol(id);
  json j;
  j["id"] = id;
  j["I"] = s.index_set;
  j["gen"] = s.gen;
  j["rank"] = s.rank();
  j["symbol"] = P.symbol_string(id);
  j["mdeg"] = P.eta(id).exponents();
  return j;
}

json hasse_json(const SymbolPoset& P) {
  json j;
  j["format"] = 1;
  j["vars"] = P.ideal().var_names();
  json nodes = json::array();
  for (std::size_t id = 0; id < P.size(); ++id) nodes.push_back(symbol_json(P, id));
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const CoverEdge& e : P.cover_edges())
    edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"label", e.label}});
  j["edges"] = std::move(edges);
  return j;
}

json resolution_json(const SymbolPoset& P, const FreeComplex& F) {
  json j;
  j["format"] = 1;
  j["vars"] = P.ideal().var_names();
  j["ranks"] = F.ranks;
  json basis = json::array();
  for (std::size_t i = 0; i < F.basis.size(); ++i) {
    json level = json::array();
    if (i == 0) {
      level.push_back({{"symbol", "1"}, {"mdeg", F.basis_mdeg[0][0].exponents()}});
    } else {
      for (std::size_t t = 0; t < F.basis[i].size(); ++t) {
        json b = symbol_json(P, F.basis[i][t]);
        b["monomial"] = format_monomial(P.eta_monomial(F.basis[i][t]), P.ideal().var_names());
        level.push_back(std::move(b));
      }
    }
    basis.push_back(std::move(level));
  }
  j["basis"] = std::move(basis);
  json diffs = json::array();
  for (std::size_t i = 1; i < F.diffs.size(); ++i) {
    json entries = json::array();
    for (const DiffEntry& e : F.diffs[i].entries)
      entries.push_back({e.row, e.col, e.coeff, e.mono.exponents()});
    diffs.push_back({{"degree", i},
                     {"rows", F.diffs[i].rows},
                     {"cols", F.diffs[i].cols},
                     {"entries", std::move(entries)}});
  }
  j["differentials"] = std::move(diffs);
  return j;
}

json betti_json(const BettiTable& B) {
  json j;
  j["format"] = 1;
  json graded = json::array();
  for (const auto& [key, cnt] : B.graded)
    graded.push_back({{"i", key.first}, {"mdeg", key.second}, {"count", cnt}});
  j["graded"] = std::move(graded);
  json total = json::array();
  for (const auto& [key, cnt] : B.total)
    total.push_back({{"i", key.first}, {"degree", key.second}, {"count", cnt}});
  j["total"] = std::move(total);
  return j;
}

json cw_json(const SymbolPoset& P, const GradedCWComplex& X) {
  json j;
  j["format"] = 1;
  j["vars"] = P.ideal().var_names();
  json cells = json::array();
  for (std::size_t k = 0; k < X.cells_by_dim.size(); ++k) {
    for (std::size_t id : X.cells_by_dim[k]) {
      json c = symbol_json(P, id);
      c["dim"] = static_cast<int>(k) - 1;
      cells.push_back(std::move(c));
    }
  }
  j["cells"] = std::move(cells);
  json grading = json::array();
  for (std::size_t id = 0; id < X.grading.size(); ++id)
    grading.push_back({{"cell", id}, {"mdeg", X.grading[id].exponents()}});
  j["grading"] = std::move(grading);
  json inc = json::array();
  for (std::size_t k = 1; k < X.cells_by_dim.size(); ++k) {
    json entries = json::array();
    for (const auto& [r, c, v] : X.incidence[k - 1].entries)
      entries.push_back({X.cells_by_dim[k][c], X.cells_by_dim[k - 1][r], v});
    inc.push_back({{"dim", static_cast<int>(k) - 1}, {"entries", std::move(entries)}});
  }
  j["incidence"] = std::move(inc);
  return j;
}

json report_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  j["findings"] = r.findings;
  return j;
}

json verification_json(const VerificationResult& v) {
  json j;
  j["format"] = 1;
  j["pass"] = v.all_pass();
  json reports = json::array();
  for (const CheckReport& r : v.reports) reports.push_back(report_json(r));
  j["reports"] = std::move(reports);
  return j;
}

}  // namespace stabres
