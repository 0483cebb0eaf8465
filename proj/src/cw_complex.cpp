#include "stabres/cw_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stabres {

std::size_t GradedCWComplex::cell_count() const {
  std::size_t n = 0;
  for (std::size_t k = 1; k < cells_by_dim.size(); ++k) n += cells_by_dim[k].size();
  return n;
}

GradedCWComplex build_cw(const SymbolPoset& P) {
  GradedCWComplex X;
  X.cells_by_dim.resize(P.max_rank() + 1);
  for (std::size_t r = 0; r <= P.max_rank(); ++r) X.cells_by_dim[r] = P.ids_of_rank(r);
  X.grading.reserve(P.size());
  for (std::size_t id = 0; id < P.size(); ++id) X.grading.push_back(P.eta(id));

  for (std::size_t k = 1; k < X.cells_by_dim.size(); ++k) {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < X.cells_by_dim[k - 1].size(); ++i)
      pos[X.cells_by_dim[k - 1][i]] = i;
    SignedBoundaryMatrix B;
    B.rows = X.cells_by_dim[k - 1].size();
    B.cols = X.cells_by_dim[k].size();
    for (std::size_t col = 0; col < X.cells_by_dim[k].size(); ++col) {
      const std::size_t hi = X.cells_by_dim[k][col];
      for (std::size_t lo : P.covers_below(hi))
        B.entries.emplace_back(pos.at(lo), col, cone_boundary_coefficient(P, hi, lo));
    }
    std::sort(B.entries.begin(), B.entries.end(),
              [](const auto& a, const auto& b) {
                return std::tie(std::get<1>(a), std::get<0>(a)) <
                       std::tie(std::get<1>(b), std::get<0>(b));
              });
    X.incidence.push_back(std::move(B));
  }
  return X;
}

CheckReport verify_cellular(const SymbolPoset& P, const FreeComplex& F,
                            const GradedCWComplex& X) {
  CheckReport rep("cellular");

  // condition 1: rank F_i equals the number of (i-1)-cells
  const std::size_t levels = std::max(F.ranks.size(), X.cells_by_dim.size());
  for (std::size_t i = 0; i < levels; ++i) {
    const std::size_t r = i < F.ranks.size() ? F.ranks[i] : 0;
    const std::size_t c = i < X.cells_by_dim.size() ? X.cells_by_dim[i].size() : 0;
    ++rep.checked;
    if (r != c)
      rep.fail("rank F_" + std::to_string(i) + " = " + std::to_string(r) + " but there are " +
               std::to_string(c) + " cells of dimension " + std::to_string(static_cast<int>(i) - 1));
  }
  if (!rep.pass) return rep;

  // condition 2: basis multidegrees agree with the cell grading
  for (std::size_t i = 1; i < F.basis.size(); ++i) {
    for (std::size_t j = 0; j < F.basis[i].size(); ++j) {
      ++rep.checked;
      if (F.basis[i][j] != X.cells_by_dim[i][j]) {
        rep.fail("basis/cell order mismatch at F_" + std::to_string(i) + "[" +
                 std::to_string(j) + "]");
        continue;
      }
      if (!(F.basis_mdeg[i][j] == X.grading[F.basis[i][j]]))
        rep.fail("multidegree mismatch for " + P.symbol_string(F.basis[i][j]));
    }
  }

  // condition 3: for each pair of cells the differential entry must be
  // exactly c_{e,e'} x^(eta(e) - eta(e')); entries on either side only
  for (std::size_t i = 1; i < F.diffs.size(); ++i) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<int, Monomial>> from_res;
    for (const DiffEntry& e : F.diffs[i].entries)
      from_res[{e.row, e.col}] = {e.coeff, e.mono};
    std::map<std::pair<std::size_t, std::size_t>, int> from_cw;
    for (const auto& [r, c, v] : X.incidence[i - 1].entries) from_cw[{r, c}] = v;

    for (const auto& [rc, cm] : from_res) {
      ++rep.checked;
      auto it = from_cw.find(rc);
      if (it == from_cw.end()) {
        rep.fail("differential entry without incidence at F_" + std::to_string(i) + " (" +
                 std::to_string(rc.first) + "," + std::to_string(rc.second) + ")");
        continue;
      }
      if (it->second != cm.first)
        rep.fail("coefficient mismatch at F_" + std::to_string(i) + " (" +
                 std::to_string(rc.first) + "," + std::to_string(rc.second) + "): " +
                 std::to_string(cm.first) + " vs incidence " + std::to_string(it->second));
      const std::size_t hi = F.basis[i][rc.second];
      const std::size_t lo = i == 1 ? P.bottom() : F.basis[i - 1][rc.first];
      const Monomial gap = quotient(X.grading[hi], X.grading[lo]);
      if (!(gap == cm.second))
        rep.fail("monomial is not the multidegree gap at F_" + std::to_string(i) + " (" +
                 std::to_string(rc.first) + "," + std::to_string(rc.second) + ")");
    }
    for (const auto& [rc, v] : from_cw) {
      if (from_res.count(rc)) continue;
      rep.fail("incidence entry without differential at F_" + std::to_string(i) + " (" +
               std::to_string(rc.first) + "," + std::to_string(rc.second) + ")");
    }
  }
  return rep;
}

CheckReport verify_subcomplex_acyclicity(const GradedCWComplex& X, const PrimeField& Fp,
                                         const std::vector<Multidegree>& degrees) {
  CheckReport rep("subcomplex-acyclicity");
  for (const Multidegree& a : degrees) {
    // slice[k][orig index] = index within the subcomplex, SIZE_MAX when the
    // cell is not below a
    std::vector<std::vector<std::size_t>> slice(X.cells_by_dim.size());
    std::vector<std::size_t> counts(X.cells_by_dim.size(), 0);
    bool any = false;
    for (std::size_t k = 0; k < X.cells_by_dim.size(); ++k) {
      slice[k].assign(X.cells_by_dim[k].size(), SIZE_MAX);
      for (std::size_t i = 0; i < X.cells_by_dim[k].size(); ++i) {
        if (!divides(X.grading[X.cells_by_dim[k][i]], a)) continue;
        slice[k][i] = counts[k]++;
        if (k >= 1) any = true;
      }
    }
    if (!any) continue;  // no actual cell below a; nothing to check
    ++rep.checked;

    ReducedChainComplex C;
    C.dims = counts;
    for (std::size_t k = 1; k < slice.size(); ++k) {
      SignedBoundaryMatrix B;
      B.rows = counts[k - 1];
      B.cols = counts[k];
      for (const auto& [r, c, v] : X.incidence[k - 1].entries) {
        if (slice[k][c] == SIZE_MAX) continue;
        if (slice[k - 1][r] == SIZE_MAX)
          throw StructuralError("subcomplex is not face-closed; grading is not monotone");
        B.entries.emplace_back(slice[k - 1][r], slice[k][c], v);
      }
      C.boundaries.push_back(std::move(B));
    }
    std::vector<std::size_t> h = reduced_homology_ranks(C, Fp);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      std::ostringstream os;
      os << "subcomplex at (";
      for (std::size_t i = 0; i < a.var_count(); ++i) os << (i ? "," : "") << a.exponents()[i];
      os << ") has reduced homology of rank " << h[k] << " in dimension "
         << static_cast<long long>(k) - 1;
      rep.fail(os.str());
    }
  }
  return rep;
}

std::string cw_dot(const SymbolPoset& P, const GradedCWComplex& X) {
  std::ostringstream os;
  os << "digraph cw {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < X.cells_by_dim.size(); ++k) {
    for (std::size_t id : X.cells_by_dim[k]) {
      os << "  c" << id << " [label=\"" << P.symbol_string(id) << " dim="
         << static_cast<int>(k) - 1 << " mdeg=(";
      const Multidegree& a = X.grading[id];
      for (std::size_t i = 0; i < a.var_count(); ++i) os << (i ? "," : "") << a.exponents()[i];
      os << ")\"];\n";
    }
  }
  for (std::size_t k = 1; k < X.cells_by_dim.size(); ++k)
    for (const auto& [r, c, v] : X.incidence[k - 1].entries)
      os << "  c" << X.cells_by_dim[k - 1][r] << " -> c" << X.cells_by_dim[k][c]
         << " [label=\"" << v << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace stabres
