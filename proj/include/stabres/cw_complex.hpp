#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabres/interval_topology.hpp"
#include "stabres/poset.hpp"
#include "stabres/prime_field.hpp"
#include "stabres/report.hpp"
#include "stabres/resolution.hpp"

namespace stabres {

// The regular CW complex whose face poset is the poset of admissible
// symbols.  Cells are the poset elements themselves (the bottom is the empty
// cell of dimension -1); incidence coefficients come from the honest cone
// boundary computation, not the closed form.
struct GradedCWComplex {
  // cells_by_dim[k+1] lists the poset ids of the k-cells, canonical order.
  std::vector<std::vector<std::size_t>> cells_by_dim;
  // incidence[k]: k-cells -> (k-1)-cells, k = 0 .. top dimension.
  std::vector<SignedBoundaryMatrix> incidence;
  std::vector<Multidegree> grading;  // by poset id

  int top_dimension() const { return static_cast<int>(cells_by_dim.size()) - 2; }
  std::size_t cell_count() const;  // excludes the empty cell
};

GradedCWComplex build_cw(const SymbolPoset& P);

// The three cellular-resolution conditions: ranks match cell counts, basis
// multidegrees match the grading, and every differential entry equals the
// incidence coefficient times the multidegree gap monomial (in both
// directions: no extra entries on either side).
CheckReport verify_cellular(const SymbolPoset& P, const FreeComplex& F,
                            const GradedCWComplex& X);

// Every subcomplex of cells with grading below a requested multidegree must
// have vanishing reduced homology; degrees with no cell below them are
// skipped.
CheckReport verify_subcomplex_acyclicity(const GradedCWComplex& X, const PrimeField& Fp,
                                         const std::vector<Multidegree>& degrees);

std::string cw_dot(const SymbolPoset& P, const GradedCWComplex& X);

}  // namespace stabres
