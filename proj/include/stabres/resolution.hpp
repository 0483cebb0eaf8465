#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabres/interval_topology.hpp"
#include "stabres/poset.hpp"
#include "stabres/prime_field.hpp"
#include "stabres/report.hpp"

namespace stabres {

// One nonzero matrix entry of a differential: coefficient (always +-1 here)
// times a monomial multiplier.
struct DiffEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int coeff = 0;
  Monomial mono;
};

struct Differential {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<DiffEntry> entries;  // sorted by (col, row)
};

// The homogenized complex F: free multigraded modules with one basis element
// per admissible symbol, graded by eta.  basis[i] lists the poset ids of the
// symbols with |I| = i-1, in canonical order; basis[0] is the single unit
// basis element of F_0 (no symbol attached).
struct FreeComplex {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::size_t>> basis;
  std::vector<std::vector<Multidegree>> basis_mdeg;
  std::vector<Differential> diffs;  // diffs[i]: F_i -> F_{i-1}, i >= 1; diffs[0] unused

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

// Cover-driven builder: one entry per cover edge of the poset, with the
// closed-form sign (-1)^(p + [m != n]) and the monomial x^(eta gap).
FreeComplex build_resolution(const SymbolPoset& P);

// Symbol-driven builder: the classical Eliahou-Kervaire differential, two
// signed sums over the positions of I, inadmissible targets dropped and
// coinciding targets merged.  Kept as an independent code path; equality
// with build_resolution is a test, not an assumption.
FreeComplex build_resolution_ek(const SymbolPoset& P);

// d o d == 0, computed exactly over the integers on (coefficient, monomial)
// pairs.
bool verify_complex(const FreeComplex& F);

// No unit entries: every nonzero coefficient carries a non-constant monomial.
bool verify_minimal(const FreeComplex& F);

// Componentwise upper corner of the verification box: one plus the largest
// eta coordinate over all basis elements.
Multidegree bounding_box(const FreeComplex& F);

std::vector<Multidegree> box_degrees(const Multidegree& corner);

enum class Depth { quick, full, exhaustive };

// Degrees examined by exactness/acyclicity/oracle checks at a given depth:
// quick uses the basis multidegrees, full the whole box, exhaustive the box
// plus deterministic random degrees outside it.
std::vector<Multidegree> degrees_for_depth(const FreeComplex& F, Depth depth,
                                           std::uint64_t seed, std::size_t external = 24);

// Exactness of  F(a) -> (R/N)(a) -> 0  at every requested multidegree:
// the slice complexes over Z/p must have vanishing homology everywhere.
CheckReport verify_exact(const MonomialIdeal& N, const FreeComplex& F, const PrimeField& Fp,
                         const std::vector<Multidegree>& degrees);

struct BettiTable {
  // (homological degree, multidegree) -> count and (homological degree,
  // total degree) -> count; total is the coarsening of graded.
  std::map<std::pair<std::size_t, std::vector<Exponent>>, std::size_t> graded;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> total;
};

BettiTable betti_table(const FreeComplex& F);

// Macaulay2-style diagram: columns are homological degrees, rows are the
// degree slopes j - i.
std::string betti_text(const BettiTable& B);

}  // namespace stabres
