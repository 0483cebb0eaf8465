#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "stabres/poset.hpp"
#include "stabres/prime_field.hpp"

namespace stabres {

// Sparse matrix with entries in {-1, +1}; rows index (k-1)-faces, columns
// index k-faces.
struct SignedBoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, int>> entries;
};

// Reduced chain complex  C_-1 <- C_0 <- ... <- C_top.
// dims[k+1] is dim C_k (so dims[0] is dim C_-1, usually 1 for the empty
// face); boundaries[k] maps C_k to C_{k-1}.
struct ReducedChainComplex {
  std::vector<std::size_t> dims;
  std::vector<SignedBoundaryMatrix> boundaries;
};

// Sign of the permutation sorting |l_1|, .., |l_q| increasingly, times the
// sign of the product of the labels.  Input is the nonzero label sequence of
// a maximal dual chain, read top-down, with the trailing 0 removed.
int chain_sign(const std::vector<int>& labels);

// The order complex of the open interval below `hi`: vertices are the
// symbols strictly between the bottom and `hi`; facets are the maximal
// chains, listed top-down.
struct OrderComplexInterval {
  std::size_t top = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> facets;
};

OrderComplexInterval order_complex(const SymbolPoset& P, std::size_t hi);

// The basic cycle f(I,m): every facet of the open dual interval appears once
// with its chain sign.  For an atom the cycle is the empty simplex with
// coefficient +1 (terms holds a single empty chain).
struct CycleTerm {
  std::vector<std::size_t> chain;  // top-down vertex ids
  int sign = 1;
};
struct BasicCycle {
  std::size_t owner = 0;
  std::vector<CycleTerm> terms;
};

BasicCycle basic_cycle(const SymbolPoset& P, std::size_t id);

// Applies the reduced simplicial boundary to f(I,m) and checks that it
// vanishes; also rejects any face larger than |I| vertices.
bool verify_cycle(const SymbolPoset& P, std::size_t id);

// Full reduced chain complex of the order complex (all chains, plus the
// empty face), for homology rank computations.
ReducedChainComplex order_complex_chain_complex(const SymbolPoset& P, std::size_t hi);

// Reduced Betti numbers per degree, index 0 holding dim -1.  Throws if
// consecutive boundaries do not compose to zero.
std::vector<std::size_t> reduced_homology_ranks(const ReducedChainComplex& C,
                                                const PrimeField& F);

// Boundary of the signed facet sum over the half-closed dual interval below
// `hi` with apex `lo`, expressed as a multiple of the basic cycle f at `lo`.
// Requires lo to be covered by hi; throws StructuralError if the boundary is
// not proportional.  The bottom edge returns +1 (augmentation coefficient).
int cone_boundary_coefficient(const SymbolPoset& P, std::size_t hi, std::size_t lo);

// The closed-form coefficient (-1)^(p + [m != n]) for a cover pair, +1 on
// bottom edges; what the cone boundary must reproduce.
int expected_cover_sign(const SymbolPoset& P, std::size_t hi, std::size_t lo);

}  // namespace stabres
