#pragma once

#include <cstddef>
#include <vector>

#include "stabres/ideal.hpp"
#include "stabres/prime_field.hpp"
#include "stabres/report.hpp"
#include "stabres/resolution.hpp"

namespace stabres {

// 1 when x^a survives in R/N, 0 when x^a lies in the ideal.
int quotient_dim(const MonomialIdeal& N, const Multidegree& a);

// Multigraded Betti numbers of R/N at a single multidegree, computed as the
// homology of the Koszul complex slice over Z/p.  Independent of the
// resolution code path by construction: only divisibility tests and rank
// computations enter.
std::vector<std::size_t> koszul_betti(const MonomialIdeal& N, const Multidegree& a,
                                      const PrimeField& F);

// Ground-truth comparison: symbol counts of the resolution against Koszul
// homology dimensions at every requested multidegree.
CheckReport compare_betti(const MonomialIdeal& N, const FreeComplex& F, const PrimeField& Fp,
                          const std::vector<Multidegree>& degrees);

}  // namespace stabres
