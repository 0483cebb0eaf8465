#pragma once

#include "stabres/resolution.hpp"

namespace testutil {

// Taylor complex on the minimal generators: basis elements are generator
// subsets graded by lcm.  A valid free complex, but not minimal whenever two
// subset lcms coincide along a face; used as the non-minimal control.
inline stabres::FreeComplex taylor_complex(const stabres::MonomialIdeal& N) {
  using namespace stabres;
  const std::size_t r = N.generator_count();
  FreeComplex F;
  F.ranks.assign(r + 1, 0);
  F.basis.assign(r + 1, {});
  F.basis_mdeg.assign(r + 1, {});
  F.diffs.assign(r + 1, Differential{});

  std::vector<std::vector<std::size_t>> masks(r + 1);
  std::vector<std::size_t> index(std::size_t(1) << r, 0);
  std::vector<Monomial> lcm_of(std::size_t(1) << r, Monomial(N.var_count()));
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    Monomial l(N.var_count());
    std::size_t sz = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t(1) << i)) {
        l = lcm(l, N.generator(i));
        ++sz;
      }
    lcm_of[mask] = l;
    index[mask] = masks[sz].size();
    masks[sz].push_back(mask);
  }
  for (std::size_t i = 0; i <= r; ++i) {
    F.ranks[i] = masks[i].size();
    for (std::size_t mask : masks[i]) F.basis_mdeg[i].push_back(lcm_of[mask]);
  }
  for (std::size_t i = 1; i <= r; ++i) {
    F.diffs[i].rows = F.ranks[i - 1];
    F.diffs[i].cols = F.ranks[i];
    for (std::size_t col = 0; col < masks[i].size(); ++col) {
      const std::size_t mask = masks[i][col];
      int sign = 1;
      for (std::size_t v = 0; v < r; ++v) {
        if (!(mask & (std::size_t(1) << v))) continue;
        const std::size_t sub = mask & ~(std::size_t(1) << v);
        F.diffs[i].entries.push_back(DiffEntry{index[sub], col, sign,
                                               quotient(lcm_of[mask], lcm_of[sub])});
        sign = -sign;
      }
    }
  }
  return F;
}

}  // namespace testutil
