#include "stabres/koszul.hpp"

#include <algorithm>
#include <sstream>

#include "stabres/interval_topology.hpp"

namespace stabres {

int quotient_dim(const MonomialIdeal& N, const Multidegree& a) {
  return N.contains(a) ? 0 : 1;
}

std::vector<std::size_t> koszul_betti(const MonomialIdeal& N, const Multidegree& a,
                                      const PrimeField& F) {
  const std::size_t d = N.var_count();
  if (a.var_count() != d) throw DomainError("multidegree dimension mismatch");
  if (d >= 30) throw DomainError("too many variables for the Koszul slice oracle");

  // basis: subsets S (as bitmasks) with a - eps_S >= 0 and x^(a - eps_S)
  // outside the ideal; grouped by |S|
  const std::size_t nmask = std::size_t(1) << d;
  std::vector<std::size_t> index(nmask, SIZE_MAX);
  std::vector<std::vector<std::size_t>> by_size(d + 1);
  for (std::size_t mask = 0; mask < nmask; ++mask) {
    std::vector<Exponent> e = a.exponents();
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      if (e[i] == 0)
        ok = false;
      else
        --e[i];
    }
    if (!ok) continue;
    if (N.contains(Monomial(std::move(e)))) continue;
    const std::size_t sz = static_cast<std::size_t>(__builtin_popcountll(mask));
    index[mask] = by_size[sz].size();
    by_size[sz].push_back(mask);
  }

  ReducedChainComplex C;
  C.dims.push_back(0);  // no augmentation: plain homology of the slice
  for (std::size_t i = 0; i <= d; ++i) C.dims.push_back(by_size[i].size());
  C.boundaries.push_back(SignedBoundaryMatrix{0, by_size[0].size(), {}});
  for (std::size_t i = 1; i <= d; ++i) {
    SignedBoundaryMatrix B;
    B.rows = by_size[i - 1].size();
    B.cols = by_size[i].size();
    for (std::size_t col = 0; col < by_size[i].size(); ++col) {
      const std::size_t mask = by_size[i][col];
      int sign = 1;
      for (std::size_t v = 0; v < d; ++v) {
        if (!(mask & (std::size_t(1) << v))) continue;
        const std::size_t sub = mask & ~(std::size_t(1) << v);
        if (index[sub] != SIZE_MAX) B.entries.emplace_back(index[sub], col, sign);
        sign = -sign;
      }
    }
    C.boundaries.push_back(std::move(B));
  }
  std::vector<std::size_t> h = reduced_homology_ranks(C, F);
  return std::vector<std::size_t>(h.begin() + 1, h.end());  // H_0 .. H_d
}

CheckReport compare_betti(const MonomialIdeal& N, const FreeComplex& F, const PrimeField& Fp,
                          const std::vector<Multidegree>& degrees) {
  CheckReport rep("betti-oracle");
  const std::size_t d = N.var_count();
  for (const Multidegree& a : degrees) {
    ++rep.checked;
    std::vector<std::size_t> oracle = koszul_betti(N, a, Fp);
    std::vector<std::size_t> res(std::max(d + 1, F.basis_mdeg.size()), 0);
    for (std::size_t i = 0; i < F.basis_mdeg.size(); ++i)
      for (const Multidegree& b : F.basis_mdeg[i])
        if (b == a) ++res[i];
    oracle.resize(res.size(), 0);
    if (oracle != res) {
      std::ostringstream os;
      os << "betti mismatch at (";
      for (std::size_t i = 0; i < a.var_count(); ++i) os << (i ? "," : "") << a.exponents()[i];
      os << "): resolution (";
      for (std::size_t i = 0; i < res.size(); ++i) os << (i ? "," : "") << res[i];
      os << ") vs koszul (";
      for (std::size_t i = 0; i < oracle.size(); ++i) os << (i ? "," : "") << oracle[i];
      os << ")";
      rep.fail(os.str());
    }
  }
  return rep;
}

}  // namespace stabres
