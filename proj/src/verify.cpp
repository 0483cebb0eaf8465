#include "stabres/verify.hpp"

#include "stabres/cw_complex.hpp"
#include "stabres/interval_topology.hpp"
#include "stabres/koszul.hpp"
#include "stabres/poset.hpp"

namespace stabres {

VerificationResult run_verification(const MonomialIdeal& N, const PrimeField& Fp,
                                    const VerifyOptions& opts) {
  VerificationResult out;

  CheckReport stab("stability");
  stab.checked = N.generator_count();
  if (auto v = stability_violation(N)) {
    stab.fail("generator " + N.generator_string(v->gen_index) + " with x_" +
              std::to_string(v->var) + " gives " + N.monomial_string(v->exchanged) +
              ", which is outside the ideal");
    out.reports.push_back(std::move(stab));
    return out;  // nothing downstream is defined
  }
  out.reports.push_back(std::move(stab));

  SymbolPoset P = SymbolPoset::build(N);
  out.reports.push_back(verify_el_shelling(P));
  out.reports.push_back(verify_diamond(P));

  // sphere property: reduced homology of each open interval is one copy of
  // the field in dimension |I| - 1
  CheckReport sphere("sphere");
  for (std::size_t id = 0; id < P.size(); ++id) {
    if (id == P.bottom()) continue;
    ++sphere.checked;
    std::vector<std::size_t> h = reduced_homology_ranks(order_complex_chain_complex(P, id), Fp);
    const std::size_t expect = P.rank(id) - 1;  // index of dim |I|-1 is (|I|-1)+1
    bool ok = true;
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != (k == expect ? 1u : 0u)) ok = false;
    if (h.size() <= expect || !ok)
      sphere.fail("interval below " + P.symbol_string(id) +
                  " does not have sphere homology");
  }
  out.reports.push_back(std::move(sphere));

  CheckReport cycle("cycle");
  for (std::size_t id = 0; id < P.size(); ++id) {
    if (id == P.bottom()) continue;
    ++cycle.checked;
    if (!verify_cycle(P, id))
      cycle.fail("basic cycle at " + P.symbol_string(id) + " has nonzero boundary");
  }
  out.reports.push_back(std::move(cycle));

  CheckReport cone("cone-coefficient");
  for (const CoverEdge& e : P.cover_edges()) {
    ++cone.checked;
    try {
      const int got = cone_boundary_coefficient(P, e.upper, e.lower);
      const int want = expected_cover_sign(P, e.upper, e.lower);
      if (got != want)
        cone.fail("cover " + P.symbol_string(e.lower) + " < " + P.symbol_string(e.upper) +
                  ": cone boundary " + std::to_string(got) + " vs closed form " +
                  std::to_string(want));
    } catch (const StructuralError& ex) {
      cone.fail(ex.what());
    }
  }
  out.reports.push_back(std::move(cone));

  FreeComplex F = build_resolution(P);

  CheckReport ident("differential-identity");
  {
    FreeComplex E = build_resolution_ek(P);
    ident.checked = F.diffs.size();
    for (std::size_t i = 1; i < F.diffs.size(); ++i) {
      const auto& A = F.diffs[i].entries;
      const auto& B = E.diffs[i].entries;
      bool same = A.size() == B.size();
      for (std::size_t t = 0; same && t < A.size(); ++t)
        same = A[t].row == B[t].row && A[t].col == B[t].col && A[t].coeff == B[t].coeff &&
               A[t].mono == B[t].mono;
      if (!same)
        ident.fail("cover-driven and symbol-driven differentials differ in degree " +
                   std::to_string(i));
    }
  }
  out.reports.push_back(std::move(ident));

  CheckReport cx("complex");
  cx.checked = F.diffs.size() >= 2 ? F.diffs.size() - 2 : 0;
  if (!verify_complex(F)) cx.fail("consecutive differentials do not compose to zero");
  out.reports.push_back(std::move(cx));

  CheckReport min("minimality");
  for (const Differential& D : F.diffs) min.checked += D.entries.size();
  if (!verify_minimal(F)) min.fail("a differential entry has a unit monomial");
  out.reports.push_back(std::move(min));

  const std::vector<Multidegree> degrees = degrees_for_depth(F, opts.depth, opts.seed,
                                                             opts.external);
  out.reports.push_back(verify_exact(N, F, Fp, degrees));
  out.reports.push_back(compare_betti(N, F, Fp, degrees));

  GradedCWComplex X = build_cw(P);
  out.reports.push_back(verify_cellular(P, F, X));
  out.reports.push_back(verify_subcomplex_acyclicity(X, Fp, degrees));

  return out;
}

}  // namespace stabres
