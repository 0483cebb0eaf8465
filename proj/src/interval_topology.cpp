#include "stabres/interval_topology.hpp"

#include <algorithm>
#include <cstdlib>

namespace stabres {

int chain_sign(const std::vector<int>& labels) {
  int product_sign = 1;
  for (int l : labels) {
    if (l == 0) throw DomainError("chain_sign expects nonzero labels");
    if (l < 0) product_sign = -product_sign;
  }
  // parity of the permutation sorting the absolute values
  int perm_sign = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (std::abs(labels[i]) == std::abs(labels[j]))
        throw DomainError("chain_sign: repeated absolute label value");
      if (std::abs(labels[i]) > std::abs(labels[j])) perm_sign = -perm_sign;
    }
  }
  return perm_sign * product_sign;
}

OrderComplexInterval order_complex(const SymbolPoset& P, std::size_t hi) {
  OrderComplexInterval oc;
  oc.top = hi;
  for (std::size_t z = 0; z < P.size(); ++z)
    if (z != P.bottom() && z != hi && P.leq(z, hi)) oc.vertices.push_back(z);
  for (const LabeledChain& c : maximal_chains(P, hi, P.bottom())) {
    std::vector<std::size_t> facet(c.ids.begin() + 1, c.ids.end() - 1);
    oc.facets.push_back(std::move(facet));
  }
  if (P.rank(hi) <= 1) oc.facets.clear();  // open interval below an atom is empty
  return oc;
}

BasicCycle basic_cycle(const SymbolPoset& P, std::size_t id) {
  if (id == P.bottom()) throw DomainError("basic_cycle of the bottom element");
  BasicCycle f;
  f.owner = id;
  for (const LabeledChain& c : maximal_chains(P, id, P.bottom())) {
    CycleTerm term;
    term.chain.assign(c.ids.begin() + 1, c.ids.end() - 1);
    std::vector<int> nonzero(c.labels.begin(), c.labels.end() - 1);
    term.sign = chain_sign(nonzero);
    f.terms.push_back(std::move(term));
  }
  return f;
}

namespace {

// Accumulates the reduced simplicial boundary of a signed sum of chains.
// Chains are vertex lists ordered top-down; vertex j is removed with sign
// (-1)^j.  The empty chain keys the dimension -1 generator.
std::map<std::vector<std::size_t>, long long> boundary_of(
    const std::vector<CycleTerm>& terms) {
  std::map<std::vector<std::size_t>, long long> out;
  for (const CycleTerm& t : terms) {
    for (std::size_t j = 0; j < t.chain.size(); ++j) {
      std::vector<std::size_t> face;
      face.reserve(t.chain.size() - 1);
      for (std::size_t k = 0; k < t.chain.size(); ++k)
        if (k != j) face.push_back(t.chain[k]);
      const long long sign = (j % 2 == 0) ? t.sign : -t.sign;
      out[std::move(face)] += sign;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

bool verify_cycle(const SymbolPoset& P, std::size_t id) {
  const std::size_t q = P.rank(id) == 0 ? 0 : P.rank(id) - 1;
  BasicCycle f = basic_cycle(P, id);
  for (const CycleTerm& t : f.terms)
    if (t.chain.size() != q) return false;  // would create a q-dimensional face
  if (q == 0) return true;                  // boundary below dimension -1 is zero
  return boundary_of(f.terms).empty();
}

ReducedChainComplex order_complex_chain_complex(const SymbolPoset& P, std::size_t hi) {
  OrderComplexInterval oc = order_complex(P, hi);

  // enumerate every chain of the open interval, grouped by length
  std::vector<std::vector<std::vector<std::size_t>>> chains_by_size;
  std::vector<std::size_t> cur;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    if (cur.size() > chains_by_size.size()) chains_by_size.resize(cur.size());
    chains_by_size[cur.size() - 1].push_back(cur);
    for (std::size_t v : oc.vertices) {
      if (v == last || !P.leq(v, last)) continue;
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  for (std::size_t v : oc.vertices) {
    cur.push_back(v);
    extend(extend, v);
    cur.pop_back();
  }

  ReducedChainComplex C;
  C.dims.push_back(1);  // the empty face
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(chains_by_size.size());
  for (std::size_t k = 0; k < chains_by_size.size(); ++k) {
    std::sort(chains_by_size[k].begin(), chains_by_size[k].end());
    for (std::size_t i = 0; i < chains_by_size[k].size(); ++i)
      index[k][chains_by_size[k][i]] = i;
    C.dims.push_back(chains_by_size[k].size());
  }
  for (std::size_t k = 0; k < chains_by_size.size(); ++k) {
    SignedBoundaryMatrix B;
    B.rows = C.dims[k];
    B.cols = C.dims[k + 1];
    for (std::size_t col = 0; col < chains_by_size[k].size(); ++col) {
      const auto& chain = chains_by_size[k][col];
      for (std::size_t j = 0; j <= k; ++j) {
        std::vector<std::size_t> face;
        for (std::size_t t = 0; t <= k; ++t)
          if (t != j) face.push_back(chain[t]);
        const std::size_t row = (k == 0) ? 0 : index[k - 1].at(face);
        B.entries.emplace_back(row, col, j % 2 == 0 ? 1 : -1);
      }
    }
    C.boundaries.push_back(std::move(B));
  }
  return C;
}

namespace {

std::vector<std::vector<std::uint32_t>> to_dense(const SignedBoundaryMatrix& B,
                                                 const PrimeField& F) {
  std::vector<std::vector<std::uint32_t>> M(B.rows, std::vector<std::uint32_t>(B.cols, 0));
  for (const auto& [r, c, v] : B.entries) M[r][c] = F.add(M[r][c], F.from_int(v));
  return M;
}

void check_composition(const ReducedChainComplex& C, const PrimeField& F) {
  for (std::size_t k = 0; k + 1 < C.boundaries.size(); ++k) {
    const SignedBoundaryMatrix& lowr = C.boundaries[k];
    const SignedBoundaryMatrix& uppr = C.boundaries[k + 1];
    std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> acc;
    std::vector<std::vector<std::pair<std::size_t, int>>> by_col(lowr.cols);
    for (const auto& [r, c, v] : lowr.entries) by_col[c].emplace_back(r, v);
    for (const auto& [mid, col, v] : uppr.entries)
      for (const auto& [row, w] : by_col[mid]) {
        auto key = std::make_pair(row, col);
        acc[key] = F.add(acc.count(key) ? acc[key] : 0, F.from_int(v * w));
      }
    for (const auto& [key, v] : acc)
      if (v != 0) throw DomainError("boundary matrices do not compose to zero");
  }
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const ReducedChainComplex& C,
                                                const PrimeField& F) {
  if (C.dims.size() != C.boundaries.size() + 1)
    throw DomainError("chain complex dimension/boundary mismatch");
  check_composition(C, F);
  std::vector<std::size_t> rk(C.boundaries.size() + 1, 0);
  for (std::size_t k = 0; k < C.boundaries.size(); ++k)
    rk[k] = rank_mod_p(to_dense(C.boundaries[k], F), F);
  // rk[top+1] stays 0
  std::vector<std::size_t> h(C.dims.size(), 0);
  h[0] = C.dims[0] - rk[0];  // dimension -1: cokernel of the augmentation
  for (std::size_t k = 0; k + 1 < C.dims.size(); ++k)
    h[k + 1] = C.dims[k + 1] - rk[k] - rk[k + 1];
  return h;
}

int expected_cover_sign(const SymbolPoset& P, std::size_t hi, std::size_t lo) {
  if (!P.is_cover(lo, hi)) throw DomainError("expected_cover_sign on a non-cover pair");
  if (lo == P.bottom()) return 1;
  const AdmissibleSymbol& top = P.symbol(hi);
  const AdmissibleSymbol& bot = P.symbol(lo);
  std::vector<std::uint32_t> diff;
  std::set_difference(top.index_set.begin(), top.index_set.end(), bot.index_set.begin(),
                      bot.index_set.end(), std::back_inserter(diff));
  const std::size_t p =
      1 + static_cast<std::size_t>(std::lower_bound(top.index_set.begin(), top.index_set.end(),
                                                    diff.front()) -
                                   top.index_set.begin());
  const std::size_t delta = (top.gen == bot.gen) ? 0 : 1;
  return (p + delta) % 2 == 0 ? 1 : -1;
}

int cone_boundary_coefficient(const SymbolPoset& P, std::size_t hi, std::size_t lo) {
  if (!P.is_cover(lo, hi)) throw DomainError("cone boundary needs a cover pair");
  if (lo == P.bottom()) return 1;  // augmentation: f(empty set, m) -> the empty face

  // facets of the order complex below hi whose top vertex is lo, with the
  // signs they carry inside that complex
  std::vector<CycleTerm> upsilon;
  for (const LabeledChain& c : maximal_chains(P, hi, P.bottom())) {
    if (c.ids.size() < 2 || c.ids[1] != lo) continue;
    CycleTerm t;
    t.chain.assign(c.ids.begin() + 1, c.ids.end() - 1);
    std::vector<int> nonzero(c.labels.begin(), c.labels.end() - 1);
    t.sign = chain_sign(nonzero);
    upsilon.push_back(std::move(t));
  }
  if (upsilon.empty()) throw StructuralError("no facet through the covered symbol");

  std::map<std::vector<std::size_t>, long long> bdry = boundary_of(upsilon);

  std::map<std::vector<std::size_t>, long long> target;
  for (const CycleTerm& t : basic_cycle(P, lo).terms) target[t.chain] = t.sign;

  if (bdry.size() != target.size())
    throw StructuralError("cone boundary is not supported on the basic cycle at " +
                          P.symbol_string(lo));
  long long coeff = 0;
  for (const auto& [face, v] : bdry) {
    auto it = target.find(face);
    if (it == target.end())
      throw StructuralError("cone boundary has a face outside the basic cycle at " +
                            P.symbol_string(lo));
    const long long c = v * it->second;  // signs are +-1
    if (coeff == 0)
      coeff = c;
    else if (coeff != c)
      throw StructuralError("cone boundary is not proportional to the basic cycle at " +
                            P.symbol_string(lo));
  }
  if (coeff == 0) throw StructuralError("cone boundary vanished at " + P.symbol_string(lo));
  return static_cast<int>(coeff);
}

}  // namespace stabres
