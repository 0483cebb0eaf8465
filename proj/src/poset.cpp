#include "stabres/poset.hpp"

#include <algorithm>
#include <sstream>

namespace stabres {

bool leq_symbols(const MonomialIdeal& N, const AdmissibleSymbol& lo, const AdmissibleSymbol& hi,
                 bool reduced) {
  if (lo.is_bottom()) return true;
  if (hi.is_bottom()) return false;
  if (!std::includes(hi.index_set.begin(), hi.index_set.end(), lo.index_set.begin(),
                     lo.index_set.end()))
    return false;
  if (lo.gen == hi.gen) return true;  // C = empty set

  const Monomial& m = N.generator(static_cast<std::size_t>(hi.gen));
  const Monomial& n = N.generator(static_cast<std::size_t>(lo.gen));
  std::vector<std::uint32_t> diff;
  std::set_difference(hi.index_set.begin(), hi.index_set.end(), lo.index_set.begin(),
                      lo.index_set.end(), std::back_inserter(diff));
  if (reduced) {
    const std::size_t cap = n.max_index();
    std::erase_if(diff, [cap](std::uint32_t c) { return c > cap; });
  }
  const std::size_t k = diff.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    Monomial prod = m;
    for (std::size_t t = 0; t < k; ++t)
      if (mask & (std::size_t(1) << t)) prod = prod.times_var(diff[t]);
    if (decompose(N, prod).gen_index == static_cast<std::size_t>(lo.gen)) return true;
  }
  return false;
}

SymbolPoset SymbolPoset::build(const MonomialIdeal& N) {
  if (auto v = stability_violation(N))
    throw DomainError("ideal is not stable: generator " + N.generator_string(v->gen_index) +
                      " with x_" + std::to_string(v->var) + " gives " +
                      N.monomial_string(v->exchanged) + ", which is outside the ideal");

  SymbolPoset P;
  P.ideal_ = N;
  P.symbols_.push_back(AdmissibleSymbol{});  // bottom

  const std::size_t d = N.var_count();
  std::size_t highest = 0;
  for (std::size_t q = 0; q + 1 <= d; ++q) {
    for (std::size_t g = 0; g < N.generator_count(); ++g) {
      const std::size_t maxm = N.generator(g).max_index();
      if (maxm == 0 || maxm - 1 < q) continue;
      // index sets of size q inside {1, .., maxm-1}, in lexicographic order
      std::vector<std::uint32_t> I(q);
      for (std::size_t t = 0; t < q; ++t) I[t] = static_cast<std::uint32_t>(t + 1);
      while (true) {
        P.symbols_.push_back(AdmissibleSymbol{I, static_cast<std::int32_t>(g)});
        highest = std::max(highest, q + 1);
        if (q == 0) break;
        // next combination
        std::size_t t = q;
        while (t > 0 && I[t - 1] == maxm - 1 - (q - t)) --t;
        if (t == 0) break;
        ++I[t - 1];
        for (std::size_t s = t; s < q; ++s) I[s] = I[s - 1] + 1;
      }
    }
  }
  // canonical order is (rank, generator index, I lexicographic)
  std::stable_sort(P.symbols_.begin(), P.symbols_.end(),
                   [](const AdmissibleSymbol& a, const AdmissibleSymbol& b) {
                     if (a.rank() != b.rank()) return a.rank() < b.rank();
                     if (a.gen != b.gen) return a.gen < b.gen;
                     return a.index_set < b.index_set;
                   });
  P.max_rank_ = highest;

  const std::size_t n = P.symbols_.size();
  for (std::size_t id = 0; id < n; ++id)
    P.index_[{P.symbols_[id].gen, P.symbols_[id].index_set}] = id;

  P.by_rank_.assign(P.max_rank_ + 1, {});
  P.eta_.reserve(n);
  for (std::size_t id = 0; id < n; ++id) {
    const AdmissibleSymbol& s = P.symbols_[id];
    P.by_rank_[s.rank()].push_back(id);
    if (s.is_bottom()) {
      P.eta_.push_back(Monomial::one(N.var_count()));
    } else {
      P.eta_.push_back(squarefree(N.var_count(), s.index_set) *
                       N.generator(static_cast<std::size_t>(s.gen)));
    }
  }

  P.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (lo == hi) {
        P.leq_[lo][hi] = true;
        continue;
      }
      if (P.symbols_[lo].rank() >= P.symbols_[hi].rank()) continue;
      P.leq_[lo][hi] = leq_symbols(N, P.symbols_[lo], P.symbols_[hi]);
    }
  }

  P.below_.assign(n, {});
  P.above_.assign(n, {});
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t lo = 0; lo < n; ++lo) {
      if (P.symbols_[lo].rank() + 1 != P.symbols_[hi].rank() || !P.leq_[lo][hi]) continue;
      int label = 0;
      if (!P.symbols_[lo].is_bottom()) {
        std::vector<std::uint32_t> diff;
        std::set_difference(P.symbols_[hi].index_set.begin(), P.symbols_[hi].index_set.end(),
                            P.symbols_[lo].index_set.begin(), P.symbols_[lo].index_set.end(),
                            std::back_inserter(diff));
        const int l = static_cast<int>(diff.front());
        label = (P.symbols_[lo].gen == P.symbols_[hi].gen) ? -l : l;
      }
      P.edges_.push_back(CoverEdge{lo, hi, label});
      P.below_[hi].push_back(lo);
      P.above_[lo].push_back(hi);
    }
  }
  return P;
}

bool SymbolPoset::is_cover(std::size_t lo, std::size_t hi) const {
  return rank(lo) + 1 == rank(hi) && leq_[lo][hi];
}

int SymbolPoset::edge_label(std::size_t lo, std::size_t hi) const {
  if (!is_cover(lo, hi))
    throw DomainError("edge_label on a non-cover pair " + symbol_string(lo) + " , " +
                      symbol_string(hi));
  if (symbols_[lo].is_bottom()) return 0;
  std::vector<std::uint32_t> diff;
  std::set_difference(symbols_[hi].index_set.begin(), symbols_[hi].index_set.end(),
                      symbols_[lo].index_set.begin(), symbols_[lo].index_set.end(),
                      std::back_inserter(diff));
  const int l = static_cast<int>(diff.front());
  return symbols_[lo].gen == symbols_[hi].gen ? -l : l;
}

std::size_t SymbolPoset::id_of(const AdmissibleSymbol& s) const {
  auto it = index_.find({s.gen, s.index_set});
  if (it == index_.end()) throw DomainError("symbol is not in the poset");
  return it->second;
}

std::string SymbolPoset::symbol_string(std::size_t id) const {
  const AdmissibleSymbol& s = symbols_[id];
  std::ostringstream os;
  os << '{';
  for (std::size_t t = 0; t < s.index_set.size(); ++t) {
    if (t) os << ',';
    os << s.index_set[t];
  }
  os << "},";
  os << (s.is_bottom() ? "1" : ideal_.generator_string(static_cast<std::size_t>(s.gen)));
  return os.str();
}

std::vector<LabeledChain> maximal_chains(const SymbolPoset& P, std::size_t hi, std::size_t lo) {
  if (!P.leq(lo, hi)) throw DomainError("maximal_chains on an incomparable pair");
  std::vector<LabeledChain> out;
  LabeledChain cur;
  cur.ids.push_back(hi);
  // depth-first over cover edges, restricted to the interval
  struct Walker {
    const SymbolPoset& P;
    std::size_t lo;
    std::vector<LabeledChain>& out;
    void walk(LabeledChain& cur) {
      const std::size_t at = cur.ids.back();
      if (at == lo) {
        out.push_back(cur);
        return;
      }
      for (std::size_t nxt : P.covers_below(at)) {
        if (!P.leq(lo, nxt)) continue;
        cur.ids.push_back(nxt);
        cur.labels.push_back(P.edge_label(nxt, at));
        walk(cur);
        cur.ids.pop_back();
        cur.labels.pop_back();
      }
    }
  };
  Walker{P, lo, out}.walk(cur);
  return out;
}

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

}  // namespace

CheckReport verify_el_shelling(const SymbolPoset& P) {
  CheckReport rep("el-shelling");
  const std::size_t n = P.size();
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t lo = 0; lo < n; ++lo) {
      if (lo == hi || !P.leq(lo, hi)) continue;
      auto chains = maximal_chains(P, hi, lo);
      ++rep.checked;
      std::size_t rising = chains.size();
      const LabeledChain* the_rising = nullptr;
      std::size_t count = 0;
      for (const auto& c : chains)
        if (strictly_increasing(c.labels)) {
          ++count;
          the_rising = &c;
        }
      rising = count;
      const std::string where =
          "[" + P.symbol_string(hi) + " , " + P.symbol_string(lo) + "]";
      if (rising != 1) {
        rep.fail("interval " + where + " has " + std::to_string(rising) +
                 " increasing maximal chains");
        continue;
      }
      for (const auto& c : chains) {
        if (&c == the_rising) continue;
        if (!std::lexicographical_compare(the_rising->labels.begin(), the_rising->labels.end(),
                                          c.labels.begin(), c.labels.end())) {
          rep.fail("interval " + where + ": increasing chain is not lexicographically first");
          break;
        }
      }
    }
  }
  return rep;
}

CheckReport verify_diamond(const SymbolPoset& P) {
  CheckReport rep("diamond");
  const std::size_t n = P.size();
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t lo = 0; lo < n; ++lo) {
      if (P.rank(lo) + 2 != P.rank(hi) || !P.leq(lo, hi)) continue;
      ++rep.checked;
      std::size_t card = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (P.leq(lo, z) && P.leq(z, hi)) ++card;
      if (card != 4)
        rep.fail("interval [" + P.symbol_string(lo) + " , " + P.symbol_string(hi) +
                 "] has cardinality " + std::to_string(card));
    }
  }
  return rep;
}

std::string hasse_dot(const SymbolPoset& P) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t id = 0; id < P.size(); ++id)
    os << "  s" << id << " [label=\"" << P.symbol_string(id) << "\"];\n";
  for (const CoverEdge& e : P.cover_edges())
    os << "  s" << e.lower << " -> s" << e.upper << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace stabres
