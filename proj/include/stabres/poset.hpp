#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabres/ideal.hpp"
#include "stabres/report.hpp"

namespace stabres {

// An admissible symbol (I, m): a strictly increasing index set
// I within {1, .., d-1} and a minimal generator m, with max(I) < max(m).
// gen < 0 encodes the bottom element (the empty set paired with 1).
struct AdmissibleSymbol {
  std::vector<std::uint32_t> index_set;
  std::int32_t gen = -1;

  bool is_bottom() const { return gen < 0; }
  std::size_t rank() const { return is_bottom() ? 0 : index_set.size() + 1; }
  bool operator==(const AdmissibleSymbol&) const = default;
};

struct CoverEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  int label = 0;  // 0 from the bottom, -l when the generator is kept, +l otherwise
};

// A saturated chain listed top-down, together with its edge labels read in
// the same direction; labels.size() == ids.size() - 1.
struct LabeledChain {
  std::vector<std::size_t> ids;
  std::vector<int> labels;
};

// Order test straight from the definition: (J,n) <= (I,m) iff J is a subset
// of I and some C inside I\J has g(x_C m) = n.  With `reduced` set, indices
// above max(n) are dropped from the search; the unreduced search is kept for
// cross-checking on small instances.
bool leq_symbols(const MonomialIdeal& N, const AdmissibleSymbol& lo, const AdmissibleSymbol& hi,
                 bool reduced = true);

// The poset of admissible symbols of a stable ideal.  Symbols are stored in
// canonical order (rank, generator index, index set lexicographic), which
// fixes every matrix layout downstream.  The full order relation is
// materialized at build time from leq_symbols.
class SymbolPoset {
public:
  static SymbolPoset build(const MonomialIdeal& N);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<AdmissibleSymbol>& symbols() const { return symbols_; }
  const AdmissibleSymbol& symbol(std::size_t id) const { return symbols_[id]; }
  std::size_t bottom() const { return 0; }
  std::size_t rank(std::size_t id) const { return symbols_[id].rank(); }
  std::size_t max_rank() const { return max_rank_; }

  bool leq(std::size_t lo, std::size_t hi) const { return leq_[lo][hi]; }
  bool is_cover(std::size_t lo, std::size_t hi) const;
  int edge_label(std::size_t lo, std::size_t hi) const;

  const std::vector<CoverEdge>& cover_edges() const { return edges_; }
  const std::vector<std::size_t>& covers_below(std::size_t id) const { return below_[id]; }
  const std::vector<std::size_t>& covers_above(std::size_t id) const { return above_[id]; }
  const std::vector<std::size_t>& ids_of_rank(std::size_t r) const { return by_rank_[r]; }

  // x_I * m as a monomial, and its multidegree eta(I, m).
  const Monomial& eta_monomial(std::size_t id) const { return eta_[id]; }
  const Multidegree& eta(std::size_t id) const { return eta_[id]; }

  std::size_t id_of(const AdmissibleSymbol& s) const;
  std::string symbol_string(std::size_t id) const;

private:
  SymbolPoset() = default;

  MonomialIdeal ideal_ = MonomialIdeal::minimalize(1, {Monomial({1})});
  std::vector<AdmissibleSymbol> symbols_;
  std::vector<std::vector<bool>> leq_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> above_;
  std::vector<std::vector<std::size_t>> by_rank_;
  std::vector<Monomial> eta_;
  std::map<std::pair<std::int32_t, std::vector<std::uint32_t>>, std::size_t> index_;
  std::size_t max_rank_ = 0;
};

// All saturated chains of the closed interval from `hi` down to `lo`.
std::vector<LabeledChain> maximal_chains(const SymbolPoset& P, std::size_t hi, std::size_t lo);

// Dual EL-shelling check: in every closed interval of the dual poset there
// is exactly one maximal chain with strictly increasing labels, and its
// label sequence is lexicographically strictly first.
CheckReport verify_el_shelling(const SymbolPoset& P);

// Every closed interval of length two contains exactly four elements.
CheckReport verify_diamond(const SymbolPoset& P);

std::string hasse_dot(const SymbolPoset& P);

}  // namespace stabres
