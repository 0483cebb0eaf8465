#include "stabres/corpus.hpp"

#include <set>

namespace stabres {

MonomialIdeal random_stable_ideal(std::mt19937_64& rng, std::size_t max_vars,
                                  std::uint32_t max_degree, std::size_t max_generators) {
  for (;;) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % max_vars);
    const std::size_t nseeds = 1 + static_cast<std::size_t>(rng() % 3);
    std::set<std::vector<Exponent>> closure;
    for (std::size_t s = 0; s < nseeds; ++s) {
      const std::uint32_t deg = 1 + static_cast<std::uint32_t>(rng() % max_degree);
      std::vector<Exponent> e(d, 0);
      for (std::uint32_t t = 0; t < deg; ++t) ++e[rng() % d];
      closure.insert(std::move(e));
    }
    // close under the exchange operation
    std::vector<std::vector<Exponent>> work(closure.begin(), closure.end());
    while (!work.empty()) {
      std::vector<Exponent> e = std::move(work.back());
      work.pop_back();
      Monomial m{e};
      const std::size_t r = m.max_index();
      for (std::size_t i = 1; i < r; ++i) {
        std::vector<Exponent> ex = e;
        --ex[r - 1];
        ++ex[i - 1];
        if (closure.insert(ex).second) work.push_back(std::move(ex));
      }
    }
    std::vector<Monomial> gens;
    gens.reserve(closure.size());
    for (const auto& e : closure) gens.emplace_back(e);
    MonomialIdeal N = MonomialIdeal::minimalize(d, std::move(gens));
    if (N.generator_count() > max_generators) continue;
    return N;
  }
}

std::vector<MonomialIdeal> random_stable_ideals(const CorpusParams& params) {
  std::mt19937_64 rng(params.seed);
  std::vector<MonomialIdeal> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i)
    out.push_back(
        random_stable_ideal(rng, params.max_vars, params.max_degree, params.max_generators));
  return out;
}

}  // namespace stabres
