#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stabres/ideal.hpp"

namespace stabres {

struct CorpusParams {
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t max_vars = 4;
  std::uint32_t max_degree = 5;
  std::size_t max_generators = 20;
};

// One random stable ideal: a few random monomials, closed under the exchange
// m -> m * x_i / x_max(m), then minimalized.  Draws exceeding the generator
// cap are rejected and redrawn from the same stream, so results are a
// deterministic function of the generator state.
MonomialIdeal random_stable_ideal(std::mt19937_64& rng, std::size_t max_vars,
                                  std::uint32_t max_degree, std::size_t max_generators);

std::vector<MonomialIdeal> random_stable_ideals(const CorpusParams& params);

}  // namespace stabres
