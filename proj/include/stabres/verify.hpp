#pragma once

#include <cstdint>
#include <vector>

#include "stabres/ideal.hpp"
#include "stabres/prime_field.hpp"
#include "stabres/report.hpp"
#include "stabres/resolution.hpp"

namespace stabres {

struct VerifyOptions {
  Depth depth = Depth::full;
  std::uint64_t seed = 0;         // drives the external degree samples
  std::size_t external = 24;      // samples beyond the box at exhaustive depth
};

struct VerificationResult {
  std::vector<CheckReport> reports;

  bool all_pass() const {
    for (const CheckReport& r : reports)
      if (!r.pass) return false;
    return true;
  }
};

// The whole property suite for one ideal: stability, shelling, diamond,
// sphere homology, basic cycles, cone coefficients, the two differential
// builders, d^2 = 0, minimality, exactness, the Koszul oracle, the cellular
// conditions and subcomplex acyclicity.  Each suite reports separately.
VerificationResult run_verification(const MonomialIdeal& N, const PrimeField& Fp,
                                    const VerifyOptions& opts);

}  // namespace stabres
