#pragma once

#include <cstdint>
#include <vector>

#include "stabres/errors.hpp"

namespace stabres {

bool is_prime(std::uint32_t n);

// Exact arithmetic in Z/p for an odd prime p.  Residues live in [0, p).
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_int(std::int64_t v) const;

private:
  std::uint32_t p_;
};

// Rank by Gaussian elimination; consumes its argument.  Rows may have
// different lengths only if the matrix is empty.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& F);

}  // namespace stabres
