#include "stabres/prime_field.hpp"

#include <string>

namespace stabres {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw DomainError("field characteristic must be an odd prime, got " + std::to_string(p));
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
  return a >= b ? a - b : a + p_ - b;
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& F) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t inv = F.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint32_t factor = F.mul(rows[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace stabres
