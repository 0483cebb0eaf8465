#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabres/errors.hpp"

namespace stabres {

using Exponent = std::uint32_t;

// A monomial in a fixed number of variables, stored as its exponent vector.
// Variable indices in the public API are 1-based (x_1 .. x_d); the constant
// monomial 1 is the all-zeros vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  // The constant monomial in a given number of variables.
  static Monomial one(std::size_t var_count) {
    return Monomial(std::vector<Exponent>(var_count, 0));
  }

  std::size_t var_count() const { return exps_.size(); }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent exponent(std::size_t var) const;  // 1-based
  bool is_one() const;
  std::uint64_t total_degree() const;

  // Largest/smallest k with x_k dividing the monomial; 0 for the constant
  // monomial (the empty support convention used throughout).
  std::size_t max_index() const;
  std::size_t min_index() const;

  Monomial times_var(std::size_t var) const;  // multiply by x_var
  Monomial div_var(std::size_t var) const;    // divide by x_var, must divide

  bool operator==(const Monomial&) const = default;

private:
  std::vector<Exponent> exps_;
};

// Multidegrees share the exponent-vector representation and are compared
// componentwise via divides().
using Multidegree = Monomial;

bool divides(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);  // a/b
Monomial lcm(const Monomial& a, const Monomial& b);

// x_I for a set of 1-based variable indices.
Monomial squarefree(std::size_t var_count, const std::vector<std::uint32_t>& indices);

// Canonical order: ascending lexicographic on exponent vectors.
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
  }
};

// String form `a^2*b`; the constant monomial prints as `1`.
std::string format_monomial(const Monomial& m, const std::vector<std::string>& var_names);
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& var_names);

}  // namespace stabres
