#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stabres/monomial.hpp"

namespace stabres {

// A monomial ideal held by its minimal generating set, sorted ascending
// lexicographically on exponent vectors.  Construction always minimalizes,
// so no generator divides another and the basis order downstream is
// deterministic.
class MonomialIdeal {
public:
  static MonomialIdeal minimalize(std::size_t var_count, std::vector<Monomial> gens,
                                  std::vector<std::string> var_names = {});

  std::size_t var_count() const { return d_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  const Monomial& generator(std::size_t idx) const { return gens_[idx]; }
  std::size_t generator_count() const { return gens_.size(); }

  bool contains(const Monomial& m) const;

  std::string generator_string(std::size_t idx) const;
  std::string monomial_string(const Monomial& m) const;

private:
  MonomialIdeal() = default;
  std::size_t d_ = 0;
  std::vector<std::string> names_;
  std::vector<Monomial> gens_;
};

// The unique factorization m = g * y with g a minimal generator and
// max(g) <= min(y); exists and is unique exactly when the ideal is stable.
struct Decomposition {
  Monomial g;
  Monomial y;
  std::size_t gen_index = 0;
};

struct StabilityViolation {
  std::size_t gen_index;   // offending generator
  std::size_t var;         // the i with i < max(g)
  Monomial exchanged;      // g * x_i / x_max(g), not in the ideal
};

// Stability is decided on generators: every exchange g * x_i / x_max(g)
// must stay in the ideal.  Sufficiency for all monomials of the ideal is
// exercised by bounded enumeration in the test suite.
std::optional<StabilityViolation> stability_violation(const MonomialIdeal& N);
bool is_stable(const MonomialIdeal& N);

// Scans every generator and insists on exactly one match, so a non-stable
// input surfaces as a StructuralError instead of a wrong answer.
Decomposition decompose(const MonomialIdeal& N, const Monomial& m);

// g(w*m) for m in the ideal, with the associativity identity
// g(w*g(m)) = g(w*m) and max(g(w*m)) <= max(g(m)) re-checked on every call.
Monomial decompose_product(const MonomialIdeal& N, const Monomial& w, const Monomial& m);

// --- input formats ---------------------------------------------------------
//
// Text:   line 1 `vars: a b c`, then one generator per line (`a^2`, `a*b`).
// JSON:   {"vars": ["a","b","c"], "gens": [[2,0,0],[1,1,0]]}
// The reader detects JSON by a leading '{'.

MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal read_ideal_file(const std::string& path);

}  // namespace stabres
