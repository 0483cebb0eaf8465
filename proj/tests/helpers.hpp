#pragma once

#include <string>
#include <vector>

#include "stabres/ideal.hpp"
#include "stabres/poset.hpp"

namespace testutil {

using namespace stabres;

// <a,b,c>^2: the running example.
inline MonomialIdeal m2() {
  return parse_ideal_text("vars: a b c\na^2\na*b\na*c\nb^2\nb*c\nc^2\n");
}

// <a^2, ab, b^2> in two variables.
inline MonomialIdeal square() { return parse_ideal_text("vars: a b\na^2\na*b\nb^2\n"); }

// Principal ideal <a> in one variable.
inline MonomialIdeal principal() { return parse_ideal_text("vars: a\na\n"); }

// <w^2, wx^2, wxy, wy^2, wxz^4> in four variables.
inline MonomialIdeal wxyz() {
  return parse_ideal_text("vars: w x y z\nw^2\nw*x^2\nw*x*y\nw*y^2\nw*x*z^4\n");
}

inline Monomial mono(const MonomialIdeal& N, const std::string& text) {
  return parse_monomial(text, N.var_names());
}

inline AdmissibleSymbol sym(const SymbolPoset& P, const std::vector<std::uint32_t>& I,
                            const std::string& gen_text) {
  const Monomial g = mono(P.ideal(), gen_text);
  for (std::size_t i = 0; i < P.ideal().generator_count(); ++i)
    if (P.ideal().generator(i) == g) return AdmissibleSymbol{I, static_cast<std::int32_t>(i)};
  throw stabres::DomainError("not a generator: " + gen_text);
}

inline std::size_t sym_id(const SymbolPoset& P, const std::vector<std::uint32_t>& I,
                          const std::string& gen_text) {
  return P.id_of(sym(P, I, gen_text));
}

}  // namespace testutil
