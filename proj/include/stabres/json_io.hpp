#pragma once

#include <json.hpp>

#include "stabres/cw_complex.hpp"
#include "stabres/ideal.hpp"
#include "stabres/koszul.hpp"
#include "stabres/poset.hpp"
#include "stabres/resolution.hpp"
#include "stabres/verify.hpp"

// JSON views of every exported structure.  All objects carry "format": 1 and
// all arrays follow the canonical symbol order, so output is byte-stable for
// a fixed input and configuration.

namespace stabres {

nlohmann::json ideal_json(const MonomialIdeal& N);
nlohmann::json symbol_json(const SymbolPoset& P, std::size_t id);
nlohmann::json hasse_json(const SymbolPoset& P);
nlohmann::json resolution_json(const SymbolPoset& P, const FreeComplex& F);
nlohmann::json betti_json(const BettiTable& B);
nlohmann::json cw_json(const SymbolPoset& P, const GradedCWComplex& X);
nlohmann::json report_json(const CheckReport& r);
nlohmann::json verification_json(const VerificationResult& v);

}  // namespace stabres
