#include "stabres/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stabres {

MonomialIdeal MonomialIdeal::minimalize(std::size_t var_count, std::vector<Monomial> gens,
                                        std::vector<std::string> var_names) {
  if (var_count == 0) throw DomainError("ideal needs at least one variable");
  if (gens.empty()) throw DomainError("ideal needs at least one generator");
  for (const Monomial& g : gens) {
    if (g.var_count() != var_count) throw DomainError("generator with mismatched variable count");
    if (g.is_one()) throw DomainError("the unit monomial cannot generate a proper ideal");
  }
  if (var_names.empty()) {
    for (std::size_t i = 1; i <= var_count; ++i) var_names.push_back("x" + std::to_string(i));
  }
  if (var_names.size() != var_count) throw DomainError("variable name count mismatch");

  // Degree-ascending pass removes divisibility-redundant generators.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return LexLess{}(a, b);
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});

  MonomialIdeal N;
  N.d_ = var_count;
  N.names_ = std::move(var_names);
  N.gens_ = std::move(kept);
  return N;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.var_count() != d_) throw DomainError("mixed variable counts");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::string MonomialIdeal::generator_string(std::size_t idx) const {
  return format_monomial(gens_[idx], names_);
}

std::string MonomialIdeal::monomial_string(const Monomial& m) const {
  return format_monomial(m, names_);
}

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& N) {
  for (std::size_t idx = 0; idx < N.generator_count(); ++idx) {
    const Monomial& g = N.generator(idx);
    const std::size_t r = g.max_index();
    for (std::size_t i = 1; i < r; ++i) {
      Monomial ex = g.times_var(i).div_var(r);
      if (!N.contains(ex)) return StabilityViolation{idx, i, std::move(ex)};
    }
  }
  return std::nullopt;
}

bool is_stable(const MonomialIdeal& N) { return !stability_violation(N).has_value(); }

Decomposition decompose(const MonomialIdeal& N, const Monomial& m) {
  if (!N.contains(m))
    throw DomainError("monomial " + N.monomial_string(m) + " is not in the ideal");
  std::optional<Decomposition> found;
  std::size_t matches = 0;
  for (std::size_t idx = 0; idx < N.generator_count(); ++idx) {
    const Monomial& g = N.generator(idx);
    if (!divides(g, m)) continue;
    Monomial y = quotient(m, g);
    if (!y.is_one() && g.max_index() > y.min_index()) continue;
    ++matches;
    if (!found) found = Decomposition{g, std::move(y), idx};
  }
  if (matches != 1)
    throw StructuralError("decomposition of " + N.monomial_string(m) + " matched " +
                          std::to_string(matches) + " generators; the ideal is not stable");
  return std::move(*found);
}

Monomial decompose_product(const MonomialIdeal& N, const Monomial& w, const Monomial& m) {
  if (!N.contains(m))
    throw DomainError("monomial " + N.monomial_string(m) + " is not in the ideal");
  Decomposition full = decompose(N, w * m);
  Decomposition gm = decompose(N, m);
  Decomposition assoc = decompose(N, w * gm.g);
  if (assoc.gen_index != full.gen_index)
    throw StructuralError("decomposition is not associative at " + N.monomial_string(w * m));
  if (full.g.max_index() > gm.g.max_index())
    throw StructuralError("decomposition violates max-monotonicity at " +
                          N.monomial_string(w * m));
  return full.g;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

MonomialIdeal parse_ideal_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON ideal: ") + e.what());
  }
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    throw ParseError("JSON ideal needs a nonempty \"vars\" array");
  if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
    throw ParseError("JSON ideal needs a nonempty \"gens\" array");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw ParseError("\"vars\" entries must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || g.size() != names.size())
      throw ParseError("each \"gens\" entry must be an exponent vector of length " +
                       std::to_string(names.size()));
    std::vector<Exponent> e;
    for (const auto& x : g) {
      if (!x.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
      e.push_back(x.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
  }
  try {
    const std::size_t nvars = names.size();
    return MonomialIdeal::minimalize(nvars, std::move(gens), std::move(names));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty ideal input");
  if (text[first] == '{') return parse_ideal_json(text);

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> names;
  std::vector<Monomial> gens;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (split_ws(line).empty()) continue;
    if (!have_vars) {
      std::size_t colon = line.find(':');
      std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
      head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
      if (head != "vars")
        throw ParseError("line " + std::to_string(lineno) + ": expected `vars: ...` header");
      names = split_ws(line.substr(colon + 1));
      if (names.empty())
        throw ParseError("line " + std::to_string(lineno) + ": no variables declared");
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = i + 1; k < names.size(); ++k)
          if (names[i] == names[k])
            throw ParseError("line " + std::to_string(lineno) + ": duplicate variable '" +
                             names[i] + "'");
      have_vars = true;
      continue;
    }
    try {
      gens.push_back(parse_monomial(line, names));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_vars) throw ParseError("missing `vars:` header");
  if (gens.empty()) throw ParseError("no generators given");
  try {
    const std::size_t nvars = names.size();
    return MonomialIdeal::minimalize(nvars, std::move(gens), std::move(names));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ideal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace stabres
