#include "stabres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace stabres {

Exponent Monomial::exponent(std::size_t var) const {
  if (var == 0 || var > exps_.size())
    throw DomainError("variable index out of range: " + std::to_string(var));
  return exps_[var - 1];
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t t = 0;
  for (Exponent e : exps_) t += e;
  return t;
}

std::size_t Monomial::max_index() const {
  for (std::size_t k = exps_.size(); k > 0; --k)
    if (exps_[k - 1] > 0) return k;
  return 0;
}

std::size_t Monomial::min_index() const {
  for (std::size_t k = 1; k <= exps_.size(); ++k)
    if (exps_[k - 1] > 0) return k;
  return 0;
}

Monomial Monomial::times_var(std::size_t var) const {
  if (var == 0 || var > exps_.size())
    throw DomainError("variable index out of range: " + std::to_string(var));
  Monomial r = *this;
  if (r.exps_[var - 1] == std::numeric_limits<Exponent>::max())
    throw DomainError("exponent overflow");
  ++r.exps_[var - 1];
  return r;
}

Monomial Monomial::div_var(std::size_t var) const {
  if (var == 0 || var > exps_.size())
    throw DomainError("variable index out of range: " + std::to_string(var));
  if (exps_[var - 1] == 0) throw DomainError("quotient by a non-divisor variable");
  Monomial r = *this;
  --r.exps_[var - 1];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) throw DomainError("mixed variable counts");
  for (std::size_t i = 0; i < a.var_count(); ++i)
    if (a.exponents()[i] > b.exponents()[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) throw DomainError("mixed variable counts");
  std::vector<Exponent> e(a.var_count());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = std::uint64_t(a.exponents()[i]) + b.exponents()[i];
    if (s > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    e[i] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) throw DomainError("mixed variable counts");
  std::vector<Exponent> e(a.var_count());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (b.exponents()[i] > a.exponents()[i])
      throw DomainError("quotient by a non-divisor");
    e[i] = a.exponents()[i] - b.exponents()[i];
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) throw DomainError("mixed variable counts");
  std::vector<Exponent> e(a.var_count());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial squarefree(std::size_t var_count, const std::vector<std::uint32_t>& indices) {
  Monomial r = Monomial::one(var_count);
  for (std::uint32_t i : indices) r = r.times_var(i);
  return r;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& var_names) {
  if (m.var_count() != var_names.size()) throw DomainError("variable name count mismatch");
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.var_count(); ++i) {
    Exponent e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_names[i];
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& var_names) {
  std::vector<Exponent> exps(var_names.size(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw ParseError("empty monomial");
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters after '1'");
    return Monomial(std::move(exps));
  }
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*') throw ParseError(std::string("expected '*' before '") + text[pos] + "'");
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || !is_ident_start(text[pos]))
      throw ParseError("expected a variable name in monomial");
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    std::string name(text.substr(start, pos - start));
    auto it = std::find(var_names.begin(), var_names.end(), name);
    if (it == var_names.end()) throw ParseError("unknown variable '" + name + "'");
    std::size_t var = static_cast<std::size_t>(it - var_names.begin());
    std::uint64_t e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected an exponent after '^'");
      e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (e > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large");
        ++pos;
      }
    }
    std::uint64_t s = exps[var] + e;
    if (s > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large");
    exps[var] = static_cast<Exponent>(s);
    expect_factor = false;
    skip_ws();
  }
  if (expect_factor) throw ParseError("empty monomial");
  return Monomial(std::move(exps));
}

}  // namespace stabres
