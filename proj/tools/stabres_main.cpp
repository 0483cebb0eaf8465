#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabres/corpus.hpp"
#include "stabres/cw_complex.hpp"
#include "stabres/json_io.hpp"
#include "stabres/koszul.hpp"
#include "stabres/verify.hpp"

namespace {

using namespace stabres;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::uint32_t default_prime() {
  if (const char* env = std::getenv("STABLE_RESOLVE_PRIME")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 3 && v <= 0xffffffffUL && is_prime(static_cast<std::uint32_t>(v)))
      return static_cast<std::uint32_t>(v);
    std::cerr << "warning: ignoring invalid STABLE_RESOLVE_PRIME='" << env << "'\n";
  }
  return PrimeField::kDefaultPrime;
}

Multidegree parse_degree(const std::string& text, std::size_t d) {
  std::vector<Exponent> e;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    try {
      e.push_back(static_cast<Exponent>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw ParseError("invalid degree component '" + tok + "'");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (e.size() != d)
    throw ParseError("degree has " + std::to_string(e.size()) + " components, expected " +
                     std::to_string(d));
  return Multidegree(std::move(e));
}

// Rejects non-stable input with a diagnostic that names the failing
// exchange monomial; callers that need the poset go through here.
SymbolPoset require_stable(const MonomialIdeal& N) {
  if (auto v = stability_violation(N))
    throw DomainError("ideal is not stable: generator " + N.generator_string(v->gen_index) +
                      " with x_" + std::to_string(v->var) + " gives " +
                      N.monomial_string(v->exchanged) + ", which is outside the ideal");
  return SymbolPoset::build(N);
}

void print_reports(const VerificationResult& res) {
  for (const CheckReport& r : res.reports) {
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.checked
              << " checks)\n";
    for (const std::string& f : r.findings) std::cout << "      " << f << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal free resolutions of stable monomial ideals"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  std::uint32_t prime = default_prime();
  std::string depth_name = "full";
  std::uint64_t seed = 1;
  std::string degree_text;
  std::string format = "json";

  auto add_ideal_arg = [&](CLI::App* cmd) {
    cmd->add_option("ideal", path, "ideal input file (text or JSON)")->required();
  };

  CLI::App* c_check = app.add_subcommand("check", "test stability of the input ideal");
  add_ideal_arg(c_check);
  c_check->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_resolve = app.add_subcommand("resolve", "build the minimal free resolution");
  add_ideal_arg(c_resolve);
  c_resolve->add_flag("--json", as_json, "emit the full resolution as JSON");
  c_resolve->add_option("--prime", prime, "field characteristic");

  CLI::App* c_betti = app.add_subcommand("betti", "print the Betti diagram");
  add_ideal_arg(c_betti);
  c_betti->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_hasse = app.add_subcommand("hasse", "emit the labeled Hasse diagram");
  add_ideal_arg(c_hasse);
  c_hasse->add_flag("--json", as_json, "emit JSON adjacency instead of DOT");

  CLI::App* c_cw = app.add_subcommand("cw", "emit the supporting CW complex");
  add_ideal_arg(c_cw);
  c_cw->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* c_verify = app.add_subcommand("verify", "run the full property suite");
  add_ideal_arg(c_verify);
  c_verify->add_flag("--json", as_json, "emit JSON");
  c_verify->add_option("--prime", prime, "field characteristic");
  c_verify->add_option("--depth", depth_name, "verification depth")
      ->check(CLI::IsMember({"quick", "full", "exhaustive"}));
  c_verify->add_option("--seed", seed, "seed for external degree samples");

  CLI::App* c_oracle = app.add_subcommand("oracle",
                                          "Koszul-homology Betti numbers / oracle comparison");
  add_ideal_arg(c_oracle);
  c_oracle->add_flag("--json", as_json, "emit JSON");
  c_oracle->add_option("--prime", prime, "field characteristic");
  c_oracle->add_option("--degree", degree_text, "single multidegree, e.g. 1,1,1");

  CLI::App* c_corpus = app.add_subcommand("corpus", "generate and verify random stable ideals");
  c_corpus->add_flag("--json", as_json, "emit JSON");
  c_corpus->add_option("--prime", prime, "field characteristic");
  c_corpus->add_option("--seed", seed, "corpus seed");
  std::size_t count = 50, max_vars = 4, max_gens = 20;
  std::uint32_t max_degree = 5;
  c_corpus->add_option("--count", count, "number of ideals");
  c_corpus->add_option("--max-vars", max_vars, "variable cap");
  c_corpus->add_option("--max-degree", max_degree, "generator degree cap");
  c_corpus->add_option("--max-gens", max_gens, "generator count cap");
  c_corpus->add_option("--depth", depth_name, "verification depth")
      ->check(CLI::IsMember({"quick", "full", "exhaustive"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!is_prime(prime) || prime < 3) {
    std::cerr << "error: --prime must be an odd prime, got " << prime << "\n";
    return kExitUsage;
  }

  try {
    const PrimeField Fp(prime);
    const Depth depth = depth_name == "quick"      ? Depth::quick
                        : depth_name == "full"     ? Depth::full
                                                   : Depth::exhaustive;

    if (c_check->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      auto v = stability_violation(N);
      if (as_json) {
        nlohmann::json j;
        j["format"] = 1;
        j["ideal"] = ideal_json(N);
        j["stable"] = !v.has_value();
        if (v)
          j["violation"] = {{"generator", N.generator_string(v->gen_index)},
                            {"var", v->var},
                            {"exchanged", N.monomial_string(v->exchanged)}};
        std::cout << j.dump(2) << "\n";
      } else if (!v) {
        std::cout << "stable\n";
      } else {
        std::cout << "not stable: generator " << N.generator_string(v->gen_index) << " with x_"
                  << v->var << " gives " << N.monomial_string(v->exchanged)
                  << ", which is outside the ideal\n";
      }
      return v ? kExitVerification : kExitOk;
    }

    if (c_resolve->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      SymbolPoset P = require_stable(N);
      FreeComplex F = build_resolution(P);
      if (as_json) {
        std::cout << resolution_json(P, F).dump(2) << "\n";
      } else {
        std::cout << "ranks:";
        for (std::size_t r : F.ranks) std::cout << ' ' << r;
        std::cout << "\n" << betti_text(betti_table(F));
      }
      return kExitOk;
    }

    if (c_betti->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      SymbolPoset P = require_stable(N);
      BettiTable B = betti_table(build_resolution(P));
      if (as_json)
        std::cout << betti_json(B).dump(2) << "\n";
      else
        std::cout << betti_text(B);
      return kExitOk;
    }

    if (c_hasse->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      SymbolPoset P = require_stable(N);
      if (as_json)
        std::cout << hasse_json(P).dump(2) << "\n";
      else
        std::cout << hasse_dot(P);
      return kExitOk;
    }

    if (c_cw->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      SymbolPoset P = require_stable(N);
      GradedCWComplex X = build_cw(P);
      if (format == "dot")
        std::cout << cw_dot(P, X);
      else
        std::cout << cw_json(P, X).dump(2) << "\n";
      return kExitOk;
    }

    if (c_verify->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      VerificationResult res = run_verification(N, Fp, VerifyOptions{depth, seed, 24});
      if (as_json)
        std::cout << verification_json(res).dump(2) << "\n";
      else
        print_reports(res);
      return res.all_pass() ? kExitOk : kExitVerification;
    }

    if (c_oracle->parsed()) {
      MonomialIdeal N = read_ideal_file(path);
      if (!degree_text.empty()) {
        Multidegree a = parse_degree(degree_text, N.var_count());
        std::vector<std::size_t> b = koszul_betti(N, a, Fp);
        if (as_json) {
          nlohmann::json j;
          j["format"] = 1;
          j["mdeg"] = a.exponents();
          j["betti"] = b;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "betti:";
          for (std::size_t v : b) std::cout << ' ' << v;
          std::cout << "\n";
        }
        return kExitOk;
      }
      SymbolPoset P = require_stable(N);
      FreeComplex F = build_resolution(P);
      CheckReport rep = compare_betti(N, F, Fp, degrees_for_depth(F, depth, seed));
      if (as_json) {
        nlohmann::json j = report_json(rep);
        j["format"] = 1;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (rep.pass ? "pass" : "FAIL") << "  " << rep.name << "  (" << rep.checked
                  << " degrees)\n";
        for (const std::string& f : rep.findings) std::cout << "      " << f << "\n";
      }
      return rep.pass ? kExitOk : kExitVerification;
    }

    if (c_corpus->parsed()) {
      CorpusParams params{seed, count, max_vars, max_degree, max_gens};
      std::vector<MonomialIdeal> ideals = random_stable_ideals(params);
      bool all = true;
      nlohmann::json items = nlohmann::json::array();
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        VerificationResult res = run_verification(ideals[i], Fp, VerifyOptions{depth, seed, 24});
        all = all && res.all_pass();
        if (as_json) {
          nlohmann::json j;
          j["ideal"] = ideal_json(ideals[i]);
          j["verification"] = verification_json(res);
          items.push_back(std::move(j));
        } else {
          std::cout << "ideal " << i << " (" << ideals[i].var_count() << " vars, "
                    << ideals[i].generator_count() << " gens): "
                    << (res.all_pass() ? "pass" : "FAIL") << "\n";
          if (!res.all_pass()) print_reports(res);
        }
      }
      if (as_json) {
        nlohmann::json j;
        j["format"] = 1;
        j["pass"] = all;
        j["count"] = ideals.size();
        j["ideals"] = std::move(items);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (all ? "corpus pass" : "corpus FAIL") << " (" << ideals.size()
                  << " ideals)\n";
      }
      return all ? kExitOk : kExitVerification;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const StructuralError& e) {
    std::cerr << "structural failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
