#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "helpers.hpp"
#include "stabres/corpus.hpp"
#include "stabres/ideal.hpp"

using namespace stabres;
using namespace testutil;

namespace {

// Enumerates every monomial of total degree up to `deg` in d variables.
void each_monomial_up_to(std::size_t d, std::uint32_t deg,
                         const std::function<void(const Monomial&)>& fn) {
  std::vector<Exponent> e(d, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == d) {
      fn(Monomial(e));
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, deg);
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("minimalize removes divisible generators") {
  MonomialIdeal N = MonomialIdeal::minimalize(
      3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({2, 1, 0})});
  REQUIRE(N.generator_count() == 2);
  CHECK(N.generator(0) == Monomial({1, 1, 0}));
  CHECK(N.generator(1) == Monomial({2, 0, 0}));

  MonomialIdeal M = m2();
  CHECK(M.generator_count() == 6);

  MonomialIdeal single = MonomialIdeal::minimalize(1, {Monomial({3})});
  CHECK(single.generator_count() == 1);

  CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {}), DomainError);
  CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {Monomial({1})}), DomainError);
  CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {Monomial({0, 0})}), DomainError);
}

TEST_CASE("minimalize is idempotent and canonically sorted") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + rng() % 4;
    std::vector<Monomial> gens;
    for (int g = 0; g < 8; ++g) {
      std::vector<Exponent> e(d, 0);
      for (std::size_t i = 0; i < d; ++i) e[i] = rng() % 4;
      if (Monomial(e).is_one()) e[rng() % d] = 1;
      gens.emplace_back(e);
    }
    MonomialIdeal N = MonomialIdeal::minimalize(d, gens);
    MonomialIdeal again = MonomialIdeal::minimalize(d, N.generators());
    CHECK(N.generators() == again.generators());
    for (std::size_t i = 0; i + 1 < N.generator_count(); ++i)
      CHECK(LexLess{}(N.generator(i), N.generator(i + 1)));
    for (std::size_t i = 0; i < N.generator_count(); ++i)
      for (std::size_t k = 0; k < N.generator_count(); ++k)
        if (i != k) CHECK_FALSE(divides(N.generator(i), N.generator(k)));
  }
}

TEST_CASE("membership") {
  MonomialIdeal N = m2();
  CHECK(N.contains(mono(N, "a*b*c")));
  CHECK_FALSE(N.contains(mono(N, "c")));
  MonomialIdeal P = principal();
  CHECK_FALSE(P.contains(mono(P, "1")));
}

TEST_CASE("stability") {
  CHECK(is_stable(m2()));
  CHECK(is_stable(principal()));  // exchange condition is vacuous
  CHECK(is_stable(square()));
  CHECK(is_stable(wxyz()));

  MonomialIdeal bad = parse_ideal_text("vars: a b\na*b\n");
  auto v = stability_violation(bad);
  REQUIRE(v.has_value());
  CHECK(v->exchanged == mono(bad, "a^2"));
  CHECK(v->var == 1);
}

TEST_CASE("decompose against a direct generator scan") {
  MonomialIdeal N = m2();

  Decomposition dec = decompose(N, mono(N, "a*b*c"));
  CHECK(dec.g == mono(N, "a*b"));
  CHECK(dec.y == mono(N, "c"));

  dec = decompose(N, mono(N, "a^2"));
  CHECK(dec.g == mono(N, "a^2"));
  CHECK(dec.y == mono(N, "1"));

  dec = decompose(N, mono(N, "b*c^2"));
  CHECK(dec.g == mono(N, "b*c"));
  CHECK(dec.y == mono(N, "c"));

  CHECK_THROWS_AS(decompose(N, mono(N, "a")), DomainError);

  // every monomial of the ideal up to degree 5 decomposes with the defining
  // property, verified against an independent scan of all factorizations
  each_monomial_up_to(3, 5, [&](const Monomial& m) {
    if (!N.contains(m)) return;
    Decomposition d = decompose(N, m);
    CHECK(d.g * d.y == m);
    if (!d.y.is_one()) CHECK(d.g.max_index() <= d.y.min_index());
    std::size_t qualifying = 0;
    for (std::size_t i = 0; i < N.generator_count(); ++i) {
      const Monomial& g = N.generator(i);
      if (!divides(g, m)) continue;
      Monomial y = quotient(m, g);
      if (y.is_one() || g.max_index() <= y.min_index()) ++qualifying;
    }
    CHECK(qualifying == 1);
  });
}

TEST_CASE("decompose_product identities") {
  MonomialIdeal N = m2();
  CHECK(decompose_product(N, mono(N, "a"), mono(N, "b*c")) == mono(N, "a*b"));
  CHECK(decompose_product(N, mono(N, "1"), mono(N, "a*c")) == mono(N, "a*c"));
  CHECK(decompose_product(N, mono(N, "b"), mono(N, "c^2")) == mono(N, "b*c"));

  // associativity and max-monotonicity over random products in a random
  // stable corpus
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    MonomialIdeal R = random_stable_ideal(rng, 4, 4, 20);
    const std::size_t d = R.var_count();
    for (int s = 0; s < 20; ++s) {
      std::vector<Exponent> we(d, 0);
      for (std::size_t i = 0; i < d; ++i) we[i] = rng() % 3;
      Monomial w(we);
      const Monomial& g = R.generator(rng() % R.generator_count());
      std::vector<Exponent> ye(d, 0);
      for (std::size_t i = 0; i < d; ++i) ye[i] = rng() % 2;
      Monomial m = g * Monomial(ye);

      Monomial lhs = decompose_product(R, w, m);  // re-checks both identities
      CHECK(lhs == decompose(R, w * m).g);
      CHECK(lhs.max_index() <= decompose(R, m).g.max_index());
    }
  }
}

TEST_CASE("generator-level stability is exhaustive at low degree") {
  std::mt19937_64 rng(23);
  std::vector<MonomialIdeal> sample{m2(), square(), principal()};
  for (int t = 0; t < 10; ++t) sample.push_back(random_stable_ideal(rng, 3, 3, 12));
  for (const MonomialIdeal& N : sample) {
    REQUIRE(is_stable(N));
    std::uint32_t maxdeg = 0;
    for (const Monomial& g : N.generators())
      maxdeg = std::max<std::uint32_t>(maxdeg, static_cast<std::uint32_t>(g.total_degree()));
    each_monomial_up_to(N.var_count(), maxdeg + 1, [&](const Monomial& m) {
      if (!N.contains(m)) return;
      const std::size_t r = m.max_index();
      for (std::size_t i = 1; i < r; ++i)
        CHECK(N.contains(m.times_var(i).div_var(r)));
    });
  }
}

TEST_CASE("text and JSON input formats") {
  MonomialIdeal N = parse_ideal_text("vars: a b c\n\n# comment\na^2  \nb*c\n");
  CHECK(N.generator_count() == 2);
  CHECK(N.var_names() == std::vector<std::string>{"a", "b", "c"});

  MonomialIdeal J = parse_ideal_text(R"({"vars": ["a","b"], "gens": [[2,0],[1,1]]})");
  CHECK(J.generator_count() == 2);
  CHECK(J.generator(0) == Monomial({1, 1}));

  try {
    parse_ideal_text("vars: a b\nq\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ideal_text("a^2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("vars: a a\na\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text(""), ParseError);
  CHECK_THROWS_AS(parse_ideal_text(R"({"vars": ["a"], "gens": [[1,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("vars: a b\n1\n"), ParseError);
}

}  // TEST_SUITE
