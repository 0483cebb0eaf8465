#include <doctest.h>

#include <random>

#include "stabres/monomial.hpp"
#include "stabres/prime_field.hpp"

using namespace stabres;

TEST_SUITE("monomial") {

TEST_CASE("max and min index") {
  CHECK(Monomial({1, 1, 0}).max_index() == 2);  // ab
  CHECK(Monomial({0, 0, 0}).max_index() == 0);  // the constant monomial
  CHECK(Monomial({0, 0, 2}).max_index() == 3);  // c^2

  CHECK(Monomial({1, 1, 0}).min_index() == 1);
  CHECK(Monomial({0, 0, 0}).min_index() == 0);
  CHECK(Monomial({0, 1, 1}).min_index() == 2);  // bc
}

TEST_CASE("divides, multiply, quotient") {
  const Monomial ab({1, 1, 0});
  const Monomial abc({1, 1, 1});
  const Monomial a({1, 0, 0});
  const Monomial bc({0, 1, 1});

  CHECK(divides(ab, abc));
  CHECK_FALSE(divides(abc, ab));
  CHECK(a * bc == abc);
  CHECK(quotient(abc, ab) == Monomial({0, 0, 1}));
  CHECK_THROWS_AS(quotient(ab, abc), DomainError);
}

TEST_CASE("min below max away from the constant monomial") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Exponent> e(1 + rng() % 5, 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rng() % 4;
    Monomial m(e);
    if (m.is_one()) continue;
    CHECK(m.min_index() <= m.max_index());
  }
}

TEST_CASE("quotient undoes multiply") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng() % 5;
    std::vector<Exponent> ea(d), eb(d);
    for (std::size_t i = 0; i < d; ++i) {
      ea[i] = rng() % 5;
      eb[i] = rng() % 5;
    }
    Monomial a(ea), b(eb);
    CHECK(quotient(a * b, b) == a);
    // componentwise order agrees with divisibility
    CHECK(divides(a, a * b));
  }
}

TEST_CASE("string round trip") {
  const std::vector<std::string> vars{"a", "b", "c"};
  CHECK(format_monomial(Monomial({2, 1, 0}), vars) == "a^2*b");
  CHECK(format_monomial(Monomial({0, 0, 0}), vars) == "1");
  CHECK(parse_monomial("a^2*b", vars) == Monomial({2, 1, 0}));
  CHECK(parse_monomial("1", vars) == Monomial({0, 0, 0}));
  CHECK(parse_monomial("b*a*b", vars) == Monomial({1, 2, 0}));
  CHECK_THROWS_AS(parse_monomial("d", vars), ParseError);
  CHECK_THROWS_AS(parse_monomial("a^", vars), ParseError);
  CHECK_THROWS_AS(parse_monomial("", vars), ParseError);

  const std::vector<std::string> numbered{"x1", "x2"};
  CHECK(parse_monomial("x1^2*x2", numbered) == Monomial({2, 1}));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::vector<Exponent> e(3);
    for (auto& x : e) x = rng() % 6;
    Monomial m(e);
    CHECK(parse_monomial(format_monomial(m, vars), vars) == m);
  }
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(2), DomainError);

  PrimeField F(101);
  CHECK(F.add(100, 3) == 2);
  CHECK(F.sub(2, 5) == 98);
  CHECK(F.mul(50, 50) == (50 * 50) % 101);
  CHECK(F.from_int(-1) == 100);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("rank over the prime field") {
  PrimeField F;
  // 3x3 identity
  CHECK(rank_mod_p({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, F) == 3);
  // dependent rows
  CHECK(rank_mod_p({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, F) == 2);
  CHECK(rank_mod_p({{0, 0}, {0, 0}}, F) == 0);
  CHECK(rank_mod_p({}, F) == 0);
}

}  // TEST_SUITE
