#include <doctest.h>

#include "fermat/error.hpp"
#include "fermat/integer.hpp"
#include "fermat/poly_mod.hpp"
#include "oracles.hpp"

using namespace fermat;

TEST_CASE("factor_integer") {
  using PP = PrimePower;
  CHECK(factor_integer(Integer(18571)) == std::vector<PP>{{7, 2}, {379, 1}});
  CHECK(factor_integer(Integer(-129)) == std::vector<PP>{{3, 1}, {43, 1}});
  CHECK(factor_integer(Integer(1)).empty());
  CHECK_THROWS_AS(factor_integer(Integer(0)), InvalidInput);

  // 2402^7 - 1 = 7^5 * 29 * 2286803 * 413898707503
  const Integer v = pow(Integer(2402), 7) - 1;
  const auto fac = factor_integer(v);
  REQUIRE(fac.size() == 4);
  CHECK(fac[0] == PP{7, 5});
  CHECK(fac[1] == PP{29, 1});
  CHECK(fac[2] == PP{2286803, 1});
  CHECK(fac[3] == PP{Integer("413898707503"), 1});

  // Semiprime with two ~40-bit factors needs rho, not trial division.
  const Integer a("1099511627791"), b("1099511627803");
  REQUIRE(is_prime(a));
  REQUIRE(is_prime(b));
  CHECK(factor_integer(a * b * 9) == std::vector<PP>{{3, 2}, {a, 1}, {b, 1}});
}

TEST_CASE("factor budget is enforced") {
  const Integer a("1099511627791"), b("1099511627803");
  FactorBudget tight;
  tight.rho_iterations = 16;
  CHECK_THROWS_AS(factor_integer(a * b, tight), DeskScaleExceeded);
}

TEST_CASE("integer helpers") {
  CHECK(valuation(Integer(18571), Integer(7)) == 2);
  CHECK(valuation(Integer(-2401), Integer(7)) == 4);
  CHECK_THROWS_AS(valuation(Integer(0), Integer(7)), InvalidInput);
  CHECK(exact_root(Integer(-32), 5) == Integer(-2));
  CHECK_FALSE(exact_root(Integer(33), 5).has_value());
  CHECK(radical(Integer(-72)) == 6);
  CHECK(is_power_free(Integer(129), 5));
  CHECK_FALSE(is_power_free(Integer(3) * pow(Integer(7), 5), 5));
  CHECK(parse_integer("-2402") == -2402);
  CHECK_THROWS_AS(parse_integer("12x"), InvalidInput);
  CHECK(is_prime(std::uint64_t{2}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
}

TEST_CASE("polynomial factorization modulo q agrees with root search") {
  // psi_7 = t^3 + t^2 - 2t - 1
  const std::vector<Integer> psi{-1, -2, 1, 1};
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 29L, 41L, 43L, 97L}) {
    CAPTURE(q);
    const auto factors = polymod::factor(psi, Integer(q));
    unsigned total = 0, linear = 0;
    for (const auto& f : factors) {
      total += polymod::degree(f.factor) * f.multiplicity;
      if (polymod::degree(f.factor) == 1) linear += f.multiplicity;
    }
    CHECK(total == 3);
    const auto roots = oracle::roots_mod(psi, q);
    if (q == 7) {
      // (t - 2)^3 modulo 7.
      REQUIRE(factors.size() == 1);
      CHECK(factors[0].multiplicity == 3);
      CHECK(factors[0].factor == std::vector<Integer>{5, 1});
      CHECK(roots == std::vector<long>{2});
    } else {
      CHECK(linear == roots.size());
    }
  }
  // Product of the factors reconstructs the input.
  const Integer q(43);
  PolyModQ prod{1};
  for (const auto& f : polymod::factor(psi, q)) {
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = polymod::mul(prod, f.factor, q);
  }
  CHECK(prod == polymod::normalize(psi, q));
}

TEST_CASE("equal-degree splitting at a large prime") {
  // q = 413898707503 splits completely in Q(zeta_7)^+ since q = 1 mod 7.
  const std::vector<Integer> psi{-1, -2, 1, 1};
  const Integer q("413898707503");
  const auto factors = polymod::factor(psi, q);
  REQUIRE(factors.size() == 3);
  for (const auto& f : factors) {
    CHECK(polymod::degree(f.factor) == 1);
    // f = t + c means -c is a root.
    const Integer root = (q - f.factor[0]) % q;
    Integer value = ((root * root % q) * root + root * root - 2 * root - 1) % q;
    CHECK(value == 0);
  }
}
