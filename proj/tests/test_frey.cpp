#include <doctest.h>

#include "fermat/error.hpp"
#include "fermat/frey.hpp"
#include "oracles.hpp"

using namespace fermat;

namespace {

const Integer kFixtureX(2402);
const Integer kFixtureY(-1);

bool coprime_pair(long x, long y) { return gcd(Integer(x), Integer(y)) == 1 && x + y != 0; }

}  // namespace

TEST_CASE("invariants of a small curve") {
  const auto ring = RingContext::build(7);
  const RingElement one(ring, Integer(1));
  const auto inv = curve_invariants(one, one);
  CHECK(inv.c4 == RingElement(ring, Integer(48)));
  CHECK(inv.c6.is_zero());
  CHECK(inv.disc == RingElement(ring, Integer(64)));
  // j = 48^3 / 64 = 1728
  CHECK(inv.j_num == inv.j_den * Integer(1728));
  CHECK_THROWS_AS(curve_invariants(one, -one), DegenerateCurve);
  CHECK_THROWS_AS(curve_invariants(RingElement(ring, Integer(0)), one), DegenerateCurve);
}

TEST_CASE("closed forms agree with the general Weierstrass formulas") {
  oracle::ElementSource source(123);
  int compared = 0;
  for (unsigned r : {7u, 11u, 13u}) {
    const auto ring = RingContext::build(r);
    for (int trial = 0; trial < 34; ++trial) {
      const RingElement A = source.next_nonzero(ring, 15);
      const RingElement B = source.next_nonzero(ring, 15);
      if ((A + B).is_zero()) continue;
      const auto closed = curve_invariants(A, B);
      const auto generic = legendre_model(A, B).invariants();
      CHECK(closed.c4 == generic.c4);
      CHECK(closed.c6 == generic.c6);
      CHECK(closed.disc == generic.disc);
      CHECK(closed.c4.pow(3) - closed.c6 * closed.c6 == closed.disc * Integer(1728));
      CHECK(j_lambda_identity(A, B, closed));
      ++compared;
    }
  }
  CHECK(compared >= 100);
}

TEST_CASE("type-1 curves") {
  const auto ring = RingContext::build(7);

  SUBCASE("relation and beta valuations") {
    for (long x = -10; x <= 10; ++x) {
      for (long y = -10; y <= 10; ++y) {
        if (!coprime_pair(x, y) || x * y == 0) continue;
        const auto profile = build_factors(ring, Integer(x), Integer(y));
        const auto curve = frey_type1(profile);
        CHECK((curve.A + curve.B + curve.C).is_zero());
        const auto v = curve.beta_valuations();
        const unsigned t = profile.e + 1;
        CHECK(v.A == t);
        CHECK(v.B == t);
        CHECK(v.C == t);
      }
    }
  }
  SUBCASE("j / lambda report") {
    for (auto [x, y] : {std::pair{2L, 1L}, std::pair{3L, 4L}, std::pair{5L, -2L}}) {
      CAPTURE(x);
      CAPTURE(y);
      const auto profile = build_factors(ring, Integer(x), Integer(y));
      const auto report = j_lambda_check(frey_type1(profile), profile);
      CHECK(report.invariant_form);
      CHECK(report.lambda_form);
      CHECK(report.ratio_relation);
      CHECK_FALSE(report.ratio_relation_unsigned);
    }
  }
  SUBCASE("x = 1, y = 0 is degenerate only through the profile") {
    const auto profile = build_factors(ring, Integer(1), Integer(0));
    // f_j = 1 for every j, so A, B, C are the alpha differences.
    const auto curve = frey_type1(profile);
    CHECK(curve.beta_valuations().A == 1);
  }
}

TEST_CASE("type-2 curve on the (2402, -1) fixture") {
  const auto ring = RingContext::build(7);
  const auto profile = build_factors(ring, kFixtureX, kFixtureY);
  const auto curve = frey_type2(profile, 5, Integer(7));
  CHECK(curve.k == 1);
  CHECK((curve.A + curve.B + curve.C).is_zero());
  const auto v = curve.beta_valuations();
  CHECK(v.A == 25);
  CHECK(v.B == 2);
  CHECK(v.C == 2);
  const auto expected = expected_type2_valuations(7, 5, 1);
  CHECK(expected.A == 25);
  CHECK(expected.B == 2);
  CHECK(expected.C == 2);

  const auto j = j_beta_valuation(curve, 5, 1);
  CHECK(j.computed == -46);
  CHECK(j.predicted == -46);
  CHECK(j.matches());
  CHECK(inertia_criterion(j.computed, 5));

  CHECK_THROWS_AS(frey_type2(profile, 5, Integer(3)), InvalidInput);
  CHECK_THROWS_AS(j_beta_valuation(frey_type1(profile), 5, 1), InvalidInput);
  CHECK_THROWS_AS(j_beta_valuation(curve, 1, 1), InvalidInput);
  CHECK_THROWS_AS(j_lambda_check(curve, profile), InvalidInput);
}

TEST_CASE("predicted j valuation") {
  CHECK(predicted_j_beta_valuation(7, 5, 1) == -46);
  CHECK(predicted_j_beta_valuation(7, 11, 1) == -118);
  CHECK(predicted_j_beta_valuation(11, 5, 1) == -78);
  for (unsigned r : {7u, 11u, 13u}) {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
      if (p == r) continue;
      const auto e = expected_type2_valuations(r, p, 1);
      // v(c4) = 4 and v(disc) = 2(vA + vB + vC) at beta.
      CHECK(predicted_j_beta_valuation(r, p, 1) == 3 * 4 - 2 * static_cast<long>(e.A + e.B + e.C));
    }
  }
}

TEST_CASE("inertia and Eichler-Shimura") {
  CHECK(inertia_criterion(-46, 5));
  CHECK_FALSE(inertia_criterion(-10, 5));
  CHECK_FALSE(inertia_criterion(4, 5));
  CHECK_FALSE(inertia_criterion(0, 5));

  CHECK(eichler_shimura_condition(7, 5));
  CHECK_FALSE(eichler_shimura_condition(11, 5));
  CHECK_FALSE(eichler_shimura_condition(13, 7));
  CHECK(eichler_shimura_condition(13, 5));
}

TEST_CASE("reduction types") {
  const auto ring = RingContext::build(7);
  const auto profile = build_factors(ring, Integer(2), Integer(1));
  const auto curve = frey_type1(profile);
  for (const auto& pf : factor_rational_prime(ring, Integer(13))) {
    CHECK(reduction_type(curve, pf.prime).kind == Reduction::Good);
  }
  for (const auto& pf : factor_rational_prime(ring, Integer(43))) {
    const auto red = reduction_type(curve, pf.prime);
    CHECK(red.kind == Reduction::Multiplicative);
    CHECK(red.disc_valuation == 2);
  }
  CHECK_THROWS_AS(reduction_type(curve, factor_rational_prime(ring, Integer(2))[0].prime), InvalidInput);
  CHECK_THROWS_AS(reduction_type(curve, beta_ideal(ring)), InvalidInput);
}

TEST_CASE("semistability away from 2 and beta") {
  const auto ring = RingContext::build(7);
  for (long x = -10; x <= 10; ++x) {
    for (long y = -10; y <= 10; ++y) {
      if (!coprime_pair(x, y) || x * y == 0) continue;
      CAPTURE(x);
      CAPTURE(y);
      const auto curve = frey_type1(build_factors(ring, Integer(x), Integer(y)));
      const auto data = level_data(curve, Integer(1), 5);
      CHECK(data.additive_primes.empty());
      for (const auto& bp : data.bad_primes) {
        CHECK(bp.reduction.kind == Reduction::Multiplicative);
        const RingElement abc = curve.A * curve.B * curve.C;
        CHECK(bp.reduction.disc_valuation == 2 * valuation_at(bp.prime, abc));
        CHECK(bp.in_mp == (bp.reduction.disc_valuation % 5 == 0));
      }
    }
  }
}

TEST_CASE("level data") {
  const auto ring = RingContext::build(7);
  const auto curve = frey_type1(build_factors(ring, Integer(2), Integer(1)));
  const auto data = level_data(curve, Integer(129), 5);
  CHECK(data.mp_primes().empty());
  CHECK(data.multiplicative_primes().size() == 3);
  CHECK(data.d_radical.norm() == pow(Integer(43), 3));
  CHECK(d_radical_divides_D(data, Integer(129)));
  CHECK_FALSE(d_radical_divides_D(data, Integer(3)));
  CHECK(data.beta_exponent_range.low == 0);
  CHECK(data.beta_exponent_range.high == 2);
  REQUIRE(data.two_adic_ranges.size() == 1);
  CHECK(data.two_adic_ranges[0].range.high == 8);
}
