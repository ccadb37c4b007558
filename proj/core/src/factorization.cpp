#include "fermat/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace fermat {

namespace {

bool is_power_of(Integer n, const Integer& base) {
  if (n <= 0) return false;
  while (n % base == 0) n /= base;
  return n == 1;
}

IdealPart assemble(const Ring& ring, std::vector<PrimeFactor> primes) {
  Ideal ideal = Ideal::unit(ring);
  for (const auto& pf : primes) ideal = ideal_product(ideal, ideal_power(pf.prime.lattice, pf.exponent));
  return {std::move(ideal), std::move(primes)};
}

unsigned d_valuation(const Integer& D, const Integer& q) {
  return mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()) ? valuation(D, q) : 0;
}

}  // namespace

Integer power_sum(unsigned r, const Integer& x, const Integer& y) { return pow(x, r) + pow(y, r); }

SolutionContext SolutionContext::make(unsigned r, const Integer& x, const Integer& y, unsigned p, const Integer& D,
                                      const Integer& z, const FactorBudget& budget) {
  if (r <= 5 || !is_prime(static_cast<std::uint64_t>(r))) throw InvalidInput("r must be a prime greater than 5");
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be a prime >= 5");
  if (p == r) throw InvalidInput("p must differ from r");
  if (x == 0 && y == 0) throw InvalidInput("x and y are both zero");
  if (gcd(x, y) != 1) throw InvalidInput("x and y are not coprime");
  if (D == 0) throw InvalidInput("D must be nonzero");
  if (gcd(D, Integer(r)) != 1) throw InvalidInput("gcd(D, r) != 1");
  if (D * pow(z, p) != power_sum(r, x, y)) throw InvalidInput("D * z^p != x^r + y^r");
  if (!is_power_free(D, p, budget)) throw InvalidInput("D contains a p-th power");

  SolutionContext ctx;
  ctx.r = r;
  ctx.x = x;
  ctx.y = y;
  ctx.p = p;
  ctx.D = D;
  ctx.z = z;
  ctx.is_trivial = abs(x * y * z) <= 1;
  ctx.r_divides_z = z % r == 0;
  return ctx;
}

RingElement FactorProfile::product() const {
  RingElement out(ring, x_plus_y());
  for (std::size_t j = 1; j < factors.size(); ++j) out *= factors[j];
  return out;
}

bool FactorProfile::beta_profile_constant() const {
  return std::all_of(beta_vals.begin() + 1, beta_vals.end(), [&](unsigned v) { return v == beta_vals[1]; });
}

FactorProfile build_factors(const Ring& ring, const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw InvalidInput("x and y are both zero");
  if (gcd(x, y) != 1) throw InvalidInput("x and y are not coprime");
  if (x + y == 0) throw InvalidInput("x + y = 0 makes x^r + y^r vanish");

  const unsigned d = ring->degree();
  FactorProfile profile;
  profile.ring = ring;
  profile.x = x;
  profile.y = y;
  profile.factors.reserve(d + 1);
  profile.factors.emplace_back(ring, Integer((x + y) * (x + y)));
  const Integer sum_sq = x * x + y * y;
  const Integer xy = x * y;
  for (unsigned j = 1; j <= d; ++j) {
    RingElement fj = alpha_element(ring, j) * xy;
    fj += RingElement(ring, sum_sq);
    profile.factors.push_back(std::move(fj));
  }
  profile.beta_vals.reserve(d + 1);
  for (const auto& f : profile.factors) profile.beta_vals.push_back(beta_valuation(f));
  profile.e = profile.beta_vals[1];
  profile.x_plus_y_r_valuation = valuation(x + y, Integer(ring->r()));
  return profile;
}

CoprimalityReport verify_pairwise_coprimality(const FactorProfile& profile) {
  const Integer r(profile.ring->r());
  std::vector<Ideal> ideals;
  ideals.reserve(profile.factors.size());
  for (const auto& f : profile.factors) ideals.push_back(principal_ideal(f));

  CoprimalityReport report;
  for (unsigned i = 0; i < ideals.size(); ++i) {
    for (unsigned j = i + 1; j < ideals.size(); ++j) {
      PairGcd pair{i, j, ideal_sum(ideals[i], ideals[j]).norm(), false};
      pair.is_r_power = is_power_of(pair.gcd_norm, r);
      report.all_r_powers = report.all_r_powers && pair.is_r_power;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

DecompositionError::DecompositionError(unsigned factor_index, Integer q, std::string prime, unsigned exponent,
                                       unsigned d_exponent, unsigned p)
    : InvalidInput("factor " + std::to_string(factor_index) + ": prime " + prime + " occurs to exponent " +
                   std::to_string(exponent) + " with D-part exponent " + std::to_string(d_exponent) +
                   "; the remainder is not divisible by p = " + std::to_string(p)),
      factor_index_(factor_index),
      q_(std::move(q)),
      prime_(std::move(prime)),
      exponent_(exponent),
      d_exponent_(d_exponent),
      p_(p) {}

FactorDecomposition decompose_factors(const FactorProfile& profile, const Integer& D, unsigned p,
                                      const FactorBudget& budget) {
  if (D == 0) throw InvalidInput("D must be nonzero");
  if (p == 0) throw InvalidInput("p must be positive");
  const Ring& ring = profile.ring;
  const Integer r(ring->r());
  const unsigned d = ring->degree();

  FactorDecomposition out;
  out.p = p;
  out.e = profile.e;

  auto split = [&](unsigned index, const PrimeFactor& pf, std::vector<PrimeFactor>& i_primes,
                   std::vector<PrimeFactor>& d_primes) {
    // Every prime above q | D is unramified, so v_P(D) = v_q(D).
    const unsigned dv = d_valuation(D, pf.prime.q);
    if (pf.exponent < dv || (pf.exponent - dv) % p != 0) {
      throw DecompositionError(index, pf.prime.q, pf.prime.to_string(), pf.exponent, dv, p);
    }
    if ((pf.exponent - dv) / p > 0) i_primes.push_back({pf.prime, (pf.exponent - dv) / p});
    if (dv > 0) d_primes.push_back({pf.prime, dv});
  };

  // x + y is a rational integer: every prime above q divides it to v_q(x+y).
  {
    const Integer n = profile.x_plus_y();
    std::vector<PrimeFactor> i_primes, d_primes;
    out.e0_r = profile.x_plus_y_r_valuation;
    out.e0_beta = d * out.e0_r;
    if (abs(n) != 1) {
      for (const auto& pp : factor_integer(n, budget)) {
        if (pp.prime == r) continue;
        for (const auto& above : factor_rational_prime(ring, pp.prime)) {
          split(0, PrimeFactor{above.prime, pp.exponent}, i_primes, d_primes);
        }
      }
    }
    out.parts.push_back({0, assemble(ring, std::move(i_primes)), assemble(ring, std::move(d_primes)), out.e0_r});
  }

  for (unsigned j = 1; j <= d; ++j) {
    std::vector<PrimeFactor> i_primes, d_primes;
    for (const auto& pf : factor_element(profile.factors[j], budget)) {
      if (pf.prime.is_beta()) continue;
      split(j, pf, i_primes, d_primes);
    }
    out.parts.push_back({j, assemble(ring, std::move(i_primes)), assemble(ring, std::move(d_primes)),
                         profile.beta_vals[j]});
  }
  return out;
}

DecompositionCheck check_decomposition(const FactorProfile& profile, const FactorDecomposition& decomposition,
                                       const Integer& D) {
  const Ring& ring = profile.ring;
  const PrimeIdeal beta = beta_ideal(ring);
  const Ideal r_ideal = principal_ideal(RingElement(ring, Integer(ring->r())));

  DecompositionCheck check;
  check.reconstructs = true;
  check.i_parts_prime_to_beta = true;
  check.i_parts_coprime = true;
  Ideal d_product = Ideal::unit(ring);
  for (const auto& part : decomposition.parts) {
    const Ideal ramified = part.index == 0 ? ideal_power(r_ideal, part.ramified_exponent)
                                           : ideal_power(beta.lattice, part.ramified_exponent);
    const Ideal rebuilt =
        ideal_product(ideal_product(ideal_power(part.i_part.ideal, decomposition.p), part.d_part.ideal), ramified);
    const RingElement target =
        part.index == 0 ? RingElement(ring, profile.x_plus_y()) : profile.factors[part.index];
    check.reconstructs = check.reconstructs && rebuilt == principal_ideal(target);
    check.i_parts_prime_to_beta = check.i_parts_prime_to_beta && valuation_at(beta, part.i_part.ideal) == 0;
    d_product = ideal_product(d_product, part.d_part.ideal);
  }
  for (std::size_t a = 0; a < decomposition.parts.size(); ++a) {
    for (std::size_t b = a + 1; b < decomposition.parts.size(); ++b) {
      const Ideal sum = ideal_sum(decomposition.parts[a].i_part.ideal, decomposition.parts[b].i_part.ideal);
      check.i_parts_coprime = check.i_parts_coprime && sum.is_unit();
    }
  }
  check.d_product_matches = d_product == principal_ideal(RingElement(ring, D));
  return check;
}

bool valuation_balance_check(const FactorProfile& profile, unsigned p, const Integer& z) {
  const unsigned d = profile.ring->degree();
  const unsigned z_beta = z == 0 ? 0 : d * valuation(z, Integer(profile.ring->r()));
  unsigned rhs = profile.x_plus_y_beta_valuation();
  for (std::size_t j = 1; j < profile.beta_vals.size(); ++j) rhs += profile.beta_vals[j];
  return p * z_beta == rhs;
}

}  // namespace fermat
