#pragma once

// Factorization of x^r + y^r over O_K:
//   x^r + y^r = (x + y) * prod_{j=1..d} f_j,   f_j = x^2 + y^2 + alpha_j*x*y,
// the beta-adic profile of the factors, and their ideal decomposition
//   (f_j) = I_j^p D_j beta^e,   (x + y) = I_0^p D_0 (r)^e0.

#include <optional>
#include <vector>

#include "fermat/error.hpp"
#include "fermat/ideal.hpp"
#include "fermat/integer.hpp"
#include "fermat/ring.hpp"

namespace fermat {

/// A candidate solution of x^r + y^r = D z^p.
struct SolutionContext {
  unsigned r = 0;
  Integer x, y;
  unsigned p = 0;
  Integer D, z;
  bool is_trivial = false;   ///< |xyz| <= 1
  bool r_divides_z = false;

  /// Validates every invariant: r prime > 5, p prime >= 5 with p != r,
  /// gcd(x, y) = 1, D z^p = x^r + y^r, gcd(D, r) = 1 and D p-th-power free.
  /// Throws InvalidInput naming the first violated condition.
  static SolutionContext make(unsigned r, const Integer& x, const Integer& y, unsigned p, const Integer& D,
                              const Integer& z, const FactorBudget& budget = {});
};

/// x^r + y^r.
Integer power_sum(unsigned r, const Integer& x, const Integer& y);

struct FactorProfile {
  Ring ring;
  Integer x, y;
  /// factors[0] = (x+y)^2, factors[j] = f_j for 1 <= j <= d.
  std::vector<RingElement> factors;
  /// beta_vals[j] = v_beta(factors[j]).
  std::vector<unsigned> beta_vals;
  /// Common v_beta(f_j) for j >= 1 (0 or 1 on coprime input).
  unsigned e = 0;
  /// v_r(x + y); the beta-side valuation of x + y is d times this.
  unsigned x_plus_y_r_valuation = 0;

  Integer x_plus_y() const { return x + y; }
  unsigned x_plus_y_beta_valuation() const { return ring->degree() * x_plus_y_r_valuation; }
  /// (x + y) * prod_{j>=1} f_j, computed in O_K.
  RingElement product() const;
  /// True when all v_beta(f_j), j >= 1, agree.
  bool beta_profile_constant() const;
};

/// Throws InvalidInput for (0, 0), non-coprime pairs and x + y = 0.
FactorProfile build_factors(const Ring& ring, const Integer& x, const Integer& y);

struct PairGcd {
  unsigned i = 0, j = 0;
  Integer gcd_norm;
  bool is_r_power = false;
};

struct CoprimalityReport {
  std::vector<PairGcd> pairs;
  bool all_r_powers = true;
};

/// Norm of (f_i) + (f_j) for every 0 <= i < j <= d.
CoprimalityReport verify_pairwise_coprimality(const FactorProfile& profile);

struct IdealPart {
  Ideal ideal;
  /// Prime-by-prime exponents making up `ideal`.
  std::vector<PrimeFactor> primes;
};

struct FactorPart {
  unsigned index = 0;  ///< 0 for x + y, j for f_j
  IdealPart i_part;    ///< I_j (enters the factor to the power p)
  IdealPart d_part;    ///< D_j
  /// j >= 1: beta-exponent e.  j = 0: exponent e0 of (r).
  unsigned ramified_exponent = 0;
};

struct FactorDecomposition {
  std::vector<FactorPart> parts;  ///< parts[0] is x + y
  unsigned p = 0;
  unsigned e = 0;
  unsigned e0_r = 0;     ///< exponent of (r) in (x + y)
  unsigned e0_beta = 0;  ///< exponent of beta in (x + y), = d * e0_r
};

/// The factor in question cannot be written as I^p * D-part * ramified part:
/// a prime outside D appears to an exponent not divisible by p.
class DecompositionError : public InvalidInput {
 public:
  DecompositionError(unsigned factor_index, Integer q, std::string prime, unsigned exponent, unsigned d_exponent,
                     unsigned p);

  unsigned factor_index() const { return factor_index_; }
  const Integer& q() const { return q_; }
  const std::string& prime() const { return prime_; }
  unsigned exponent() const { return exponent_; }
  unsigned d_exponent() const { return d_exponent_; }
  unsigned p() const { return p_; }

 private:
  unsigned factor_index_;
  Integer q_;
  std::string prime_;
  unsigned exponent_, d_exponent_, p_;
};

FactorDecomposition decompose_factors(const FactorProfile& profile, const Integer& D, unsigned p,
                                      const FactorBudget& budget = {});

struct DecompositionCheck {
  bool reconstructs = false;      ///< I^p * D-part * ramified part == factor, every index
  bool i_parts_coprime = false;   ///< pairwise sums are the unit ideal
  bool i_parts_prime_to_beta = false;
  bool d_product_matches = false; ///< prod D_k == (D)
};

DecompositionCheck check_decomposition(const FactorProfile& profile, const FactorDecomposition& decomposition,
                                       const Integer& D);

/// p * v_beta(z) == v_beta(x + y) + sum_{j>=1} v_beta(f_j).
bool valuation_balance_check(const FactorProfile& profile, unsigned p, const Integer& z);

}  // namespace fermat
