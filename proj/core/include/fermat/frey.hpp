#pragma once

// Frey curves y^2 = x(x - A)(x + B) with A + B + C = 0 attached to a
// putative solution, their invariants, local reduction away from 2 and
// beta, level data and the inertia / Eichler-Shimura side conditions.

#include <optional>
#include <vector>

#include "fermat/factorization.hpp"
#include "fermat/ideal.hpp"
#include "fermat/ring.hpp"

namespace fermat {

enum class CurveKind { Type1, Type2 };

const char* to_string(CurveKind kind);

/// c4, c6, discriminant and j = j_num / j_den (j_num = c4^3, j_den = disc).
struct CurveInvariants {
  RingElement c4, c6, disc, j_num, j_den;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
  RingElement a1, a2, a3, a4, a6;

  /// Invariants from the general b2..b8 formulas.
  CurveInvariants invariants() const;
};

/// Closed forms for y^2 = x(x - A)(x + B), C = -A - B:
///   c4 = 16(A^2 + AB + B^2), c6 = -32(A - B)(B - C)(C - A), disc = 16(ABC)^2.
/// Throws DegenerateCurve when ABC = 0.
CurveInvariants curve_invariants(const RingElement& A, const RingElement& B);

/// The model (0, B - A, 0, -AB, 0) of y^2 = x(x - A)(x + B).
WeierstrassModel legendre_model(const RingElement& A, const RingElement& B);

struct BetaValuations {
  unsigned A = 0, B = 0, C = 0;
};

struct FreyCurve {
  CurveKind kind = CurveKind::Type1;
  RingElement A, B, C;
  CurveInvariants inv;
  /// Type 2 only: v_r(z) used at construction.
  unsigned k = 0;
  unsigned p = 0;

  BetaValuations beta_valuations() const;
};

/// A = (a3 - a2) f1, B = (a1 - a3) f2, C = (a2 - a1) f3.
FreyCurve frey_type1(const FactorProfile& profile);

/// A = (a1 - a2)(x + y)^2, B = (a2 - 2) f1, C = (2 - a1) f2.  Requires r | z.
FreyCurve frey_type2(const FactorProfile& profile, unsigned p, const Integer& z);

/// v_beta(A) = (pk - 1)(r - 1) + 1 and v_beta(B) = v_beta(C) = 2 for a type-2
/// curve built from a solution with v_r(z) = k.
BetaValuations expected_type2_valuations(unsigned r, unsigned p, unsigned k);

enum class Reduction { Good, Multiplicative, Additive };

const char* to_string(Reduction reduction);

struct ReductionType {
  Reduction kind = Reduction::Good;
  unsigned disc_valuation = 0;
  unsigned c4_valuation = 0;
};

/// Reduction of the model at P, valid for P not above 2 and P != beta:
/// good iff v_P(disc) = 0, multiplicative iff v_P(disc) > 0 and v_P(c4) = 0.
ReductionType reduction_type(const FreyCurve& curve, const PrimeIdeal& prime);

struct ExponentRange {
  unsigned low = 0, high = 0;
};

struct BadPrime {
  PrimeIdeal prime;
  ReductionType reduction;
  bool in_mp = false;  ///< p | v_P(disc)
};

struct TwoAdicRange {
  PrimeIdeal prime;
  ExponentRange range;  ///< [0, 2 + 6 v_P(2)]
};

struct LevelData {
  /// Every odd non-beta prime dividing ABC, in factor order.
  std::vector<BadPrime> bad_primes;
  /// Primes with additive reduction (never expected).
  std::vector<BadPrime> additive_primes;
  /// Radical of the odd, non-beta, non-M_p part of the conductor.
  Ideal d_radical;
  ExponentRange beta_exponent_range{0, 2};
  std::vector<TwoAdicRange> two_adic_ranges;

  std::vector<const BadPrime*> mp_primes() const;
  std::vector<const BadPrime*> multiplicative_primes() const;
};

LevelData level_data(const FreyCurve& curve, const Integer& D, unsigned p, const FactorBudget& budget = {});

/// True when d_radical divides the radical of (D).
bool d_radical_divides_D(const LevelData& data, const Integer& D, const FactorBudget& budget = {});

/// 2 - 2(pk - 1)(r - 1).
long predicted_j_beta_valuation(unsigned r, unsigned p, unsigned k);

struct JValuation {
  long computed = 0;   ///< v_beta(c4^3) - v_beta(disc)
  long predicted = 0;  ///< closed form in r, p, k
  bool matches() const { return computed == predicted; }
};

/// Throws InvalidInput for a type-1 curve or pk <= 1.
JValuation j_beta_valuation(const FreyCurve& curve, unsigned p, unsigned k);

/// v < 0 and p does not divide v.
bool inertia_criterion(long j_valuation, unsigned p);

/// p divides neither r - 1 nor r + 1 (Norm(beta) = r).
bool eichler_shimura_condition(unsigned r, unsigned p);

struct JLambdaReport {
  /// j * (ABC)^2 == 2^8 (A^2 + AB + B^2)^3
  bool invariant_form = false;
  /// j lambda^2 (lambda - 1)^2 == 2^8 (lambda^2 - lambda + 1)^3 with lambda = -A/B,
  /// cleared of denominators.
  bool lambda_form = false;
  /// f1 / f2 == -lambda (a1 - a3)/(a3 - a2)
  bool ratio_relation = false;
  /// The same ratio relation without the sign; false on every nondegenerate input.
  bool ratio_relation_unsigned = false;
};

/// Throws InvalidInput for a type-2 curve and DegenerateCurve for B = 0.
JLambdaReport j_lambda_check(const FreyCurve& curve, const FactorProfile& profile);

/// The lambda-form identity alone, for arbitrary nondegenerate (A, B).
bool j_lambda_identity(const RingElement& A, const RingElement& B, const CurveInvariants& inv);

}  // namespace fermat
