#include "fermat/frey.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fermat/error.hpp"

namespace fermat {

namespace {

RingElement constant(const Ring& ring, long value) { return RingElement(ring, Integer(value)); }

RingElement alpha_diff(const Ring& ring, unsigned i, unsigned j) {
  return alpha_element(ring, i) - alpha_element(ring, j);
}

FreyCurve assemble(CurveKind kind, RingElement A, RingElement B, RingElement C) {
  if (!(A + B + C).is_zero()) throw Error("Frey relation A + B + C = 0 failed");
  CurveInvariants inv = curve_invariants(A, B);
  return FreyCurve{kind, std::move(A), std::move(B), std::move(C), std::move(inv), 0, 0};
}

}  // namespace

const char* to_string(CurveKind kind) { return kind == CurveKind::Type1 ? "type1" : "type2"; }

const char* to_string(Reduction reduction) {
  switch (reduction) {
    case Reduction::Good:
      return "good";
    case Reduction::Multiplicative:
      return "multiplicative";
    case Reduction::Additive:
      return "additive";
  }
  return "unknown";
}

CurveInvariants WeierstrassModel::invariants() const {
  const Ring& ring = a1.ring();
  const RingElement b2 = a1 * a1 + constant(ring, 4) * a2;
  const RingElement b4 = constant(ring, 2) * a4 + a1 * a3;
  const RingElement b6 = a3 * a3 + constant(ring, 4) * a6;
  const RingElement b8 = a1 * a1 * a6 + constant(ring, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  RingElement c4 = b2 * b2 - constant(ring, 24) * b4;
  RingElement c6 = -(b2 * b2 * b2) + constant(ring, 36) * b2 * b4 - constant(ring, 216) * b6;
  RingElement disc = -(b2 * b2 * b8) - constant(ring, 8) * b4 * b4 * b4 - constant(ring, 27) * b6 * b6 +
                     constant(ring, 9) * b2 * b4 * b6;
  RingElement j_num = c4.pow(3);
  RingElement j_den = disc;
  return {std::move(c4), std::move(c6), std::move(disc), std::move(j_num), std::move(j_den)};
}

WeierstrassModel legendre_model(const RingElement& A, const RingElement& B) {
  const Ring& ring = A.ring();
  const RingElement zero = constant(ring, 0);
  return {zero, B - A, zero, -(A * B), zero};
}

CurveInvariants curve_invariants(const RingElement& A, const RingElement& B) {
  require_same_ring(A.ring(), B.ring());
  const Ring& ring = A.ring();
  const RingElement C = -(A + B);
  const RingElement abc = A * B * C;
  if (abc.is_zero()) throw DegenerateCurve("ABC = 0: the Frey curve is singular");
  RingElement c4 = constant(ring, 16) * (A * A + A * B + B * B);
  RingElement c6 = constant(ring, -32) * (A - B) * (B - C) * (C - A);
  RingElement disc = constant(ring, 16) * abc * abc;
  RingElement j_num = c4.pow(3);
  RingElement j_den = disc;
  return {std::move(c4), std::move(c6), std::move(disc), std::move(j_num), std::move(j_den)};
}

BetaValuations FreyCurve::beta_valuations() const {
  return {beta_valuation(A), beta_valuation(B), beta_valuation(C)};
}

FreyCurve frey_type1(const FactorProfile& profile) {
  const Ring& ring = profile.ring;
  if (ring->degree() < 3) throw InvalidInput("type-1 Frey curve needs alpha_3");
  return assemble(CurveKind::Type1, alpha_diff(ring, 3, 2) * profile.factors[1],
                  alpha_diff(ring, 1, 3) * profile.factors[2], alpha_diff(ring, 2, 1) * profile.factors[3]);
}

FreyCurve frey_type2(const FactorProfile& profile, unsigned p, const Integer& z) {
  const Ring& ring = profile.ring;
  const Integer r(ring->r());
  if (z == 0 || z % r != 0) throw InvalidInput("type-2 Frey curve requires r | z");
  const RingElement two = constant(ring, 2);
  FreyCurve curve = assemble(CurveKind::Type2, alpha_diff(ring, 1, 2) * profile.factors[0],
                             (alpha_element(ring, 2) - two) * profile.factors[1],
                             (two - alpha_element(ring, 1)) * profile.factors[2]);
  curve.k = valuation(z, r);
  curve.p = p;
  return curve;
}

BetaValuations expected_type2_valuations(unsigned r, unsigned p, unsigned k) {
  return {(p * k - 1) * (r - 1) + 1, 2, 2};
}

ReductionType reduction_type(const FreyCurve& curve, const PrimeIdeal& prime) {
  if (prime.q == 2) throw InvalidInput("reduction type is not classified at primes above 2");
  if (prime.is_beta()) throw InvalidInput("reduction type is not classified at beta");
  ReductionType out;
  out.disc_valuation = valuation_at(prime, curve.inv.disc);
  if (out.disc_valuation == 0) return out;
  out.c4_valuation = valuation_at(prime, curve.inv.c4);
  out.kind = out.c4_valuation == 0 ? Reduction::Multiplicative : Reduction::Additive;
  return out;
}

std::vector<const BadPrime*> LevelData::mp_primes() const {
  std::vector<const BadPrime*> out;
  for (const auto& bp : bad_primes) {
    if (bp.in_mp) out.push_back(&bp);
  }
  return out;
}

std::vector<const BadPrime*> LevelData::multiplicative_primes() const {
  std::vector<const BadPrime*> out;
  for (const auto& bp : bad_primes) {
    if (bp.reduction.kind == Reduction::Multiplicative) out.push_back(&bp);
  }
  return out;
}

LevelData level_data(const FreyCurve& curve, const Integer& D, unsigned p, const FactorBudget& budget) {
  if (p == 0) throw InvalidInput("p must be positive");
  if (D == 0) throw InvalidInput("D must be nonzero");
  const Ring& ring = curve.A.ring();
  const Integer r(ring->r());

  std::set<Integer> rational_primes;
  for (const RingElement* term : {&curve.A, &curve.B, &curve.C}) {
    for (const auto& pp : factor_integer(norm(*term), budget)) {
      if (pp.prime != 2 && pp.prime != r) rational_primes.insert(pp.prime);
    }
  }

  LevelData data{{}, {}, Ideal::unit(ring), {0, 2}, {}};
  for (const Integer& q : rational_primes) {
    for (const auto& above : factor_rational_prime(ring, q)) {
      const ReductionType red = reduction_type(curve, above.prime);
      if (red.kind == Reduction::Good) continue;
      BadPrime bp{above.prime, red, red.kind == Reduction::Multiplicative && red.disc_valuation % p == 0};
      if (red.kind == Reduction::Additive) {
        data.additive_primes.push_back(bp);
      } else if (!bp.in_mp) {
        data.d_radical = ideal_product(data.d_radical, bp.prime.lattice);
      }
      data.bad_primes.push_back(std::move(bp));
    }
  }
  for (const auto& above : factor_rational_prime(ring, Integer(2))) {
    // 2 is unramified in K, so v_P(2) = e = 1.
    data.two_adic_ranges.push_back({above.prime, {0, 2 + 6 * above.prime.e}});
  }
  return data;
}

bool d_radical_divides_D(const LevelData& data, const Integer& D, const FactorBudget& budget) {
  const Ring& ring = data.d_radical.ring();
  return divides(data.d_radical, principal_ideal(RingElement(ring, radical(D, budget))));
}

long predicted_j_beta_valuation(unsigned r, unsigned p, unsigned k) {
  return 2 - 2 * (static_cast<long>(p) * k - 1) * (static_cast<long>(r) - 1);
}

JValuation j_beta_valuation(const FreyCurve& curve, unsigned p, unsigned k) {
  if (curve.kind != CurveKind::Type2) throw InvalidInput("j-valuation at beta is defined for type-2 curves");
  if (static_cast<unsigned long>(p) * k <= 1) throw InvalidInput("pk must exceed 1");
  if (curve.inv.c4.is_zero()) throw DegenerateCurve("c4 = 0");
  JValuation out;
  out.computed = 3 * static_cast<long>(beta_valuation(curve.inv.c4)) - static_cast<long>(beta_valuation(curve.inv.disc));
  out.predicted = predicted_j_beta_valuation(curve.A.ring()->r(), p, k);
  return out;
}

bool inertia_criterion(long j_valuation, unsigned p) {
  return j_valuation < 0 && j_valuation % static_cast<long>(p) != 0;
}

bool eichler_shimura_condition(unsigned r, unsigned p) { return (r - 1) % p != 0 && (r + 1) % p != 0; }

bool j_lambda_identity(const RingElement& A, const RingElement& B, const CurveInvariants& inv) {
  const Ring& ring = A.ring();
  const RingElement n = -A;
  const RingElement& m = B;
  const RingElement lhs = inv.j_num * n * n * (n - m) * (n - m) * m * m;
  const RingElement rhs = constant(ring, 256) * (n * n - n * m + m * m).pow(3) * inv.j_den;
  return lhs == rhs;
}

JLambdaReport j_lambda_check(const FreyCurve& curve, const FactorProfile& profile) {
  if (curve.kind != CurveKind::Type1) throw InvalidInput("the lambda check applies to type-1 curves");
  if (curve.B.is_zero()) throw DegenerateCurve("B = 0");
  const Ring& ring = curve.A.ring();
  const auto& A = curve.A;
  const auto& B = curve.B;
  const auto& C = curve.C;

  JLambdaReport out;
  const RingElement abc = A * B * C;
  out.invariant_form =
      curve.inv.j_num * abc * abc == constant(ring, 256) * (A * A + A * B + B * B).pow(3) * curve.inv.j_den;
  out.lambda_form = j_lambda_identity(A, B, curve.inv);

  const RingElement lhs = profile.factors[1] * B * alpha_diff(ring, 3, 2);
  const RingElement rhs = profile.factors[2] * A * alpha_diff(ring, 1, 3);
  out.ratio_relation = lhs == rhs;
  out.ratio_relation_unsigned = lhs == -rhs;
  return out;
}

}  // namespace fermat
