#pragma once

// Dense univariate polynomials over F_q, q prime (any size), and their
// factorization into monic irreducibles.

#include <vector>

#include "fermat/integer.hpp"

namespace fermat {

/// Coefficients in [0, q), constant term first, no trailing zeros.  The
/// zero polynomial is the empty vector.
using PolyModQ = std::vector<Integer>;

struct PolyFactor {
  PolyModQ factor;  ///< monic irreducible
  unsigned multiplicity = 0;
};

namespace polymod {

PolyModQ normalize(std::vector<Integer> poly, const Integer& q);
int degree(const PolyModQ& f);
PolyModQ make_monic(PolyModQ f, const Integer& q);
PolyModQ add(const PolyModQ& a, const PolyModQ& b, const Integer& q);
PolyModQ sub(const PolyModQ& a, const PolyModQ& b, const Integer& q);
PolyModQ mul(const PolyModQ& a, const PolyModQ& b, const Integer& q);
/// Quotient and remainder; b must be nonzero.
std::pair<PolyModQ, PolyModQ> divmod(const PolyModQ& a, const PolyModQ& b, const Integer& q);
PolyModQ rem(const PolyModQ& a, const PolyModQ& b, const Integer& q);
/// Monic gcd (zero when both inputs are zero).
PolyModQ gcd(PolyModQ a, PolyModQ b, const Integer& q);
PolyModQ derivative(const PolyModQ& f, const Integer& q);
/// base^exponent mod modulus.
PolyModQ powmod(const PolyModQ& base, const Integer& exponent, const PolyModQ& modulus, const Integer& q);

/// Factorization of f (nonzero, any leading coefficient) into monic
/// irreducibles with multiplicities, via squarefree decomposition,
/// distinct-degree and Cantor-Zassenhaus equal-degree splitting.  Sorted by
/// degree, then coefficients.  Deterministic.
std::vector<PolyFactor> factor(const std::vector<Integer>& f, const Integer& q);

}  // namespace polymod
}  // namespace fermat
