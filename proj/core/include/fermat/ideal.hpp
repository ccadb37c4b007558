#pragma once

// Integral ideals of O_K as full-rank sublattices of Z^d in Hermite normal
// form, and the prime ideals obtained by factoring the minimal polynomial
// of alpha modulo rational primes (valid at every prime since O_K = Z[alpha]).

#include <span>
#include <string>
#include <vector>

#include "fermat/integer.hpp"
#include "fermat/poly_mod.hpp"
#include "fermat/ring.hpp"

namespace fermat {

/// An integral ideal stored as a canonical HNF basis.
///
/// Basis vector j is column j of an upper-triangular d x d matrix: it has
/// nonzero coordinates only at 0..j, a positive pivot H(j, j), and every
/// entry H(i, j) with i < j lies in [0, H(i, i)).  Two ideals are equal iff
/// their matrices are identical.
class Ideal {
 public:
  /// The unit ideal O_K.
  static Ideal unit(const Ring& ring);

  /// O_K-ideal generated by `gens` (not all zero).
  static Ideal generated_by(const Ring& ring, std::span<const RingElement> gens);

  /// HNF of the Z-lattice spanned by `vectors`, where `multiple` is a nonzero
  /// rational integer known to lie in that lattice.  The caller guarantees
  /// the lattice is an O_K-module.
  static Ideal from_lattice(const Ring& ring, std::vector<std::vector<Integer>> vectors, const Integer& multiple);

  const Ring& ring() const { return ring_; }
  unsigned dimension() const { return ring_->degree(); }

  /// Entry at (row, column) of the upper-triangular basis matrix.
  const Integer& entry(unsigned row, unsigned column) const { return basis_[column][row]; }
  RingElement basis_element(unsigned j) const { return RingElement(ring_, basis_[j]); }

  /// Index [O_K : I], the product of the pivots.
  Integer norm() const;
  bool is_unit() const;

  bool contains(const RingElement& a) const;
  bool contains(const Ideal& other) const;

  /// True when this ideal is closed under multiplication by alpha.
  bool is_ok_module() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  Ideal(Ring ring, std::vector<std::vector<Integer>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  Ring ring_;
  std::vector<std::vector<Integer>> basis_;  // basis_[j] = column j
};

/// A nonzero prime ideal (q, g(alpha)) with g a monic irreducible factor of
/// the minimal polynomial modulo q.
struct PrimeIdeal {
  Integer q;
  PolyModQ gen_poly;
  unsigned e = 1;  ///< ramification index
  unsigned f = 1;  ///< residue degree
  Ideal lattice;

  bool is_beta() const;
  std::string to_string() const;
};

struct PrimeFactor {
  PrimeIdeal prime;
  unsigned exponent = 0;
};

/// (a) for a nonzero element.
Ideal principal_ideal(const RingElement& a);

/// A + B, the gcd of two ideals.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned exponent);

/// True when a divides b, i.e. b is contained in a.
bool divides(const Ideal& a, const Ideal& b);

/// Prime ideal factorization of q O_K for a rational prime q.  Results are
/// memoized per (r, q).
std::vector<PrimeFactor> factor_rational_prime(const Ring& ring, const Integer& q);

/// beta = (r, alpha - 2), the unique prime above r.
PrimeIdeal beta_ideal(const Ring& ring);

/// Largest k with A contained in P^k (A nonzero).
unsigned valuation_at(const PrimeIdeal& prime, const Ideal& a);
/// Largest k with a in P^k (a nonzero).
unsigned valuation_at(const PrimeIdeal& prime, const RingElement& a);

/// Every prime ideal dividing (a), with its exponent, ordered by rational
/// prime then generator polynomial.
std::vector<PrimeFactor> factor_element(const RingElement& a, const FactorBudget& budget = {});

}  // namespace fermat
