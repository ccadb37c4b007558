#pragma once

// Arithmetic in the ring of integers of the maximal real subfield of the
// r-th cyclotomic field, O_K = Z[alpha] with alpha = zeta + zeta^-1.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermat/integer.hpp"

namespace fermat {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Immutable description of K = Q(zeta_r + zeta_r^-1) for a prime r > 5.
class RingContext {
 public:
  /// Throws InvalidInput unless r is a prime greater than 5.  Contexts are
  /// shared: every call with the same r returns the same object.
  static Ring build(unsigned r);

  unsigned r() const { return r_; }
  unsigned degree() const { return degree_; }

  /// Coefficients of the minimal polynomial of alpha, constant term first;
  /// size degree() + 1, leading coefficient 1.
  const std::vector<Integer>& min_poly() const { return min_poly_; }

  /// Power-basis coordinates of alpha_j = zeta^j + zeta^-j, 0 <= j <= degree().
  const std::vector<Integer>& alpha_coeffs(unsigned j) const;

  /// Reduces a polynomial in alpha (any degree, constant term first) to
  /// power-basis coordinates.
  std::vector<Integer> reduce(std::vector<Integer> poly) const;

 private:
  explicit RingContext(unsigned r);

  unsigned r_;
  unsigned degree_;
  std::vector<Integer> min_poly_;
  std::vector<std::vector<Integer>> alpha_table_;
};

/// An element of O_K in the power basis 1, alpha, ..., alpha^(d-1).
class RingElement {
 public:
  RingElement(Ring ring, const Integer& value);
  RingElement(Ring ring, std::vector<Integer> coeffs);

  /// Element represented by a polynomial in alpha of arbitrary degree.
  static RingElement from_poly(Ring ring, std::vector<Integer> poly);

  const Ring& ring() const { return ring_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Some(n) when the element is the rational integer n.
  std::optional<Integer> as_integer() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const Integer& scalar);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(RingElement a, const Integer& s) { return a *= s; }
  friend RingElement operator*(const Integer& s, RingElement a) { return a *= s; }

  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement pow(unsigned exponent) const;

  /// Human-readable polynomial in `a`, e.g. "-1 + 2*a^2".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Integer> coeffs_;
};

/// alpha_j as a ring element.  Throws InvalidInput for j > degree.
RingElement alpha_element(const Ring& ring, unsigned j);

/// Field norm N_{K/Q}(a), the product of all Galois conjugates of a.
/// Computed as the determinant of multiplication-by-a on the power basis.
Integer norm(const RingElement& a);

/// Image of a under the automorphism induced by zeta -> zeta^i.
RingElement galois_apply(const RingElement& a, long i);

/// Valuation at beta, the unique prime above r.  beta has residue degree 1,
/// so this is v_r(|norm(a)|).  Throws InvalidInput for a = 0.
unsigned beta_valuation(const RingElement& a);

/// Throws ContextMismatch when the two rings differ.
void require_same_ring(const Ring& a, const Ring& b);

/// Integer matrix determinant by fraction-free (Bareiss) elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace fermat
