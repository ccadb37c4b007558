#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

using Integer = mpz_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Probabilistic primality (Baillie-PSW plus Miller-Rabin rounds); exact
/// for every input below 2^64.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Largest k with q^k | n.  n must be nonzero and |q| >= 2.
unsigned valuation(const Integer& n, const Integer& q);

Integer pow(const Integer& base, unsigned long exponent);

Integer binomial(unsigned long n, unsigned long k);

/// Returns z with z^k = n, if n is a perfect k-th power (sign allowed for odd k).
std::optional<Integer> exact_root(const Integer& n, unsigned long k);

struct FactorBudget {
  /// Trial division runs up to this bound before Pollard-Brent rho.
  std::uint64_t trial_bound = 1u << 16;
  /// Rho iterations per composite cofactor before giving up.
  std::uint64_t rho_iterations = 1u << 24;
};

/// Prime factorization of |n| (n != 0), primes ascending.  Throws
/// DeskScaleExceeded when a composite cofactor resists the rho budget.
std::vector<PrimePower> factor_integer(const Integer& n, const FactorBudget& budget = {});

/// Product of the distinct primes dividing |n|.
Integer radical(const Integer& n, const FactorBudget& budget = {});

/// True when no q^p (q prime) divides |n|.
bool is_power_free(const Integer& n, unsigned p, const FactorBudget& budget = {});

std::string to_string(const Integer& n);
Integer parse_integer(const std::string& text);

}  // namespace fermat
