#include "fermat/integer.hpp"

#include <algorithm>
#include <map>

#include "fermat/error.hpp"

namespace fermat {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) {
  Integer m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(m);
}

unsigned valuation(const Integer& n, const Integer& q) {
  if (n == 0) throw InvalidInput("valuation of zero is infinite");
  if (abs(q) < 2) throw InvalidInput("valuation base must have |q| >= 2");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
  if (k == 0) throw InvalidInput("root of order zero");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Integer root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

namespace {

// Brent's variant of Pollard rho.  Returns a nontrivial factor or 0 when the
// budget runs out for every tried constant.
Integer rho_factor(const Integer& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 16; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    std::uint64_t r = 1, spent = 0;
    const std::uint64_t m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      spent += r;
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the saved position.
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_into(const Integer& n, const FactorBudget& budget, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho_factor(n, budget.rho_iterations);
  if (d == 0) {
    throw DeskScaleExceeded("integer factorization budget exhausted on a " +
                            std::to_string(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                            "-bit composite cofactor");
  }
  factor_into(d, budget, out);
  factor_into(Integer(n / d), budget, out);
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n, const FactorBudget& budget) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long q = 2; q <= budget.trial_bound && mpz_cmp_ui(m.get_mpz_t(), q * q) >= 0;
       q += (q == 2 ? 1 : 2)) {
    Integer qq(q);
    if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      found[qq] = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), qq.get_mpz_t()));
    }
  }
  factor_into(m, budget, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [q, e] : found) out.push_back({q, e});
  return out;
}

Integer radical(const Integer& n, const FactorBudget& budget) {
  Integer out = 1;
  for (const auto& pp : factor_integer(n, budget)) out *= pp.prime;
  return out;
}

bool is_power_free(const Integer& n, unsigned p, const FactorBudget& budget) {
  const auto fac = factor_integer(n, budget);
  return std::all_of(fac.begin(), fac.end(), [p](const PrimePower& pp) { return pp.exponent < p; });
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw InvalidInput("not a decimal integer: '" + text + "'");
  }
  return out;
}

}  // namespace fermat
