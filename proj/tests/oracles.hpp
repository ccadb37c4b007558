#pragma once

// Independent reference computations used only by the tests.  Nothing here
// calls into the library's arithmetic beyond reading coefficient vectors.

#include <quadmath.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fermat/integer.hpp"
#include "fermat/ring.hpp"

namespace oracle {

using fermat::Integer;
using Quad = __float128;

inline Quad two_cos(unsigned j, unsigned r) {
  const Quad pi = acosq(static_cast<Quad>(-1));
  return 2 * cosq(2 * pi * static_cast<Quad>(j) / static_cast<Quad>(r));
}

inline long round_quad(Quad v) { return static_cast<long>(roundq(v)); }

/// Coefficients (constant first) of prod_{j=1..d} (t - 2cos(2 pi j / r)),
/// expanded in quad precision and rounded.
inline std::vector<long> numeric_min_poly(unsigned r) {
  const unsigned d = (r - 1) / 2;
  std::vector<Quad> poly{1};
  for (unsigned j = 1; j <= d; ++j) {
    const Quad root = two_cos(j, r);
    std::vector<Quad> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (Quad c : poly) out.push_back(round_quad(c));
  return out;
}

/// Value of the element with power-basis coordinates `coeffs` under the
/// embedding alpha -> 2cos(2 pi j / r).
inline Quad embed(const std::vector<Integer>& coeffs, unsigned j, unsigned r) {
  const Quad theta = two_cos(j, r);
  Quad acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * theta + static_cast<Quad>(coeffs[k].get_d());
  return acc;
}

inline Quad conjugate_product(const std::vector<Integer>& coeffs, unsigned r) {
  Quad acc = 1;
  for (unsigned j = 1; j <= (r - 1) / 2; ++j) acc *= embed(coeffs, j, r);
  return acc;
}

/// Resultant of f and g (constant term first) as the determinant of the
/// Sylvester matrix, by Gaussian elimination over Q.
inline Integer sylvester_resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size, 0));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g[n - i];
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t pivot = c;
    while (pivot < size && s[pivot][c] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != c) {
      std::swap(s[pivot], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (std::size_t row = c + 1; row < size; ++row) {
      const mpq_class factor = s[row][c] / s[c][c];
      for (std::size_t k = c; k < size; ++k) s[row][k] -= factor * s[c][k];
    }
  }
  return det.get_num() / det.get_den();
}

/// Roots of f modulo a small prime q by exhaustive search.
inline std::vector<long> roots_mod(const std::vector<Integer>& f, long q) {
  std::vector<long> out;
  for (long t = 0; t < q; ++t) {
    Integer acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = acc * t + f[k];
    if (acc % q == 0) out.push_back(t);
  }
  return out;
}

inline unsigned int_valuation(Integer n, long q) {
  unsigned v = 0;
  while (n != 0 && n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

/// Deterministic generator of small random ring elements.
class ElementSource {
 public:
  explicit ElementSource(std::uint64_t seed) : rng_(seed) {}

  fermat::RingElement next(const fermat::Ring& ring, long bound = 20) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> c;
    for (unsigned i = 0; i < ring->degree(); ++i) c.emplace_back(dist(rng_));
    return fermat::RingElement(ring, std::move(c));
  }

  fermat::RingElement next_nonzero(const fermat::Ring& ring, long bound = 20) {
    for (;;) {
      auto a = next(ring, bound);
      if (!a.is_zero()) return a;
    }
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
