#include "fermat/poly_mod.hpp"

#include <algorithm>

#include "fermat/error.hpp"

namespace fermat::polymod {

namespace {

void trim(PolyModQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mod(const Integer& a, const Integer& q) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  return out;
}

Integer inverse(const Integer& a, const Integer& q) {
  Integer out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw InvalidInput("non-invertible coefficient modulo q");
  }
  return out;
}

bool is_one(const PolyModQ& f) { return f.size() == 1 && f[0] == 1; }

PolyModQ one() { return {Integer(1)}; }

PolyModQ monomial_x() { return {Integer(0), Integer(1)}; }

// Polynomial g with g(x)^q = f(x); every exponent of f must be divisible by q.
PolyModQ qth_root(const PolyModQ& f, const Integer& q) {
  const unsigned long step = q.get_ui();
  PolyModQ out;
  for (std::size_t i = 0; i < f.size(); i += step) out.push_back(f[i]);
  trim(out);
  return out;
}

void squarefree_into(const PolyModQ& f, unsigned scale, const Integer& q, std::vector<PolyFactor>& out) {
  if (degree(f) < 1) return;
  PolyModQ g = derivative(f, q);
  if (g.empty()) {
    squarefree_into(qth_root(f, q), scale * static_cast<unsigned>(q.get_ui()), q, out);
    return;
  }
  PolyModQ c = gcd(f, g, q);
  PolyModQ w = divmod(f, c, q).first;
  unsigned i = 1;
  while (!is_one(w)) {
    PolyModQ y = gcd(w, c, q);
    PolyModQ part = divmod(w, y, q).first;
    if (degree(part) > 0) out.push_back({make_monic(part, q), i * scale});
    ++i;
    w = std::move(y);
    c = divmod(c, w, q).first;
  }
  if (degree(c) > 0) {
    squarefree_into(qth_root(c, q), scale * static_cast<unsigned>(q.get_ui()), q, out);
  }
}

struct DegreeBlock {
  PolyModQ product;
  int factor_degree;
};

std::vector<DegreeBlock> distinct_degree(PolyModQ f, const Integer& q) {
  std::vector<DegreeBlock> out;
  PolyModQ h = monomial_x();
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, q, f, q);
    PolyModQ g = gcd(f, sub(h, monomial_x(), q), q);
    if (!is_one(g)) {
      out.push_back({g, i});
      f = divmod(f, g, q).first;
      h = rem(h, f, q);
    }
  }
  if (degree(f) > 0) out.push_back({f, degree(f)});
  return out;
}

class EqualDegreeSplitter {
 public:
  EqualDegreeSplitter(const Integer& q, int factor_degree) : q_(q), d_(factor_degree) {
    rng_.seed(0x5eed + static_cast<unsigned long>(factor_degree));
    if (q_ != 2) exponent_ = (pow(q_, d_) - 1) / 2;
  }

  void split(const PolyModQ& f, std::vector<PolyModQ>& out) {
    if (degree(f) == d_) {
      out.push_back(f);
      return;
    }
    for (;;) {
      PolyModQ a;
      for (int i = 0; i < degree(f); ++i) a.push_back(rng_.get_z_range(q_));
      trim(a);
      if (degree(a) < 1) continue;
      PolyModQ b = probe(a, f);
      PolyModQ g = gcd(f, b, q_);
      if (degree(g) > 0 && degree(g) < degree(f)) {
        split(g, out);
        split(divmod(f, g, q_).first, out);
        return;
      }
    }
  }

 private:
  PolyModQ probe(const PolyModQ& a, const PolyModQ& f) {
    if (q_ != 2) return sub(powmod(a, exponent_, f, q_), one(), q_);
    // Characteristic 2: absolute trace a + a^2 + ... + a^(2^(d*k-1)) where
    // the residue fields have 2^d elements.
    PolyModQ term = rem(a, f, q_);
    PolyModQ acc = term;
    for (int i = 1; i < d_; ++i) {
      term = rem(mul(term, term, q_), f, q_);
      acc = add(acc, term, q_);
    }
    return acc;
  }

  Integer q_;
  int d_;
  Integer exponent_;
  gmp_randclass rng_{gmp_randinit_default};
};

bool canonical_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
  if (a.factor != b.factor) {
    return std::lexicographical_compare(a.factor.rbegin(), a.factor.rend(), b.factor.rbegin(), b.factor.rend());
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

PolyModQ normalize(std::vector<Integer> poly, const Integer& q) {
  for (auto& c : poly) c = mod(c, q);
  trim(poly);
  return poly;
}

int degree(const PolyModQ& f) { return static_cast<int>(f.size()) - 1; }

PolyModQ make_monic(PolyModQ f, const Integer& q) {
  if (f.empty()) return f;
  const Integer inv = inverse(f.back(), q);
  for (auto& c : f) c = mod(c * inv, q);
  return f;
}

PolyModQ add(const PolyModQ& a, const PolyModQ& b, const Integer& q) {
  PolyModQ out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return normalize(std::move(out), q);
}

PolyModQ sub(const PolyModQ& a, const PolyModQ& b, const Integer& q) {
  PolyModQ out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return normalize(std::move(out), q);
}

PolyModQ mul(const PolyModQ& a, const PolyModQ& b, const Integer& q) {
  if (a.empty() || b.empty()) return {};
  PolyModQ out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return normalize(std::move(out), q);
}

std::pair<PolyModQ, PolyModQ> divmod(const PolyModQ& a, const PolyModQ& b, const Integer& q) {
  if (b.empty()) throw InvalidInput("polynomial division by zero");
  PolyModQ r = a;
  if (degree(r) < degree(b)) return {{}, r};
  const Integer inv = inverse(b.back(), q);
  PolyModQ quot(r.size() - b.size() + 1, 0);
  for (int top = degree(r); top >= degree(b); --top) {
    const Integer c = mod(r[top] * inv, q);
    if (c == 0) continue;
    const int shift = top - degree(b);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[shift + i] = mod(r[shift + i] - c * b[i], q);
    }
  }
  trim(quot);
  trim(r);
  return {quot, r};
}

PolyModQ rem(const PolyModQ& a, const PolyModQ& b, const Integer& q) { return divmod(a, b, q).second; }

PolyModQ gcd(PolyModQ a, PolyModQ b, const Integer& q) {
  while (!b.empty()) {
    PolyModQ r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), q);
}

PolyModQ derivative(const PolyModQ& f, const Integer& q) {
  if (f.size() <= 1) return {};
  PolyModQ out(f.size() - 1, 0);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  return normalize(std::move(out), q);
}

PolyModQ powmod(const PolyModQ& base, const Integer& exponent, const PolyModQ& modulus, const Integer& q) {
  PolyModQ result = rem(one(), modulus, q);
  PolyModQ b = rem(base, modulus, q);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, q), modulus, q);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, b, q), modulus, q);
  }
  return result;
}

std::vector<PolyFactor> factor(const std::vector<Integer>& f, const Integer& q) {
  if (!is_prime(q)) throw InvalidInput("modulus must be prime");
  PolyModQ g = normalize(f, q);
  if (g.empty()) throw InvalidInput("cannot factor the zero polynomial");
  g = make_monic(std::move(g), q);

  std::vector<PolyFactor> squarefree;
  squarefree_into(g, 1, q, squarefree);

  std::vector<PolyFactor> out;
  for (const auto& sf : squarefree) {
    for (const auto& block : distinct_degree(sf.factor, q)) {
      std::vector<PolyModQ> pieces;
      EqualDegreeSplitter(q, block.factor_degree).split(block.product, pieces);
      for (auto& piece : pieces) out.push_back({make_monic(std::move(piece), q), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace fermat::polymod
