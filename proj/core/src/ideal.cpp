#include "fermat/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

namespace {

using Vector = std::vector<Integer>;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void reduce_below(Vector& v, unsigned top, const Integer& modulus) {
  for (unsigned i = 0; i < top; ++i) mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), modulus.get_mpz_t());
}

// v -= factor * w over coordinates 0..top.
void subtract_multiple(Vector& v, const Integer& factor, const Vector& w, unsigned top) {
  for (unsigned i = 0; i <= top; ++i) mpz_submul(v[i].get_mpz_t(), factor.get_mpz_t(), w[i].get_mpz_t());
}

std::string poly_to_string(const PolyModQ& g) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = g.size(); i-- > 0;) {
    if (g[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || g[i] != 1) out << g[i].get_str();
    if (i > 0 && g[i] != 1) out << "*";
    if (i > 0) out << "a";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

Ideal Ideal::unit(const Ring& ring) {
  const unsigned d = ring->degree();
  std::vector<Vector> basis(d, Vector(d, 0));
  for (unsigned j = 0; j < d; ++j) basis[j][j] = 1;
  return Ideal(ring, std::move(basis));
}

Ideal Ideal::from_lattice(const Ring& ring, std::vector<Vector> vectors, const Integer& multiple) {
  const unsigned d = ring->degree();
  const Integer modulus = abs(multiple);
  if (modulus == 0) throw InvalidInput("lattice modulus must be nonzero");

  // Working set: the input vectors reduced mod `modulus`, followed by the
  // protected vectors modulus * e_c.  Lower coordinates of unprotected
  // vectors may always be reduced because the protected ones stay intact
  // until their own coordinate is eliminated.
  struct Gen {
    Vector v;
    bool is_protected;
  };
  std::vector<Gen> gens;
  gens.reserve(vectors.size() + d);
  for (auto& v : vectors) {
    if (v.size() != d) throw InvalidInput("lattice vector has wrong dimension");
    reduce_below(v, d, modulus);
    gens.push_back({std::move(v), false});
  }
  for (unsigned c = 0; c < d; ++c) {
    Vector e(d, 0);
    e[c] = modulus;
    gens.push_back({std::move(e), true});
  }

  std::vector<Vector> basis(d);
  for (unsigned c = d; c-- > 0;) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].v[c] != 0) active.push_back(i);
    }
    while (active.size() > 1) {
      auto pivot_it = std::min_element(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
        return mpz_cmpabs(gens[a].v[c].get_mpz_t(), gens[b].v[c].get_mpz_t()) < 0;
      });
      const std::size_t pivot = *pivot_it;
      std::vector<std::size_t> still;
      still.push_back(pivot);
      for (std::size_t idx : active) {
        if (idx == pivot) continue;
        Gen& g = gens[idx];
        Integer quot;
        mpz_tdiv_q(quot.get_mpz_t(), g.v[c].get_mpz_t(), gens[pivot].v[c].get_mpz_t());
        subtract_multiple(g.v, quot, gens[pivot].v, c);
        g.is_protected = false;
        reduce_below(g.v, c, modulus);
        if (g.v[c] != 0) still.push_back(idx);
      }
      active = std::move(still);
    }
    const std::size_t pivot = active.front();
    Vector column = std::move(gens[pivot].v);
    if (column[c] < 0) {
      for (auto& x : column) x = -x;
    }
    reduce_below(column, c, modulus);
    basis[c] = std::move(column);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pivot));
    std::erase_if(gens, [](const Gen& g) {
      return std::all_of(g.v.begin(), g.v.end(), [](const Integer& x) { return x == 0; });
    });
  }

  // Reduce entries above each pivot into [0, pivot).
  for (unsigned j = 1; j < d; ++j) {
    for (unsigned i = j; i-- > 0;) {
      const Integer quot = floor_div(basis[j][i], basis[i][i]);
      if (quot != 0) subtract_multiple(basis[j], quot, basis[i], i);
    }
  }
  return Ideal(ring, std::move(basis));
}

Ideal Ideal::generated_by(const Ring& ring, std::span<const RingElement> gens) {
  const unsigned d = ring->degree();
  const RingElement alpha = alpha_element(ring, 1);
  std::vector<Vector> vectors;
  Integer multiple = 0;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    multiple = gcd(multiple, fermat::norm(g));
    RingElement shifted = g;
    for (unsigned k = 0; k < d; ++k) {
      vectors.push_back(shifted.coeffs());
      if (k + 1 < d) shifted *= alpha;
    }
  }
  if (multiple == 0) throw InvalidInput("the zero ideal is not supported");
  return from_lattice(ring, std::move(vectors), multiple);
}

Integer Ideal::norm() const {
  Integer out = 1;
  for (unsigned j = 0; j < dimension(); ++j) out *= basis_[j][j];
  return out;
}

bool Ideal::is_unit() const { return norm() == 1; }

bool Ideal::contains(const RingElement& a) const {
  require_same_ring(ring_, a.ring());
  Vector v = a.coeffs();
  for (unsigned c = dimension(); c-- > 0;) {
    if (v[c] == 0) continue;
    if (!mpz_divisible_p(v[c].get_mpz_t(), basis_[c][c].get_mpz_t())) return false;
    Integer quot;
    mpz_divexact(quot.get_mpz_t(), v[c].get_mpz_t(), basis_[c][c].get_mpz_t());
    subtract_multiple(v, quot, basis_[c], c);
  }
  return true;
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  for (unsigned j = 0; j < dimension(); ++j) {
    if (!contains(other.basis_element(j))) return false;
  }
  return true;
}

bool Ideal::is_ok_module() const {
  const RingElement alpha = alpha_element(ring_, 1);
  for (unsigned j = 0; j < dimension(); ++j) {
    if (!contains(alpha * basis_element(j))) return false;
  }
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.ring_->r() == b.ring_->r() && a.basis_ == b.basis_;
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << "[";
  for (unsigned row = 0; row < dimension(); ++row) {
    if (row) out << "; ";
    for (unsigned col = 0; col < dimension(); ++col) {
      if (col) out << " ";
      out << entry(row, col).get_str();
    }
  }
  out << "]";
  return out.str();
}

bool PrimeIdeal::is_beta() const { return lattice.ring()->r() == q; }

std::string PrimeIdeal::to_string() const {
  return "(" + q.get_str() + ", " + poly_to_string(gen_poly) + ")";
}

Ideal principal_ideal(const RingElement& a) {
  if (a.is_zero()) throw InvalidInput("principal ideal of zero");
  return Ideal::generated_by(a.ring(), std::span<const RingElement>(&a, 1));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Vector> vectors;
  for (unsigned j = 0; j < a.dimension(); ++j) {
    vectors.push_back(a.basis_element(j).coeffs());
    vectors.push_back(b.basis_element(j).coeffs());
  }
  return Ideal::from_lattice(a.ring(), std::move(vectors), gcd(a.norm(), b.norm()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Vector> vectors;
  for (unsigned i = 0; i < a.dimension(); ++i) {
    const RingElement ai = a.basis_element(i);
    for (unsigned j = 0; j < b.dimension(); ++j) vectors.push_back((ai * b.basis_element(j)).coeffs());
  }
  return Ideal::from_lattice(a.ring(), std::move(vectors), a.norm() * b.norm());
}

Ideal ideal_power(const Ideal& a, unsigned exponent) {
  Ideal result = Ideal::unit(a.ring());
  Ideal base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = ideal_product(result, base);
    exponent >>= 1;
    if (exponent > 0) base = ideal_product(base, base);
  }
  return result;
}

bool divides(const Ideal& a, const Ideal& b) { return a.contains(b); }

namespace {

std::vector<PrimeFactor> split_prime(const Ring& ring, const Integer& q) {
  const unsigned d = ring->degree();
  std::vector<PrimeFactor> out;
  unsigned total = 0;
  for (const auto& pf : polymod::factor(ring->min_poly(), q)) {
    const unsigned f = static_cast<unsigned>(polymod::degree(pf.factor));
    std::vector<Vector> vectors;
    for (unsigned i = 0; i < d; ++i) {
      Vector e(d, 0);
      e[i] = q;
      vectors.push_back(std::move(e));
    }
    const RingElement alpha = alpha_element(ring, 1);
    RingElement g = RingElement::from_poly(ring, pf.factor);
    for (unsigned k = 0; k < d; ++k) {
      vectors.push_back(g.coeffs());
      if (k + 1 < d) g *= alpha;
    }
    Ideal lattice = Ideal::from_lattice(ring, std::move(vectors), q);
    out.push_back({PrimeIdeal{q, pf.factor, pf.multiplicity, f, std::move(lattice)}, pf.multiplicity});
    total += pf.multiplicity * f;
  }
  if (total != d) throw Error("prime splitting does not account for the full degree");
  return out;
}

}  // namespace

std::vector<PrimeFactor> factor_rational_prime(const Ring& ring, const Integer& q) {
  if (!is_prime(q)) throw InvalidInput(q.get_str() + " is not prime");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, Integer>, std::vector<PrimeFactor>> cache;
  const auto key = std::make_pair(ring->r(), q);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  auto result = split_prime(ring, q);
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

PrimeIdeal beta_ideal(const Ring& ring) {
  return factor_rational_prime(ring, Integer(ring->r())).front().prime;
}

unsigned valuation_at(const PrimeIdeal& prime, const Ideal& a) {
  const unsigned bound = valuation(a.norm(), prime.q) / prime.f;
  unsigned k = 0;
  Ideal power = prime.lattice;
  while (k < bound && power.contains(a)) {
    ++k;
    if (k < bound) power = ideal_product(power, prime.lattice);
  }
  return k;
}

unsigned valuation_at(const PrimeIdeal& prime, const RingElement& a) {
  if (a.is_zero()) throw InvalidInput("valuation of zero is infinite");
  const unsigned bound = valuation(norm(a), prime.q) / prime.f;
  unsigned k = 0;
  Ideal power = prime.lattice;
  while (k < bound && power.contains(a)) {
    ++k;
    if (k < bound) power = ideal_product(power, prime.lattice);
  }
  return k;
}

std::vector<PrimeFactor> factor_element(const RingElement& a, const FactorBudget& budget) {
  if (a.is_zero()) throw InvalidInput("cannot factor zero");
  std::vector<PrimeFactor> out;
  for (const auto& pp : factor_integer(norm(a), budget)) {
    for (const auto& candidate : factor_rational_prime(a.ring(), pp.prime)) {
      const unsigned v = valuation_at(candidate.prime, a);
      if (v > 0) out.push_back({candidate.prime, v});
    }
  }
  return out;
}

}  // namespace fermat
