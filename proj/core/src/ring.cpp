#include "fermat/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

RingContext::RingContext(unsigned r) : r_(r), degree_((r - 1) / 2) {
  const unsigned d = degree_;

  // Phi_r(x) = x^d * psi(x + 1/x).  The coefficient of x^(d+m) on the right is
  // sum over k >= m, k = m (mod 2) of c_k * binom(k, (k-m)/2); every
  // coefficient of Phi_r is 1, so solve for c_d, c_(d-1), ..., c_0 in turn.
  min_poly_.assign(d + 1, 0);
  min_poly_[d] = 1;
  for (int m = static_cast<int>(d) - 1; m >= 0; --m) {
    Integer acc = 1;
    for (unsigned k = m + 2; k <= d; k += 2) {
      acc -= min_poly_[k] * binomial(k, (k - m) / 2);
    }
    min_poly_[m] = acc;
  }

  // alpha_(j+1) = alpha * alpha_j - alpha_(j-1).
  std::vector<std::vector<Integer>> raw(d + 1);
  raw[0] = {2};
  raw[1] = {0, 1};
  for (unsigned j = 1; j < d; ++j) {
    std::vector<Integer> next(j + 2, 0);
    for (std::size_t i = 0; i < raw[j].size(); ++i) next[i + 1] += raw[j][i];
    for (std::size_t i = 0; i < raw[j - 1].size(); ++i) next[i] -= raw[j - 1][i];
    raw[j + 1] = std::move(next);
  }
  alpha_table_.reserve(d + 1);
  for (auto& poly : raw) alpha_table_.push_back(reduce(std::move(poly)));
}

Ring RingContext::build(unsigned r) {
  if (r <= 5 || !is_prime(static_cast<std::uint64_t>(r))) {
    throw InvalidInput("r must be a prime greater than 5, got " + std::to_string(r));
  }
  static std::mutex mutex;
  static std::map<unsigned, Ring> built;
  std::lock_guard lock(mutex);
  auto& slot = built[r];
  if (!slot) slot = Ring(new RingContext(r));
  return slot;
}

const std::vector<Integer>& RingContext::alpha_coeffs(unsigned j) const {
  if (j > degree_) {
    throw InvalidInput("alpha index " + std::to_string(j) + " outside [0, " + std::to_string(degree_) + "]");
  }
  return alpha_table_[j];
}

std::vector<Integer> RingContext::reduce(std::vector<Integer> poly) const {
  const unsigned d = degree_;
  for (std::size_t top = poly.size(); top-- > d;) {
    if (poly[top] == 0) continue;
    const Integer lead = poly[top];
    for (unsigned i = 0; i <= d; ++i) poly[top - d + i] -= lead * min_poly_[i];
  }
  poly.resize(d, 0);
  return poly;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a || !b || a->r() != b->r()) throw ContextMismatch("operands belong to different rings");
}

RingElement::RingElement(Ring ring, const Integer& value) : ring_(std::move(ring)) {
  coeffs_.assign(ring_->degree(), 0);
  coeffs_[0] = value;
}

RingElement::RingElement(Ring ring, std::vector<Integer> coeffs) : ring_(std::move(ring)) {
  if (coeffs.size() > ring_->degree()) {
    coeffs_ = ring_->reduce(std::move(coeffs));
  } else {
    coeffs.resize(ring_->degree(), 0);
    coeffs_ = std::move(coeffs);
  }
}

RingElement RingElement::from_poly(Ring ring, std::vector<Integer> poly) {
  auto reduced = ring->reduce(std::move(poly));
  return RingElement(std::move(ring), std::move(reduced));
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

std::optional<Integer> RingElement::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(ring_, other.ring_);
  const std::size_t d = coeffs_.size();
  std::vector<Integer> product(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coeffs_[j] == 0) continue;
      mpz_addmul(product[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = ring_->reduce(std::move(product));
  return *this;
}

RingElement& RingElement::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_->r() == b.ring_->r() && a.coeffs_ == b.coeffs_;
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result(ring_, Integer(1));
  RingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string RingElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Integer mag = abs(c);
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "a";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

RingElement alpha_element(const Ring& ring, unsigned j) {
  return RingElement(ring, ring->alpha_coeffs(j));
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer norm(const RingElement& a) {
  const auto& ring = a.ring();
  const unsigned d = ring->degree();
  // Row k holds the coordinates of a * alpha^k.
  std::vector<std::vector<Integer>> matrix;
  matrix.reserve(d);
  RingElement shifted = a;
  const RingElement alpha = alpha_element(ring, 1);
  for (unsigned k = 0; k < d; ++k) {
    matrix.push_back(shifted.coeffs());
    if (k + 1 < d) shifted *= alpha;
  }
  return determinant(std::move(matrix));
}

RingElement galois_apply(const RingElement& a, long i) {
  const auto& ring = a.ring();
  const long r = ring->r();
  long m = ((i % r) + r) % r;
  if (m == 0) throw InvalidInput("Galois index must be coprime to r");
  if (m > r / 2) m = r - m;
  const RingElement image = alpha_element(ring, static_cast<unsigned>(m));

  // Horner evaluation of the coordinate polynomial at the image of alpha.
  const auto& c = a.coeffs();
  RingElement out(ring, c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    out *= image;
    out += RingElement(ring, c[k]);
  }
  return out;
}

unsigned beta_valuation(const RingElement& a) {
  if (a.is_zero()) throw InvalidInput("beta-adic valuation of zero is infinite");
  return valuation(norm(a), Integer(a.ring()->r()));
}

}  // namespace fermat
