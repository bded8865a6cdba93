#include "modq/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modq {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomial helpers over Z, coefficients lowest degree first.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    BigInt lead = num.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    trim(num);
  }
  if (!num.empty()) throw ExactnessError("polynomial division left a remainder");
  return quot;
}

// Remainder of p modulo a monic divisor.
Poly mod_monic(Poly p, const Poly& den) {
  while (p.size() >= den.size()) {
    BigInt lead = p.back();
    std::size_t shift = p.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) p[shift + i] -= lead * den[i];
    trim(p);
  }
  return p;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod_norm(a, m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw ExactnessError("residue not invertible");
  return mod_norm(t, m);
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int order) {
  static std::map<int, Poly> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1) throw InvalidArgumentError("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly num(static_cast<std::size_t>(order) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d)
    if (order % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  return cache.emplace(order, std::move(num)).first->second;
}

// --- Ring -------------------------------------------------------------

Ring Ring::rational() {
  Ring r;
  r.kind_ = RingKind::Rational;
  return r;
}

Ring Ring::prime_field(std::int64_t modulus) {
  if (!is_prime(modulus)) throw NotPrimeError("PrimeField modulus must be prime");
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.modulus_ = modulus;
  return r;
}

Ring Ring::cyclotomic(int order) {
  if (order < 2) throw InvalidArgumentError("cyclotomic order must be >= 2");
  Ring r;
  r.kind_ = RingKind::Cyclotomic;
  r.order_ = order;
  return r;
}

Ring Ring::eps_poly(Ring inner) {
  if (inner.kind_ == RingKind::EpsPoly)
    throw InvalidArgumentError("nested eps polynomial rings are not supported");
  Ring r;
  r.kind_ = RingKind::EpsPoly;
  r.inner_ = std::make_shared<const Ring>(std::move(inner));
  return r;
}

std::int64_t Ring::modulus() const {
  if (kind_ != RingKind::PrimeField) throw InvalidArgumentError("not a prime field");
  return modulus_;
}

int Ring::order() const {
  if (kind_ != RingKind::Cyclotomic) throw InvalidArgumentError("not a cyclotomic ring");
  return order_;
}

const Ring& Ring::inner() const {
  if (kind_ != RingKind::EpsPoly) throw InvalidArgumentError("not an eps polynomial ring");
  return *inner_;
}

bool Ring::operator==(const Ring& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case RingKind::Rational: return true;
    case RingKind::PrimeField: return modulus_ == other.modulus_;
    case RingKind::Cyclotomic: return order_ == other.order_;
    case RingKind::EpsPoly: return *inner_ == *other.inner_;
  }
  return false;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Rational: return "Q";
    case RingKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    case RingKind::Cyclotomic: return "Z[zeta_" + std::to_string(order_) + "]";
    case RingKind::EpsPoly: return inner_->name() + "[eps]";
  }
  return "?";
}

// --- Scalar -----------------------------------------------------------

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (a.ring() != b.ring())
    throw RingMismatchError("scalar ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

// Reduce an exponent-wrapped coefficient vector to canonical form of length p.
std::vector<BigInt> reduce_cyclotomic(int order, std::vector<BigInt> coeffs) {
  std::vector<BigInt> wrapped(static_cast<std::size_t>(order), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    wrapped[i % static_cast<std::size_t>(order)] += coeffs[i];
  Poly rem = mod_monic(std::move(wrapped), cyclotomic_polynomial(order));
  rem.resize(static_cast<std::size_t>(order), 0);
  return rem;
}

std::vector<Scalar> trim_eps(std::vector<Scalar> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace

Scalar Scalar::zero(const Ring& ring) { return from_int(ring, 0); }
Scalar Scalar::one(const Ring& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const Ring& ring, std::int64_t v) {
  switch (ring.kind()) {
    case RingKind::Rational: return rational(BigRational(v));
    case RingKind::PrimeField: return residue(ring.modulus(), v);
    case RingKind::Cyclotomic: {
      std::vector<BigInt> c(static_cast<std::size_t>(ring.order()), 0);
      c[0] = v;
      return cyclotomic(ring.order(), std::move(c));
    }
    case RingKind::EpsPoly: {
      std::vector<Scalar> c;
      if (v != 0) c.push_back(from_int(ring.inner(), v));
      return Scalar(ring, std::move(c));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

Scalar Scalar::rational(BigRational v) { return Scalar(Ring::rational(), std::move(v)); }

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgumentError("zero denominator");
  return rational(BigRational(num, den));
}

Scalar Scalar::residue(std::int64_t modulus, std::int64_t v) {
  Ring ring = Ring::prime_field(modulus);
  return Scalar(std::move(ring), mod_norm(v, modulus));
}

Scalar Scalar::cyclotomic(int order, std::vector<BigInt> coeffs) {
  return Scalar(Ring::cyclotomic(order), reduce_cyclotomic(order, std::move(coeffs)));
}

Scalar Scalar::zeta(int order, std::int64_t power) {
  std::vector<BigInt> c(static_cast<std::size_t>(order), 0);
  std::int64_t e = mod_norm(power, order);
  c[static_cast<std::size_t>(e)] = 1;
  return cyclotomic(order, std::move(c));
}

Scalar Scalar::eps_poly(const Ring& inner, std::vector<Scalar> coeffs) {
  for (const Scalar& c : coeffs)
    if (c.ring() != inner) throw RingMismatchError("eps coefficient outside the inner ring");
  return Scalar(Ring::eps_poly(inner), trim_eps(std::move(coeffs)));
}

Scalar Scalar::eps_monomial(const Scalar& coeff, unsigned degree) {
  std::vector<Scalar> c(degree, Scalar::zero(coeff.ring()));
  c.push_back(coeff);
  return Scalar(Ring::eps_poly(coeff.ring()), trim_eps(std::move(c)));
}

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Rational: return std::get<BigRational>(v_) == 0;
    case RingKind::PrimeField: return std::get<std::int64_t>(v_) == 0;
    case RingKind::Cyclotomic: {
      for (const BigInt& c : std::get<CycCoeffs>(v_))
        if (c != 0) return false;
      return true;
    }
    case RingKind::EpsPoly: return std::get<EpsCoeffs>(v_).empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  switch (a.ring_.kind()) {
    case RingKind::Rational:
      return Scalar(a.ring_, BigRational(std::get<BigRational>(a.v_) + std::get<BigRational>(b.v_)));
    case RingKind::PrimeField: {
      std::int64_t m = a.ring_.modulus();
      return Scalar(a.ring_, (std::get<std::int64_t>(a.v_) + std::get<std::int64_t>(b.v_)) % m);
    }
    case RingKind::Cyclotomic: {
      auto c = std::get<Scalar::CycCoeffs>(a.v_);
      const auto& d = std::get<Scalar::CycCoeffs>(b.v_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return Scalar(a.ring_, std::move(c));
    }
    case RingKind::EpsPoly: {
      const auto& c = std::get<Scalar::EpsCoeffs>(a.v_);
      const auto& d = std::get<Scalar::EpsCoeffs>(b.v_);
      std::vector<Scalar> out;
      std::size_t n = std::max(c.size(), d.size());
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i < c.size() && i < d.size())
          out.push_back(c[i] + d[i]);
        else
          out.push_back(i < c.size() ? c[i] : d[i]);
      }
      return Scalar(a.ring_, trim_eps(std::move(out)));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::Rational: return Scalar(ring_, BigRational(-std::get<BigRational>(v_)));
    case RingKind::PrimeField: {
      std::int64_t m = ring_.modulus();
      return Scalar(ring_, mod_norm(-std::get<std::int64_t>(v_), m));
    }
    case RingKind::Cyclotomic: {
      auto c = std::get<CycCoeffs>(v_);
      for (BigInt& x : c) x = -x;
      return Scalar(ring_, std::move(c));
    }
    case RingKind::EpsPoly: {
      auto c = std::get<EpsCoeffs>(v_);
      for (Scalar& x : c) x = -x;
      return Scalar(ring_, std::move(c));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  switch (a.ring_.kind()) {
    case RingKind::Rational:
      return Scalar(a.ring_, BigRational(std::get<BigRational>(a.v_) * std::get<BigRational>(b.v_)));
    case RingKind::PrimeField: {
      std::int64_t m = a.ring_.modulus();
      return Scalar(a.ring_, (std::get<std::int64_t>(a.v_) * std::get<std::int64_t>(b.v_)) % m);
    }
    case RingKind::Cyclotomic: {
      const auto& c = std::get<Scalar::CycCoeffs>(a.v_);
      const auto& d = std::get<Scalar::CycCoeffs>(b.v_);
      std::vector<BigInt> prod(c.size() + d.size() - 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j)
          if (d[j] != 0) prod[i + j] += c[i] * d[j];
      }
      return Scalar(a.ring_, reduce_cyclotomic(a.ring_.order(), std::move(prod)));
    }
    case RingKind::EpsPoly: {
      const auto& c = std::get<Scalar::EpsCoeffs>(a.v_);
      const auto& d = std::get<Scalar::EpsCoeffs>(b.v_);
      if (c.empty() || d.empty()) return Scalar::zero(a.ring_);
      std::vector<Scalar> prod(c.size() + d.size() - 1, Scalar::zero(a.ring_.inner()));
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) prod[i + j] = prod[i + j] + c[i] * d[j];
      return Scalar(a.ring_, trim_eps(std::move(prod)));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

bool Scalar::operator==(const Scalar& other) const {
  if (ring_ != other.ring_) return false;
  return v_ == other.v_;
}

Scalar Scalar::scaled(const BigRational& factor) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt num = numerator(factor);
  const BigInt den = denominator(factor);
  switch (ring_.kind()) {
    case RingKind::Rational:
      return Scalar(ring_, BigRational(std::get<BigRational>(v_) * factor));
    case RingKind::PrimeField: {
      std::int64_t m = ring_.modulus();
      std::int64_t n = static_cast<std::int64_t>(num % m);
      std::int64_t d = static_cast<std::int64_t>(den % m);
      if (d == 0) throw ExactnessError("denominator vanishes in " + ring_.name());
      std::int64_t r = std::get<std::int64_t>(v_);
      return Scalar(ring_, mod_norm(r * mod_norm(n, m) % m * mod_inverse(d, m) % m, m));
    }
    case RingKind::Cyclotomic: {
      auto c = std::get<CycCoeffs>(v_);
      for (BigInt& x : c) {
        x *= num;
        if (x % den != 0)
          throw ExactnessError("inexact division of a cyclotomic integer by " + den.str());
        x /= den;
      }
      return Scalar(ring_, std::move(c));
    }
    case RingKind::EpsPoly: {
      auto c = std::get<EpsCoeffs>(v_);
      for (Scalar& x : c) x = x.scaled(factor);
      return Scalar(ring_, trim_eps(std::move(c)));
    }
  }
  throw InvalidArgumentError("unknown ring kind");
}

const BigRational& Scalar::rational_value() const {
  if (ring_.kind() != RingKind::Rational) throw InvalidArgumentError("not a rational scalar");
  return std::get<BigRational>(v_);
}

std::int64_t Scalar::residue_value() const {
  if (ring_.kind() != RingKind::PrimeField) throw InvalidArgumentError("not a prime field scalar");
  return std::get<std::int64_t>(v_);
}

const std::vector<BigInt>& Scalar::cyclotomic_coeffs() const {
  if (ring_.kind() != RingKind::Cyclotomic) throw InvalidArgumentError("not a cyclotomic scalar");
  return std::get<CycCoeffs>(v_);
}

const std::vector<Scalar>& Scalar::eps_coeffs() const {
  if (ring_.kind() != RingKind::EpsPoly) throw InvalidArgumentError("not an eps polynomial");
  return std::get<EpsCoeffs>(v_);
}

std::string Scalar::str() const {
  std::ostringstream out;
  switch (ring_.kind()) {
    case RingKind::Rational: {
      out << std::get<BigRational>(v_);
      break;
    }
    case RingKind::PrimeField: {
      out << std::get<std::int64_t>(v_);
      break;
    }
    case RingKind::Cyclotomic: {
      const auto& c = std::get<CycCoeffs>(v_);
      bool first = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) out << " + ";
        out << c[i];
        if (i > 0) out << "*z^" << i;
        first = false;
      }
      if (first) out << "0";
      break;
    }
    case RingKind::EpsPoly: {
      const auto& c = std::get<EpsCoeffs>(v_);
      if (c.empty()) {
        out << "0";
        break;
      }
      bool first = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << c[i].str() << ")";
        if (i > 0) out << "*eps^" << i;
        first = false;
      }
      break;
    }
  }
  return out.str();
}

std::pair<unsigned, Scalar> eps_lowest_order(const Scalar& p) {
  if (p.ring().kind() != RingKind::EpsPoly)
    throw InvalidArgumentError("eps_lowest_order requires an eps polynomial");
  const auto& c = p.eps_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return {static_cast<unsigned>(i), c[i]};
  throw ZeroPolynomialError("eps_lowest_order of the zero polynomial");
}

}  // namespace modq
