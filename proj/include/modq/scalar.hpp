#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modq/errors.hpp"

namespace modq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<BigInt>& cyclotomic_polynomial(int order);

enum class RingKind { Rational, PrimeField, Cyclotomic, EpsPoly };

/// Descriptor of one of the coefficient rings: Q, GF(m), Z[zeta_p], or R[eps].
class Ring {
 public:
  Ring() = default;  // the rational ring
  static Ring rational();
  static Ring prime_field(std::int64_t modulus);
  static Ring cyclotomic(int order);
  static Ring eps_poly(Ring inner);

  RingKind kind() const { return kind_; }
  std::int64_t modulus() const;
  int order() const;
  const Ring& inner() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }
  std::string name() const;

 private:
  RingKind kind_ = RingKind::Rational;
  std::int64_t modulus_ = 0;                // PrimeField
  int order_ = 0;                           // Cyclotomic
  std::shared_ptr<const Ring> inner_;       // EpsPoly
};

/// Exact scalar in one of the supported rings. Immutable; all operations pure.
///
/// Representations (always canonical, so operator== is plain comparison):
///   Rational    exact num/den
///   PrimeField  residue in [0, m)
///   Cyclotomic  integer vector v of length p for sum v_i zeta^i, reduced
///               modulo the p-th cyclotomic polynomial
///   EpsPoly     coefficient list in eps over the inner ring, no trailing zeros
class Scalar {
 public:
  static Scalar zero(const Ring& ring);
  static Scalar one(const Ring& ring);
  static Scalar from_int(const Ring& ring, std::int64_t v);

  static Scalar rational(BigRational v);
  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  static Scalar residue(std::int64_t modulus, std::int64_t v);
  static Scalar cyclotomic(int order, std::vector<BigInt> coeffs);
  /// zeta_p^power as an element of Cyclotomic(order).
  static Scalar zeta(int order, std::int64_t power = 1);
  static Scalar eps_poly(const Ring& inner, std::vector<Scalar> coeffs);
  /// coeff * eps^degree over EpsPoly(coeff.ring()).
  static Scalar eps_monomial(const Scalar& coeff, unsigned degree);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  /// Exact multiplication by a rational; throws ExactnessError when the
  /// result would leave the ring (e.g. dividing an integer vector inexactly).
  Scalar scaled(const BigRational& factor) const;

  // Representation accessors (throw InvalidArgumentError on wrong ring).
  const BigRational& rational_value() const;
  std::int64_t residue_value() const;
  const std::vector<BigInt>& cyclotomic_coeffs() const;
  const std::vector<Scalar>& eps_coeffs() const;

  std::string str() const;

 private:
  using EpsCoeffs = std::vector<Scalar>;
  using CycCoeffs = std::vector<BigInt>;
  Scalar(Ring ring, std::variant<BigRational, std::int64_t, CycCoeffs, EpsCoeffs> v)
      : ring_(std::move(ring)), v_(std::move(v)) {}

  Ring ring_;
  std::variant<BigRational, std::int64_t, CycCoeffs, EpsCoeffs> v_;
};

/// Smallest degree with nonzero coefficient and that coefficient.
/// Throws ZeroPolynomialError on the zero polynomial.
std::pair<unsigned, Scalar> eps_lowest_order(const Scalar& p);

}  // namespace modq
