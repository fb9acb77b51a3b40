#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcommute/bigint.hpp"

namespace qcommute {

// Polynomial in the formal variable q with arbitrary-precision integer
// coefficients, constant term first, trailing zeros stripped.
class QPoly {
 public:
  QPoly() = default;  // zero
  explicit QPoly(BigInt constant);
  explicit QPoly(long constant);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly variable();  // q
  static QPoly q_power(unsigned e, BigInt coeff = BigInt(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Degree; nullopt for zero.
  std::optional<unsigned> degree() const;
  const BigInt& coeff(unsigned i) const;  // zero beyond the leading term
  const BigInt& leading() const;          // throws on zero
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& q) const;
  BigRat eval(const BigRat& q) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b);

  QPoly scaled(const BigInt& c) const;

  // gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  BigInt content() const;

  // Exact division: returns the quotient iff den divides num with integer
  // coefficients and no remainder, nullopt otherwise.
  static std::optional<QPoly> divide_exact(const QPoly& num, const QPoly& den);

  // Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
  static QPoly gcd(const QPoly& a, const QPoly& b);

  // Canonical ASCII form: terms by descending power, "q^2", "q", constants
  // bare, unit coefficients elided, e.g. "2*q^4 - q^2 + 1"; zero is "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Rational function in q: num/den with integer-coefficient parts, kept in
// lowest terms (primitive gcd removed, joint coefficient content reduced)
// with a positive leading coefficient on the denominator.  Zero is 0/1.
class QRat {
 public:
  QRat() : num_(), den_(BigInt(1)) {}
  QRat(QPoly num);  // NOLINT(google-explicit-constructor): natural embedding
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // The underlying polynomial iff the denominator is 1.
  std::optional<QPoly> as_polynomial() const;

  BigRat eval(const BigRat& q) const;  // throws on denominator zero at q

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  friend bool operator==(const QRat& a, const QRat& b);

  // "num / den" with parenthesized multi-term parts; plain polynomial form
  // when den = 1.
  std::string to_string() const;

 private:
  void reduce();
  QPoly num_, den_;
};

}  // namespace qcommute
