#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcommute/field.hpp"

namespace qcommute {

// Univariate polynomial over a finite field, coefficients stored as element
// codes, constant term first, trailing zeros stripped (the zero polynomial
// stores no coefficients).
class FieldPoly {
 public:
  explicit FieldPoly(FieldPtr field);  // zero polynomial
  FieldPoly(FieldPtr field, std::vector<std::uint32_t> coeffs);

  static FieldPoly one(FieldPtr field);
  static FieldPoly t(FieldPtr field);  // the monomial t
  static FieldPoly monomial(FieldPtr field, unsigned deg, std::uint32_t coeff = 1);
  static FieldPoly constant(FieldPtr field, std::uint32_t coeff);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  std::uint32_t coeff(unsigned i) const;  // 0 beyond the leading term
  std::uint32_t leading() const;          // throws on zero polynomial
  bool is_monic() const;
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  FieldPoly monic() const;  // leading coefficient scaled to 1; throws on zero
  FieldPoly scaled(std::uint32_t c) const;
  FieldElement eval(const FieldElement& x) const;
  // g(c * t): each coefficient of t^i multiplied by c^i.
  FieldPoly compose_scaled_arg(const FieldElement& c) const;

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& num,
                                                const FieldPoly& den);
  // Monic gcd (gcd(0,0) = 0).
  static FieldPoly gcd(FieldPoly a, FieldPoly b);

  bool divides(const FieldPoly& other) const;  // this | other

  std::string to_string() const;  // "t^2 + 2*t + 1", "0"

 private:
  void normalize();
  FieldPtr field_;
  std::vector<std::uint32_t> coeffs_;
};

// True iff g(t) = t^e * G(t^m) for some polynomial G and some e, i.e. the
// exponents of all nonzero coefficients below the leading term are congruent
// to deg(g) modulo m.  For monic g this is exactly the condition that
// scaling the argument by any element of multiplicative order m fixes g up
// to the forced scalar; these are the polynomials whose companion matrices
// are similar to their own scalings.
bool is_twist_invariant(const FieldPoly& g, unsigned m);

// Enumerates all monic polynomials of the given degree over the field, in
// code order of the coefficient vector (constant term varies fastest).
std::vector<FieldPoly> monic_polys_of_degree(const FieldPtr& field, unsigned deg);

}  // namespace qcommute
