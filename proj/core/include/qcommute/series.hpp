#pragma once

#include <functional>

#include "qcommute/bigint.hpp"
#include "qcommute/count_set.hpp"
#include "qcommute/qpoly.hpp"

namespace qcommute {

// Power series in x truncated at a fixed order, with coefficients in the
// field of rational functions of q.  Every coefficient that occurs in this
// counting pipeline has the shape p_i(q) / |GL_i|, and that shape is closed
// under the operations used here (sums, products, substituting x -> x^i):
// the transfer factors |GL_{a+b}| / (|GL_a| |GL_b|) and |GL_{ij}| / |GL_j|
// are polynomials.  Coefficients are therefore stored as the polynomial
// numerators over the implicit |GL_i| denominators, which keeps all
// arithmetic in exact integer polynomials; coeff() reduces to lowest terms
// only on extraction.
class XSeries {
 public:
  explicit XSeries(unsigned order);  // zero series
  static XSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(p_.size() - 1); }

  // Coefficient of x^i in lowest terms.
  QRat coeff(unsigned i) const;
  // Coefficient of x^i multiplied by |GL_i| (always a polynomial).
  const QPoly& scaled_coeff(unsigned i) const;

  // Set the coefficient of x^i; value * |GL_i| must be a polynomial.
  void set_coeff(unsigned i, const QRat& value);
  void set_scaled_coeff(unsigned i, QPoly value);

  // x -> x^k, truncated at the same order.
  XSeries substitute_power(unsigned k) const;

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries& a, const XSeries& b);

 private:
  std::vector<QPoly> p_;  // numerator of coefficient i over |GL_i|
};

// The three per-size factors of the product formulas.  Each series below is
// the coefficient stream of one layer; the full generating function is the
// product of the factor evaluated at x, x^2, x^3, ...
//
//   nonsingular_class_factor  coefficient of x^b is q^{floor(b/m)}; as a
//                             closed form it is the expansion of
//                             (1 - x^m) / ((1 - x)(1 - x^m q))
//   nilpotent_class_factor    coefficient of x^a is
//                             q^{a(a+1)/2} / prod_{j=1..a}(q^j - 1)
//   pair_class_factor         their product
XSeries nonsingular_class_factor(unsigned m, unsigned order);
XSeries nilpotent_class_factor(unsigned order);
XSeries pair_class_factor(unsigned m, unsigned order);

// prod_{i >= 1} base(x^i) truncated at base.order(); base must have
// constant term 1.
XSeries product_over_powers(const XSeries& base);

// Builds a factor series for a given scaling order and truncation order.
// The default factories are the three above; the verification suite accepts
// a replacement to prove it detects corrupted factors.
using FactorFactory = std::function<XSeries(unsigned m, unsigned order)>;

// Full generating series for a family: product_over_powers of that family's
// factor.  Coefficient of x^n times |GL_n| is the n-th count polynomial.
// CountSet::classes has no series form and is rejected.
XSeries class_generating_series(CountSet set, unsigned m, unsigned order);

// The count as a polynomial in q: |GL_n| times the x^n coefficient of the
// generating series.  The division is checked two independent ways (the
// structural numerator and a reduced-fraction multiplication); any
// remainder or mismatch throws InternalError.  The result always has a
// positive leading coefficient; its degree is n^2 + floor(n/m) for the
// all-pairs and invertible families and n^2 for the nilpotent family.
QPoly count_polynomial(CountSet set, unsigned m, unsigned n);
// Same, from a prebuilt series of order >= n (avoids rebuilding per n).
QPoly count_polynomial(const XSeries& series, unsigned n);

// count_polynomial evaluated at an integer q (the series route for cross-
// checking the closed forms; also valid at integers where no scaling element
// of order m exists).
BigInt count_value_by_series(CountSet set, unsigned m, unsigned n, const BigInt& q);

}  // namespace qcommute
