#include "qcommute/series.hpp"

#include <stdexcept>

#include "qcommute/counting.hpp"
#include "qcommute/errors.hpp"

namespace qcommute {

XSeries::XSeries(unsigned order) : p_(std::size_t(order) + 1) {}

XSeries XSeries::one(unsigned order) {
  XSeries s(order);
  s.p_[0] = QPoly(BigInt(1));
  return s;
}

QRat XSeries::coeff(unsigned i) const {
  if (i >= p_.size()) throw std::out_of_range("coefficient beyond truncation order");
  return QRat(p_[i], gl_order_poly(i));
}

const QPoly& XSeries::scaled_coeff(unsigned i) const {
  if (i >= p_.size()) throw std::out_of_range("coefficient beyond truncation order");
  return p_[i];
}

void XSeries::set_coeff(unsigned i, const QRat& value) {
  if (i >= p_.size()) throw std::out_of_range("coefficient beyond truncation order");
  const QPoly scaled_num = value.num() * gl_order_poly(i);
  auto p = QPoly::divide_exact(scaled_num, value.den());
  if (!p) {
    throw std::invalid_argument(
        "coefficient is outside the representable family (value * |GL_i| "
        "is not a polynomial)");
  }
  p_[i] = std::move(*p);
}

void XSeries::set_scaled_coeff(unsigned i, QPoly value) {
  if (i >= p_.size()) throw std::out_of_range("coefficient beyond truncation order");
  p_[i] = std::move(value);
}

XSeries XSeries::substitute_power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("substitution power must be >= 1");
  const unsigned n = order();
  XSeries out(n);
  for (unsigned j = 0; j * k <= n; ++j) {
    if (p_[j].is_zero()) continue;
    // Renormalize: p_j / |GL_j| becomes (p_j * |GL_jk| / |GL_j|) / |GL_jk|.
    const auto ratio =
        QPoly::divide_exact(gl_order_poly(j * k), gl_order_poly(j));
    if (!ratio) throw InternalError("group order ratio is not a polynomial");
    out.p_[j * k] = p_[j] * *ratio;
  }
  return out;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  XSeries out(a.order());
  for (std::size_t i = 0; i < out.p_.size(); ++i) out.p_[i] = a.p_[i] + b.p_[i];
  return out;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  XSeries out(a.order());
  for (std::size_t i = 0; i < out.p_.size(); ++i) out.p_[i] = a.p_[i] - b.p_[i];
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  const unsigned n = a.order();
  XSeries out(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (a.p_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (b.p_[j].is_zero()) continue;
      // (p_i / |GL_i|)(p_j / |GL_j|) contributes
      // p_i p_j |GL_{i+j}| / (|GL_i| |GL_j|) over |GL_{i+j}|.
      out.p_[i + j] = out.p_[i + j] + a.p_[i] * b.p_[j] * subspace_pair_poly(i, j);
    }
  }
  return out;
}

bool operator==(const XSeries& a, const XSeries& b) { return a.p_ == b.p_; }

XSeries nonsingular_class_factor(unsigned m, unsigned order) {
  if (m == 0) throw std::invalid_argument("scaling order must be positive");
  XSeries s(order);
  for (unsigned b = 0; b <= order; ++b) {
    s.set_scaled_coeff(b, QPoly::q_power(b / m) * gl_order_poly(b));
  }
  return s;
}

XSeries nilpotent_class_factor(unsigned order) {
  XSeries s(order);
  for (unsigned a = 0; a <= order; ++a) {
    // q^{a(a+1)/2} / prod_{j<=a}(q^j - 1) times |GL_a| is q^{a^2}.
    s.set_scaled_coeff(a, QPoly::q_power(a * a));
  }
  return s;
}

XSeries pair_class_factor(unsigned m, unsigned order) {
  return nonsingular_class_factor(m, order) * nilpotent_class_factor(order);
}

XSeries product_over_powers(const XSeries& base) {
  if (!(base.coeff(0) == QRat(QPoly(BigInt(1))))) {
    throw std::invalid_argument("factor series must have constant term 1");
  }
  const unsigned n = base.order();
  XSeries acc = XSeries::one(n);
  for (unsigned i = 1; i <= n; ++i) {
    acc = acc * base.substitute_power(i);
  }
  return acc;
}

XSeries class_generating_series(CountSet set, unsigned m, unsigned order) {
  switch (set) {
    case CountSet::pairs:
      return product_over_powers(pair_class_factor(m, order));
    case CountSet::nonsingular:
      return product_over_powers(nonsingular_class_factor(m, order));
    case CountSet::nilpotent:
      return product_over_powers(nilpotent_class_factor(order));
    case CountSet::classes:
      throw std::invalid_argument("class counts have no generating-series form");
  }
  throw std::invalid_argument("unknown count set");
}

QPoly count_polynomial(const XSeries& series, unsigned n) {
  if (n > series.order()) {
    throw std::invalid_argument("series order too small for requested size");
  }
  // Route one: the stored numerator is exactly coeff * |GL_n|.
  const QPoly& direct = series.scaled_coeff(n);

  // Route two: reduce the coefficient to lowest terms, multiply back by
  // |GL_n|, and demand an exact polynomial.  This exercises the rational
  // arithmetic independently of the structural representation.
  const QRat reduced = series.coeff(n) * QRat(gl_order_poly(n));
  const auto poly = reduced.as_polynomial();
  if (!poly) {
    throw InternalError(
        "count is not a polynomial: series coefficient times the group order "
        "left a remainder");
  }
  if (!(*poly == direct)) {
    throw InternalError("count polynomial routes disagree");
  }
  if (!direct.is_zero() && direct.leading() < 0) {
    throw InternalError("count polynomial has a negative leading coefficient");
  }
  return direct;
}

QPoly count_polynomial(CountSet set, unsigned m, unsigned n) {
  return count_polynomial(class_generating_series(set, m, n), n);
}

BigInt count_value_by_series(CountSet set, unsigned m, unsigned n, const BigInt& q) {
  return count_polynomial(set, m, n).eval(q);
}

}  // namespace qcommute
