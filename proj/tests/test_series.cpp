#include "doctest.h"

#include <stdexcept>

#include "qcommute/counting.hpp"
#include "qcommute/series.hpp"

using namespace qcommute;

namespace {
const QPoly q = QPoly::variable();
QRat one_rat() { return QRat(QPoly(1L)); }

// (1 - c*x^k) as a truncated series.
XSeries one_minus(unsigned order, unsigned k, const QPoly& c) {
  XSeries s = XSeries::one(order);
  if (k <= order) s.set_coeff(k, QRat(-c) * QRat(QPoly(1L)));
  return s;
}
}  // namespace

TEST_SUITE("series") {

TEST_CASE("zero and one series") {
  XSeries z(6);
  CHECK(z.order() == 6);
  for (unsigned i = 0; i <= 6; ++i) CHECK(z.coeff(i).is_zero());
  XSeries one = XSeries::one(6);
  CHECK(one.coeff(0) == one_rat());
  CHECK(one.coeff(1).is_zero());
  CHECK(one == one + z);
}

TEST_CASE("coefficients store exactly over the group-order denominators") {
  XSeries s(4);
  QRat v(q + QPoly(1L), q - QPoly(1L));
  // (q+1)/(q-1) * |GL_2| is a polynomial, so this is representable.
  s.set_coeff(2, v);
  CHECK(s.coeff(2) == v);
  CHECK(s.scaled_coeff(2) == *QPoly::divide_exact(gl_order_poly(2) * (q + QPoly(1L)),
                                                  q - QPoly(1L)));
  s.set_scaled_coeff(3, QPoly(7L));
  CHECK(s.coeff(3) == QRat(QPoly(7L), gl_order_poly(3)));
  // (q+2) does not divide any |GL_2| multiple.
  CHECK_THROWS(s.set_coeff(2, QRat(QPoly(1L), q + QPoly(2L))));
  CHECK_THROWS(s.coeff(9));
}

TEST_CASE("arithmetic matches hand expansion") {
  // s = 1 + x; s^2 = 1 + 2x + x^2.
  XSeries s = XSeries::one(4);
  s.set_coeff(1, one_rat());
  XSeries sq = s * s;
  CHECK(sq.coeff(0) == one_rat());
  CHECK(sq.coeff(1) == QRat(QPoly(2L)));
  CHECK(sq.coeff(2) == one_rat());
  CHECK(sq.coeff(3).is_zero());
  CHECK((s - s).coeff(1).is_zero());
  CHECK((s + s).coeff(1) == QRat(QPoly(2L)));
  // Truncation: multiplying keeps the order.
  CHECK(sq.order() == 4);
  // Mismatched orders are rejected.
  CHECK_THROWS(s + XSeries::one(5));
}

TEST_CASE("substitute_power spreads coefficients") {
  XSeries s = XSeries::one(8);
  s.set_coeff(1, QRat(q));
  s.set_coeff(2, QRat(QPoly(3L)));
  XSeries t = s.substitute_power(3);
  CHECK(t.coeff(0) == one_rat());
  CHECK(t.coeff(1).is_zero());
  CHECK(t.coeff(2).is_zero());
  CHECK(t.coeff(3) == QRat(q));
  CHECK(t.coeff(6) == QRat(QPoly(3L)));
  CHECK(t.coeff(7).is_zero());
  CHECK(s.substitute_power(1) == s);
}

TEST_CASE("invertible-side factor: coefficient of x^b is q^floor(b/m)") {
  for (unsigned m = 1; m <= 4; ++m) {
    XSeries g = nonsingular_class_factor(m, 9);
    for (unsigned b = 0; b <= 9; ++b) {
      CHECK(g.coeff(b) == QRat(QPoly::q_power(b / m)));
    }
  }
}

TEST_CASE("invertible-side factor closed form (1-x^m) / ((1-x)(1-q x^m))") {
  for (unsigned m : {1u, 2u, 3u}) {
    const unsigned order = 10;
    XSeries g = nonsingular_class_factor(m, order);
    XSeries lhs = g * one_minus(order, 1, QPoly(1L)) * one_minus(order, m, q);
    CHECK(lhs == one_minus(order, m, QPoly(1L)));
  }
}

TEST_CASE("nilpotent-side factor coefficients") {
  XSeries h = nilpotent_class_factor(6);
  CHECK(h.coeff(0) == one_rat());
  CHECK(h.coeff(1) == QRat(q, q - QPoly(1L)));
  CHECK(h.coeff(2) == QRat(QPoly::q_power(3),
                           (q - QPoly(1L)) * (QPoly::q_power(2) - QPoly(1L))));
  // General shape q^{a(a+1)/2} / prod (q^j - 1).
  for (unsigned a = 0; a <= 6; ++a) {
    QPoly den(1L);
    for (unsigned j = 1; j <= a; ++j) den = den * (QPoly::q_power(j) - QPoly(1L));
    CHECK(h.coeff(a) == QRat(QPoly::q_power(a * (a + 1) / 2), den));
  }
}

TEST_CASE("Euler identity for the nilpotent factor: (1-x) H(x) = H(x/q)") {
  // Coefficientwise: h_a - h_{a-1} = h_a / q^a.
  XSeries h = nilpotent_class_factor(8);
  for (unsigned a = 1; a <= 8; ++a) {
    QRat lhs = h.coeff(a) - h.coeff(a - 1);
    QRat rhs = h.coeff(a) * QRat(QPoly(1L), QPoly::q_power(a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pair factor is the product of the two sides") {
  for (unsigned m : {1u, 2u, 3u, 4u}) {
    CHECK(pair_class_factor(m, 8) ==
          nonsingular_class_factor(m, 8) * nilpotent_class_factor(8));
  }
}

TEST_CASE("product over powers") {
  // For base = 1 + x: prod (1 + x^i) is the distinct-parts partition series.
  XSeries base = XSeries::one(8);
  base.set_coeff(1, one_rat());
  XSeries prod = product_over_powers(base);
  // Number of partitions into distinct parts: 1,1,1,2,2,3,4,5,6.
  const long expect[] = {1, 1, 1, 2, 2, 3, 4, 5, 6};
  for (unsigned i = 0; i <= 8; ++i) CHECK(prod.coeff(i) == QRat(QPoly(expect[i])));
  // Constant term must be 1.
  XSeries bad(4);
  CHECK_THROWS_AS((product_over_powers(bad)), std::invalid_argument);
}

TEST_CASE("generating series pinned leading coefficients") {
  XSeries k2 = class_generating_series(CountSet::pairs, 2, 4);
  CHECK(k2.coeff(0) == one_rat());
  CHECK(k2.coeff(1).to_string() == "(2*q - 1) / (q - 1)");

  XSeries n1 = class_generating_series(CountSet::nilpotent, 1, 4);
  CHECK(n1.coeff(1).to_string() == "q / (q - 1)");

  XSeries k1 = class_generating_series(CountSet::pairs, 1, 4);
  CHECK(k1.coeff(1) == QRat(QPoly::q_power(2), q - QPoly(1L)));

  // The nilpotent series ignores m entirely.
  CHECK(class_generating_series(CountSet::nilpotent, 3, 6) ==
        class_generating_series(CountSet::nilpotent, 1, 6));

  CHECK_THROWS_AS((class_generating_series(CountSet::classes, 1, 4)), std::invalid_argument);
}

TEST_CASE("count polynomials: pinned formulas") {
  CHECK(count_polynomial(CountSet::nilpotent, 1, 2).to_string() == "2*q^4 - q^2");
  CHECK(count_polynomial(CountSet::nilpotent, 1, 3).to_string() ==
        "3*q^9 + q^8 - q^7 - 2*q^6 - q^5 + q^4");
  CHECK(count_polynomial(CountSet::nilpotent, 1, 4).to_string() ==
        "5*q^16 + 2*q^15 - 3*q^13 - 5*q^12 - q^11 + 3*q^9 + q^8 - q^7");
  CHECK(count_polynomial(CountSet::pairs, 1, 2).to_string() == "q^6 + q^5 - q^3");
  CHECK(count_polynomial(CountSet::pairs, 2, 2).to_string() ==
        "q^5 + 3*q^4 - 2*q^3 - 2*q^2 + q");
  CHECK(count_polynomial(CountSet::pairs, 1, 3).to_string() ==
        "q^12 + q^11 + 2*q^10 - 2*q^8 - 2*q^7 + q^5");
  CHECK(count_polynomial(CountSet::pairs, 2, 3).to_string() ==
        "2*q^10 + 7*q^9 - 3*q^8 - 6*q^7 - 4*q^6 + 3*q^5 + 4*q^4 - 2*q^3");
  CHECK(count_polynomial(CountSet::nonsingular, 1, 2).to_string() ==
        "q^6 - 2*q^4 + q^2");
  CHECK(count_polynomial(CountSet::nonsingular, 2, 2).to_string() ==
        "q^5 - 2*q^3 + q");
  CHECK(count_polynomial(CountSet::nonsingular, 3, 2).to_string() ==
        "2*q^4 - 2*q^3 - 2*q^2 + 2*q");
  CHECK(count_polynomial(CountSet::nonsingular, 1, 3).to_string() ==
        "q^12 - q^10 - 2*q^9 + 2*q^7 + q^6 - q^4");
  CHECK(count_polynomial(CountSet::nonsingular, 2, 3).to_string() ==
        "q^10 + q^9 - 3*q^8 - 2*q^7 + q^6 + 3*q^5 + q^4 - 2*q^3");
  CHECK(count_polynomial(CountSet::nonsingular, 3, 3) ==
        count_polynomial(CountSet::nonsingular, 2, 3));
  CHECK(count_polynomial(CountSet::pairs, 2, 0).is_one());
}

TEST_CASE("count polynomial degrees and leading signs") {
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      QPoly k = count_polynomial(CountSet::pairs, m, n);
      QPoly u = count_polynomial(CountSet::nonsingular, m, n);
      CHECK(k.degree() == n * n + n / m);
      CHECK(u.degree() == n * n + n / m);
      CHECK(k.leading() > 0);
      CHECK(u.leading() > 0);
    }
  }
  for (unsigned n = 1; n <= 6; ++n) {
    QPoly nn = count_polynomial(CountSet::nilpotent, 1, n);
    CHECK(nn.degree() == n * n);
    CHECK(nn.leading() > 0);
  }
  // Stability once m exceeds n.
  for (unsigned n = 1; n <= 4; ++n) {
    QPoly base = count_polynomial(CountSet::pairs, n + 1, n);
    CHECK(count_polynomial(CountSet::pairs, n + 2, n) == base);
    CHECK(count_polynomial(CountSet::pairs, n + 5, n) == base);
  }
}

TEST_CASE("prebuilt series route agrees with the one-shot route") {
  XSeries series = class_generating_series(CountSet::pairs, 2, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(count_polynomial(series, n) == count_polynomial(CountSet::pairs, 2, n));
  }
}

TEST_CASE("series evaluation equals the closed forms") {
  for (long q : {2, 3, 5}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 0; n <= 4; ++n) {
        CHECK(count_value_by_series(CountSet::pairs, m, n, BigInt(q)) ==
              count_pairs(n, m, BigInt(q)));
        CHECK(count_value_by_series(CountSet::nonsingular, m, n, BigInt(q)) ==
              count_nonsingular(n, m, BigInt(q)));
        CHECK(count_value_by_series(CountSet::nilpotent, m, n, BigInt(q)) ==
              count_nilpotent(n, BigInt(q)));
      }
    }
  }
  // Polynomial evaluation matches a pinned oracle-frozen value.
  CHECK(count_polynomial(CountSet::pairs, 2, 3).eval(BigInt(3)) == 221157);
  CHECK(count_polynomial(CountSet::nonsingular, 2, 3).eval(BigInt(3)) == 56160);
}

TEST_CASE("full-series convolution: pair series = invertible series x nilpotent series") {
  for (unsigned m : {1u, 2u, 3u}) {
    XSeries k = class_generating_series(CountSet::pairs, m, 8);
    XSeries u = class_generating_series(CountSet::nonsingular, m, 8);
    XSeries nil = class_generating_series(CountSet::nilpotent, m, 8);
    CHECK(k == u * nil);
  }
}

}  // TEST_SUITE("series")
