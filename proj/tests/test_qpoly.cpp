#include "doctest.h"

#include <optional>
#include <vector>

#include "qcommute/qpoly.hpp"

using namespace qcommute;

namespace {
QPoly make(std::vector<long> coeffs) {
  std::vector<BigInt> v(coeffs.begin(), coeffs.end());
  return QPoly(std::move(v));
}
const QPoly q = QPoly::variable();
}  // namespace

TEST_SUITE("qpoly") {

TEST_CASE("construction and normalization") {
  CHECK(QPoly().is_zero());
  CHECK(QPoly(0L).is_zero());
  CHECK(QPoly(1L).is_one());
  CHECK(make({1, 2, 0, 0}).degree() == 1);
  CHECK_FALSE(QPoly().degree().has_value());
  CHECK(q.degree() == 1);
  CHECK(QPoly::q_power(3).degree() == 3);
  CHECK(QPoly::q_power(3, BigInt(-2)).leading() == -2);
  CHECK(QPoly(BigInt(-7)).coeff(0) == -7);
}

TEST_CASE("coefficient access") {
  QPoly p = make({1, 0, -3, 5});
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -3);
  CHECK(p.coeff(3) == 5);
  CHECK(p.coeff(9) == 0);
  CHECK(p.leading() == 5);
  CHECK_THROWS(QPoly().leading());
}

TEST_CASE("ring arithmetic") {
  QPoly a = q + QPoly(1L);
  QPoly b = q - QPoly(1L);
  CHECK(a * b == QPoly::q_power(2) - QPoly(1L));
  CHECK(a + b == make({0, 2}));
  CHECK((a - a).is_zero());
  CHECK(-a == make({-1, -1}));
  CHECK(a * QPoly() == QPoly());
  CHECK(a.scaled(BigInt(3)) == make({3, 3}));
  // (q+1)^2 = q^2 + 2q + 1
  CHECK(a * a == make({1, 2, 1}));
}

TEST_CASE("evaluation over integers and rationals") {
  QPoly p = make({-1, 0, 1});  // q^2 - 1
  CHECK(p.eval(BigInt(5)) == 24);
  CHECK(p.eval(BigInt(-2)) == 3);
  CHECK(p.eval(BigRat(1, 2)) == BigRat(-3, 4));
  // Large exact values do not overflow.
  QPoly big = QPoly::q_power(40);
  CHECK(big.eval(BigInt(5)) == big_pow(BigInt(5), 40));
}

TEST_CASE("content and exact division") {
  CHECK(make({2, 0, -4}).content() == 2);
  CHECK(QPoly().content() == 0);
  CHECK(make({3}).content() == 3);

  auto quot = QPoly::divide_exact(QPoly::q_power(2) - QPoly(1L), q - QPoly(1L));
  REQUIRE(quot.has_value());
  CHECK(*quot == q + QPoly(1L));

  // Remainder -> no quotient.
  CHECK_FALSE(QPoly::divide_exact(QPoly::q_power(2) + QPoly(1L), q + QPoly(1L)).has_value());
  // Non-integer coefficients -> no quotient.
  CHECK_FALSE(QPoly::divide_exact(q + QPoly(1L), QPoly(2L)).has_value());
  // Integer scalar division works when contents divide.
  auto half = QPoly::divide_exact(make({2, 2}), QPoly(2L));
  REQUIRE(half.has_value());
  CHECK(*half == q + QPoly(1L));
}

TEST_CASE("gcd is primitive with positive leading coefficient") {
  CHECK(QPoly::gcd(QPoly::q_power(2) - QPoly(1L), make({1, 2, 1})) == q + QPoly(1L));
  CHECK(QPoly::gcd(make({2, 2}), make({4, 4})) == q + QPoly(1L));
  // Sign normalization.
  CHECK(QPoly::gcd(make({-1, -1}), make({-2, -2})) == q + QPoly(1L));
  CHECK(QPoly::gcd(QPoly(), QPoly()).is_zero());
  CHECK(QPoly::gcd(QPoly(), make({0, 3})) == q);
  // Coprime inputs.
  CHECK(QPoly::gcd(q, q + QPoly(1L)).is_one());
}

TEST_CASE("to_string canonical ASCII") {
  CHECK(QPoly().to_string() == "0");
  CHECK(QPoly(1L).to_string() == "1");
  CHECK(q.to_string() == "q");
  CHECK(make({1, -1}).to_string() == "-q + 1");
  CHECK((QPoly::q_power(2) - QPoly(3L)).to_string() == "q^2 - 3");
  CHECK(make({0, -1, 0, 2, 0}).to_string() == "2*q^3 - q");
  CHECK(make({0, 1, 0, 0, -1, 0, 0, 0, 0, 2}).to_string() == "2*q^9 - q^4 + q");
}

TEST_CASE("rational functions reduce to lowest terms") {
  QRat r(QPoly::q_power(2) - QPoly(1L), q - QPoly(1L));
  auto p = r.as_polynomial();
  REQUIRE(p.has_value());
  CHECK(*p == q + QPoly(1L));

  // Content reduction across numerator and denominator.
  CHECK(QRat(make({2, 2}), QPoly(2L)) == QRat(q + QPoly(1L)));
  // Denominator sign is normalized to positive leading coefficient.
  CHECK(QRat(QPoly(1L), make({1, -1})).to_string() == "-1 / (q - 1)");
  CHECK(QRat(QPoly(1L), q - QPoly(1L)).to_string() == "1 / (q - 1)");
  CHECK_FALSE(QRat(QPoly(1L), q - QPoly(1L)).as_polynomial().has_value());
  CHECK_THROWS(QRat(QPoly(1L), QPoly()));
}

TEST_CASE("rational arithmetic") {
  QRat one_over(QPoly(1L), q - QPoly(1L));
  QRat sum = one_over + QRat(QPoly(1L));
  CHECK(sum == QRat(q, q - QPoly(1L)));
  CHECK(sum.to_string() == "q / (q - 1)");
  CHECK((sum - one_over) == QRat(QPoly(1L)));
  CHECK((one_over * QRat(q - QPoly(1L))) == QRat(QPoly(1L)));
  CHECK((QRat(q) / QRat(q)) == QRat(QPoly(1L)));
  CHECK((-one_over).to_string() == "-1 / (q - 1)");
  CHECK_THROWS(QRat(QPoly(1L)) / QRat(QPoly()));
  CHECK(QRat().is_zero());
}

TEST_CASE("rational evaluation with pole detection") {
  QRat r(q, q - QPoly(1L));
  CHECK(r.eval(BigRat(3)) == BigRat(3, 2));
  CHECK(r.eval(BigRat(1, 2)) == BigRat(-1));  // (1/2)/(-1/2)
  CHECK_THROWS(r.eval(BigRat(1)));
}

}  // TEST_SUITE("qpoly")
